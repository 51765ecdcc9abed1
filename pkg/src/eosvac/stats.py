"""Noise statistics of electro-optically sampled vacuum.

The measured signal splits into the electro-optic part (THz vacuum mapped
onto the probe) and the intrinsic shot noise of the N-photon probe.  The
two are uncorrelated, so the variances add:

    var_total = var_eo + var_sn,        var_sn = N (exactly).

For a bare (unsqueezed) THz vacuum the electro-optic variance is

    var_eo = N^2 * (n^3 l omega_p r41 / c0)^2
             * hbar * int W (n/n_W) R0(W)^2 dW / (4 pi^2 eps0 c0 n w0^2),

conveniently factored into the *sampling gain* n^3 l omega_p r41 / c0
(metres per volt) and the rms *effective vacuum field*

    e_rms = sqrt( hbar int W (n/n_W) R0^2 dW / (4 pi^2 eps0 c0 n w0^2) )

in V/m.  Their product kappa = gain * e_rms = sqrt(var_eo)/N is the
scale-free figure of merit of the sampler: shot noise and vacuum noise
balance at the crossover photon number N* = 1/kappa^2, where the total
rms exceeds the bare shot noise by exactly sqrt(2) - 1.
"""

from dataclasses import dataclass

import numpy as np

from .numint import QuadratureSpec
from .physunits import C0, EPS0, HBAR
from .probe import avg_detected_frequency
from .response import variance_integral

#: RNG algorithm recorded alongside synthetic traces
TRACE_GENERATOR = "numpy-pcg64"


@dataclass(frozen=True)
class EffectiveField:
    """Sampling gain (m/V) and rms effective vacuum field (V/m)."""

    e_rms: float
    sampling_gain: float


@dataclass(frozen=True)
class SignalStats:
    """Variance budget of the sampled signal at a given photon number.

    ``kappa`` is sqrt(var_eo)/N; ``rms_total`` = sqrt(var_eo + var_sn);
    ``ratio_excess`` = (rms_total - sqrt(var_sn)) / sqrt(var_sn).
    """

    photons_n: float
    var_eo: float
    var_sn: float
    kappa: float

    @property
    def rms_total(self):
        return float(np.sqrt(self.var_eo + self.var_sn))

    @property
    def ratio_excess(self):
        return float(self.rms_total / np.sqrt(self.var_sn) - 1.0)


def effective_vacuum_field(rt, geometry, omega_p, quad=None):
    """EffectiveField for a detection response and crystal geometry.

    ``omega_p`` is the mean detected probe frequency (rad/s); the spectral
    integral runs over the tabulated response range.
    """
    integral = variance_integral(rt, quad)
    e2 = HBAR * integral / (4.0 * np.pi**2 * EPS0 * C0 * geometry.n * geometry.waist_w0**2)
    gain = geometry.n**3 * geometry.length_l * omega_p * geometry.r41 / C0
    return EffectiveField(e_rms=float(np.sqrt(e2)), sampling_gain=float(gain))


def eos_variance_pv(p, eta, geometry, rt, quad=None):
    """SignalStats of a pure (unsqueezed) THz vacuum.

    The response table supplies the phase-matching filter; ``geometry``
    the prefactor (so the quadratic scalings in N, r41 and l can be probed
    independently of the response).  var_sn is assigned N exactly.
    """
    if quad is None:
        quad = QuadratureSpec()
    omega_p = avg_detected_frequency(p, eta)
    field = effective_vacuum_field(rt, geometry, omega_p, quad)
    kappa = field.sampling_gain * field.e_rms
    n = p.photons_n
    return SignalStats(
        photons_n=float(n),
        var_eo=(kappa * n) ** 2,
        var_sn=float(n),
        kappa=float(kappa),
    )


def crossover_photon_number(stats):
    """N* = 1/kappa^2 where vacuum noise overtakes shot noise.

    Raises ValueError for kappa = 0 (no electro-optic coupling, hence no
    crossover at any photon number).
    """
    if stats.kappa == 0.0:
        raise ValueError("kappa is zero: no shot-noise/vacuum crossover exists")
    return 1.0 / stats.kappa**2


def sweep_photon_number(stats, n_values):
    """Noise-to-photon ratios across photon numbers.

    Returns an array with columns (N, rms_total/N, sqrt(N)/N, excess)
    where excess = sqrt(1 + kappa^2 N) - 1 is the relative noise above
    bare shot noise.  All N must be positive.
    """
    n = np.asarray(n_values, dtype=float)
    if np.any(n <= 0):
        raise ValueError("photon numbers must be positive")
    kappa = stats.kappa
    rms = np.sqrt(kappa**2 * n**2 + n)
    sn = np.sqrt(n)
    return np.column_stack([n, rms / n, sn / n, rms / sn - 1.0])


def synth_traces(stats, count, seed):
    """Synthetic per-pulse signals: zero-mean Gaussian draws.

    The variance is the total ``var_eo + var_sn`` of ``stats``.  Sampling
    uses numpy's PCG64 generator (128-bit state) seeded with ``seed``;
    identical seeds reproduce identical traces bit for bit.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = np.random.Generator(np.random.PCG64(seed))
    sigma = float(np.sqrt(stats.var_eo + stats.var_sn))
    return rng.normal(0.0, sigma, int(count))
