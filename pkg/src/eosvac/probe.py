"""Probe-pulse spectrum, detector efficiency and spectral autocorrelation.

The sampling probe is described by its (real, flat-phase) spectral
amplitude.  The reference configuration uses a rectangular spectrum of full
width ``delta_omega`` centred at ``omega_c``; arbitrary measured spectra can
be supplied as tabulated amplitudes with linear interpolation.

Detection-weighted averages use the spectrometer efficiency ``eta(omega)``,
by default a hard step that is unity above 2*pi*30 THz and zero below
(photodetectors see nothing in the far infrared).

Quantities derived here:

* ``avg_detected_frequency`` -- the mean detected probe frequency
  ``omega_p = int eta |a|^2 domega / int (eta/omega) |a|^2 domega``,
  which for the rectangular spectrum with flat efficiency reduces to
  ``delta_omega / ln(omega_hi/omega_lo)``.
* ``autocorrelation_f`` -- the normalized spectral autocorrelation
  ``f(W) = (f_plus*(W) + f_minus(W)) / 2`` with
  ``f_pm(W) = int eta a*(w) a(w +- W) dw / int eta |a|^2 dw``.
  For the rectangular spectrum this is the isosceles triangle
  ``f(W) = (1 - |W|/delta_omega)`` on ``|W| < delta_omega`` and zero
  outside.
* ``temporal_intensity`` -- the probe intensity profile and its envelope,
  for plotting.
"""

from dataclasses import dataclass

import numpy as np

from .numint import QuadratureSpec, integrate_1d
from .physunits import thz_to_angular

#: default hard low-frequency edge of the detector response [rad/s]
# defined via the shared converter so comparisons against converted user
# values (exactly 30 THz) agree bit for bit
DEFAULT_ETA_THRESHOLD = thz_to_angular(30.0)

PROBE_SHAPES = ("rectangular", "tabulated")


class DetectorEfficiency:
    """Spectrometer/detector efficiency eta(omega) with values in [0, 1].

    Wraps an arbitrary callable; ``threshold`` (if not None) marks a known
    discontinuity that integration routines use as a breakpoint.
    """

    def __init__(self, fn, threshold=None):
        self._fn = fn
        self.threshold = threshold

    def __call__(self, omega):
        return self._fn(omega)

    @classmethod
    def default(cls):
        """Hard step: 1 at and above 2*pi*30 THz, 0 below."""
        thr = DEFAULT_ETA_THRESHOLD

        def step(omega):
            return np.where(np.asarray(omega, dtype=float) >= thr, 1.0, 0.0)[()]

        return cls(step, threshold=thr)

    @classmethod
    def unit(cls):
        """Flat unit efficiency (ideal detection at all frequencies)."""
        return cls(lambda omega: np.ones_like(np.asarray(omega, dtype=float))[()])


@dataclass(frozen=True)
class TabulatedSpectrum:
    """Sampled spectral amplitude |a(omega)|, linearly interpolated.

    ``omega`` must be strictly increasing; the amplitude is taken to vanish
    outside the tabulated range.
    """

    omega: np.ndarray
    amplitude: np.ndarray

    def __post_init__(self):
        om = np.asarray(self.omega, dtype=float)
        am = np.asarray(self.amplitude, dtype=float)
        if om.ndim != 1 or om.size < 2 or om.shape != am.shape:
            raise ValueError("need matching 1-d omega/amplitude arrays with >= 2 points")
        if np.any(np.diff(om) <= 0) or om[0] <= 0:
            raise ValueError("omega samples must be positive and strictly increasing")
        if np.any(am < 0):
            raise ValueError("amplitudes must be non-negative")
        object.__setattr__(self, "omega", om)
        object.__setattr__(self, "amplitude", am)

    def __call__(self, omega):
        return np.interp(omega, self.omega, self.amplitude, left=0.0, right=0.0)


@dataclass(frozen=True)
class ProbeSpec:
    """Probe-pulse description.

    ``omega_c`` and ``delta_omega`` are the centre angular frequency and
    full spectral width (rad/s); ``photons_n`` the photon number per pulse;
    ``delay_tau`` the sampling delay (s).  ``shape`` selects between the
    rectangular reference spectrum and a tabulated one (``spectrum`` must
    then be given).
    """

    omega_c: float
    delta_omega: float
    photons_n: float
    delay_tau: float = 0.0
    shape: str = "rectangular"
    spectrum: TabulatedSpectrum | None = None

    def __post_init__(self):
        if self.shape not in PROBE_SHAPES:
            raise ValueError(f"unknown probe shape {self.shape!r}")
        if self.delta_omega <= 0:
            raise ValueError("delta_omega must be positive")
        if self.omega_c - 0.5 * self.delta_omega <= 0:
            raise ValueError("spectrum must stay at positive frequencies")
        if self.photons_n <= 0:
            raise ValueError("photons_n must be positive")
        if (self.shape == "tabulated") != (self.spectrum is not None):
            raise ValueError("tabulated shape requires a spectrum table (and only then)")

    @classmethod
    def from_table(cls, spectrum, photons_n, delay_tau=0.0):
        """Build a tabulated probe; centre/width derive from the table span."""
        lo, hi = float(spectrum.omega[0]), float(spectrum.omega[-1])
        return cls(
            omega_c=0.5 * (lo + hi),
            delta_omega=hi - lo,
            photons_n=photons_n,
            delay_tau=delay_tau,
            shape="tabulated",
            spectrum=spectrum,
        )

    @property
    def omega_lo(self):
        return self.omega_c - 0.5 * self.delta_omega

    @property
    def omega_hi(self):
        return self.omega_c + 0.5 * self.delta_omega

    def amplitude(self, omega):
        """Spectral amplitude |a(omega)| (arbitrary units, cancels in ratios)."""
        omega = np.asarray(omega, dtype=float)
        if self.shape == "rectangular":
            inside = (omega >= self.omega_lo) & (omega <= self.omega_hi)
            return np.where(inside, 1.0, 0.0)[()]
        return self.spectrum(omega)

    def _amplitude_breakpoints(self):
        if self.shape == "rectangular":
            return [self.omega_lo, self.omega_hi]
        return list(self.spectrum.omega)


def _eta_breakpoints(eta):
    thr = getattr(eta, "threshold", None)
    return [] if thr is None else [thr]


def _norm_integral(p, eta, quad):
    """int eta |a|^2 domega over the probe support."""
    bp = p._amplitude_breakpoints() + _eta_breakpoints(eta)
    val, _ = integrate_1d(
        lambda w: float(eta(w)) * float(p.amplitude(w)) ** 2,
        (p.omega_lo, p.omega_hi),
        quad,
        breakpoints=bp,
    )
    return val


def avg_detected_frequency(p, eta=None, quad=None):
    """Mean detected probe frequency omega_p (rad/s).

    omega_p = int eta |a|^2 domega / int (eta/omega) |a|^2 domega.
    Raises ValueError when the detected spectrum is degenerate (zero
    weight under eta).
    """
    if eta is None:
        eta = DetectorEfficiency.default()
    if quad is None:
        quad = QuadratureSpec(rel_tol=1e-12)
    num = _norm_integral(p, eta, quad)
    if num <= 0.0:
        raise ValueError("degenerate probe spectrum: zero detected weight")
    bp = p._amplitude_breakpoints() + _eta_breakpoints(eta)
    den, _ = integrate_1d(
        lambda w: float(eta(w)) * float(p.amplitude(w)) ** 2 / w,
        (p.omega_lo, p.omega_hi),
        quad,
        breakpoints=bp,
    )
    return num / den


def rect_avg_frequency(p):
    """Closed form of omega_p for the rectangular spectrum with flat eta."""
    if p.shape != "rectangular":
        raise ValueError("closed form only applies to the rectangular shape")
    return p.delta_omega / np.log(p.omega_hi / p.omega_lo)


def autocorrelation_f(p, eta=None, big_omega=0.0):
    """Normalized spectral autocorrelation f(W), dimensionless.

    Accepts scalar or array ``big_omega``.  For the rectangular spectrum
    with the default (flat-over-support) efficiency the analytic triangle
    (1 - |W|/delta_omega) is used; otherwise the overlap integrals are
    evaluated numerically.
    """
    if eta is None:
        eta = DetectorEfficiency.default()
    w = np.asarray(big_omega, dtype=float)
    if p.shape == "rectangular" and _eta_flat_over_support(p, eta):
        return np.clip(1.0 - np.abs(w) / p.delta_omega, 0.0, None)[()]
    flat = np.ravel(w)
    out = np.array([autocorrelation_f_overlap(p, eta, float(x)) for x in flat])
    return out.reshape(w.shape)[()]


def _eta_flat_over_support(p, eta):
    """True when eta is constant and positive across the probe support.

    The overlap integrands carry a bare a(omega) factor, so only the
    support [omega_lo, omega_hi] matters -- shifts never move eta.
    """
    thr = getattr(eta, "threshold", None)
    if thr is not None and p.omega_lo < thr <= p.omega_hi:
        return False
    probes = np.linspace(p.omega_lo, p.omega_hi, 7)
    vals = np.asarray([float(eta(x)) for x in probes])
    return bool(np.all(np.abs(vals - vals[0]) < 1e-15) and vals[0] > 0)


def autocorrelation_f_overlap(p, eta=None, big_omega=0.0, quad=None):
    """Numeric overlap route for f(W); exact for piecewise-linear spectra.

    f_pm(W) = int eta(w) a(w) a(w +- W) dw / int eta |a|^2 dw and
    f(W) = (f_plus + f_minus) / 2 (real spectra).  Panel edges of both the
    direct and the shifted amplitude are passed to the integrator so each
    panel is polynomial and Simpson integrates it exactly.
    """
    if eta is None:
        eta = DetectorEfficiency.default()
    if quad is None:
        quad = QuadratureSpec(rel_tol=1e-12)
    shift = float(big_omega)
    norm = _norm_integral(p, eta, quad)
    if norm <= 0.0:
        raise ValueError("degenerate probe spectrum: zero detected weight")
    base_bp = p._amplitude_breakpoints() + _eta_breakpoints(eta)

    def overlap(sign):
        bp = base_bp + [x - sign * shift for x in p._amplitude_breakpoints()]
        val, _ = integrate_1d(
            lambda w: float(eta(w))
            * float(p.amplitude(w))
            * float(p.amplitude(w + sign * shift)),
            (p.omega_lo, p.omega_hi),
            quad,
            breakpoints=bp,
        )
        return val

    return 0.5 * (overlap(+1.0) + overlap(-1.0)) / norm


def temporal_intensity(p, t):
    """Probe intensity profile and envelope, normalized to unit peak envelope.

    Parameters
    ----------
    p : ProbeSpec
    t : array_like
        Times in seconds (relative to the pulse centre).

    Returns
    -------
    (intensity, envelope) : tuple of ndarray
        ``intensity`` carries the optical carrier, ``envelope`` its
        magnitude-squared Hilbert envelope.
    """
    t = np.asarray(t, dtype=float)
    if p.shape == "rectangular":
        # analytic signal of the flat rectangle: dw * e^{-i wc t} sinc(dw t / 2)
        s = np.sinc(p.delta_omega * t / (2.0 * np.pi))
        return (s * np.cos(p.omega_c * t)) ** 2, s**2
    grid = np.linspace(p.omega_lo, p.omega_hi, 4096)
    amp = p.amplitude(grid)
    kernel = np.exp(-1j * np.outer(t, grid))
    analytic = np.trapezoid(kernel * amp, grid, axis=-1)
    peak = np.max(np.abs(analytic)) ** 2
    return (analytic.real**2 / peak, np.abs(analytic) ** 2 / peak)
