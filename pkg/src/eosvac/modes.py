"""Laguerre-Gaussian transverse modes and their overlap integrals.

The paraxial self-consistency of the detection scheme rests on a few
transverse-mode facts collected here:

* the full LG mode basis LG_lp(r_perp, phi, r_par) for a beam of waist w0
  and wavenumber k, normalized to int |LG|^2 d^2r = 1 in every transverse
  plane;
* the waist-plane profiles g_lp(r_perp, phi) (the r_par = 0 slice), with
  the fundamental g_00 = sqrt(2/pi) / w0 * exp(-r_perp^2 / w0^2);
* the overlap of the probe *intensity* profile g_00^2 (waist w0) with a
  THz mode g'_lp of waist w0/sqrt(2), which collapses to
  (1 / (sqrt(pi) w0)) * delta_l0 * delta_p0 -- only the fundamental THz
  mode is sampled, and the sampled THz beam is narrower than the probe by
  sqrt(2);
* the paraxial validity ratio l / (k_W w0^2 / 2) comparing the crystal
  thickness to the THz Rayleigh range.  Values approaching or exceeding 1
  mean the paraxial single-plane picture degrades; this is advisory only
  and never blocks a computation.

Radial integrals use Gauss-Legendre quadrature on [0, 8 * max(waist)]
(the integrands decay like exp(-2 r^2 / w^2), so the tail is negligible)
composed with a uniform trapezoid in azimuth, which is exact for the
finite Fourier content exp(i (l - l') phi).
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .physunits import C0


@dataclass(frozen=True)
class LGModeIndex:
    """Azimuthal index l (any integer) and radial index p >= 0."""

    l: int
    p: int

    def __post_init__(self):
        if int(self.p) < 0:
            raise ValueError("radial index p must be >= 0")
        object.__setattr__(self, "l", int(self.l))
        object.__setattr__(self, "p", int(self.p))


@dataclass(frozen=True)
class ModeGeometry:
    """Beam waist w0 (m) and wavenumber k (rad/m) of an LG mode family."""

    waist: float
    k: float

    def __post_init__(self):
        if self.waist <= 0 or self.k <= 0:
            raise ValueError("waist and wavenumber must be positive")

    @property
    def rayleigh_range(self):
        """l_R = k w0^2 / 2."""
        return 0.5 * self.k * self.waist**2


def assoc_laguerre(p, alpha, x):
    """Associated Laguerre polynomial L_p^alpha(x) by the stable recurrence.

    (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1},
    upward in the degree, which is well conditioned for the x >= 0,
    alpha >= 0 arguments used here.
    """
    if p < 0:
        raise ValueError("degree p must be >= 0")
    x = np.asarray(x, dtype=float)
    lk_minus = np.ones_like(x)
    if p == 0:
        return lk_minus[()]
    lk = 1.0 + alpha - x
    for k in range(1, p):
        lk, lk_minus = (((2 * k + 1 + alpha - x) * lk - (k + alpha) * lk_minus) / (k + 1), lk)
    return lk[()]


def _norm_const(idx, w):
    # sqrt(2 p! / (pi (|l| + p)!)) / w, in log space to dodge overflow
    log_ratio = math.lgamma(idx.p + 1) - math.lgamma(abs(idx.l) + idx.p + 1)
    return math.sqrt(2.0 / math.pi) * math.exp(0.5 * log_ratio) / w


def waist_mode(idx, waist, r_perp, phi):
    """Waist-plane LG profile g_lp(r_perp, phi) for beam waist ``waist``.

    g_lp = sqrt(2 p! / (pi (|l|+p)!)) / w0 * (sqrt(2) r/w0)^|l|
           * L_p^|l|(2 r^2 / w0^2) * exp(-r^2/w0^2 + i l phi),
    so that the family is orthonormal under int g* g d^2r.
    """
    r = np.asarray(r_perp, dtype=float)
    if np.any(r < 0):
        raise ValueError("radial coordinate must be >= 0")
    la = abs(idx.l)
    u = 2.0 * r**2 / waist**2
    radial = (
        _norm_const(idx, waist)
        * (np.sqrt(2.0) * r / waist) ** la
        * assoc_laguerre(idx.p, la, u)
        * np.exp(-(r**2) / waist**2)
    )
    return (radial * np.exp(1j * idx.l * np.asarray(phi, dtype=float)))[()]


def lg_mode(idx, geo, r_perp, phi, r_par):
    """Full LG mode at longitudinal position ``r_par`` (m from the waist).

    Includes the usual beam expansion w(z) = w0 sqrt(1 + z^2/l_R^2), the
    wavefront curvature phase k r^2 / (2 R(z)) with
    R(z) = z (1 + l_R^2/z^2), and the Gouy phase
    -(2p + |l| + 1) arctan(z / l_R).  At r_par = 0 this reduces exactly to
    :func:`waist_mode` (same code path, bit-identical values).
    """
    z = float(r_par)
    if z == 0.0:
        return waist_mode(idx, geo.waist, r_perp, phi)
    r = np.asarray(r_perp, dtype=float)
    if np.any(r < 0):
        raise ValueError("radial coordinate must be >= 0")
    lr = geo.rayleigh_range
    w = geo.waist * math.sqrt(1.0 + (z / lr) ** 2)
    radius = z * (1.0 + (lr / z) ** 2)
    gouy = -(2 * idx.p + abs(idx.l) + 1) * math.atan2(z, lr)
    la = abs(idx.l)
    u = 2.0 * r**2 / w**2
    radial = (
        _norm_const(idx, w)
        * (np.sqrt(2.0) * r / w) ** la
        * assoc_laguerre(idx.p, la, u)
        * np.exp(-(r**2) / w**2)
    )
    phase = idx.l * np.asarray(phi, dtype=float) + geo.k * r**2 / (2.0 * radius) + gouy
    return (radial * np.exp(1j * phase))[()]


def _polar_quadrature(max_waist, n_radial, n_phi):
    """Nodes/weights for int d^2r = int r dr dphi over a truncated disc."""
    x, wx = np.polynomial.legendre.leggauss(n_radial)
    rmax = 8.0 * max_waist
    r = 0.5 * rmax * (x + 1.0)
    wr = 0.5 * rmax * wx * r  # includes the Jacobian r
    phi = np.arange(n_phi) * (2.0 * np.pi / n_phi)
    wphi = 2.0 * np.pi / n_phi
    return r, wr, phi, wphi


def mode_norm(idx_a, idx_b, geo_a, geo_b=None, n_radial=160):
    """Overlap int g*_a g_b d^2r of two waist-plane modes.

    With a shared geometry this is the Gram matrix entry, which equals
    delta_{ab} by orthonormality.  The quadrature is repeated at doubled
    radial order and the run is rejected if the two estimates disagree
    beyond 1e-10 (non-convergence guard).
    """
    if geo_b is None:
        geo_b = geo_a
    n_phi = 4 * (abs(idx_a.l) + abs(idx_b.l)) + 8

    def estimate(nr):
        r, wr, phi, wphi = _polar_quadrature(max(geo_a.waist, geo_b.waist), nr, n_phi)
        ga = waist_mode(idx_a, geo_a.waist, r[:, None], phi[None, :])
        gb = waist_mode(idx_b, geo_b.waist, r[:, None], phi[None, :])
        return complex(np.sum(np.conj(ga) * gb * wr[:, None] * wphi))

    coarse = estimate(n_radial)
    fine = estimate(2 * n_radial)
    if abs(fine - coarse) > 1e-10:
        raise RuntimeError(
            f"mode overlap quadrature did not converge: |delta| = {abs(fine - coarse):.3e}"
        )
    return fine


def pump_probe_overlap(idx, waist_w0):
    """Closed-form overlap int g_00^2(w0) g'_lp(w0/sqrt(2)) d^2r.

    The probe intensity g_00^2 at waist w0 projects onto THz modes of
    waist w0/sqrt(2); expanding in Laguerre polynomials leaves
    1/(sqrt(pi) w0) for (l, p) = (0, 0) and exactly zero otherwise.
    """
    if waist_w0 <= 0:
        raise ValueError("waist must be positive")
    if idx.l == 0 and idx.p == 0:
        return 1.0 / (math.sqrt(math.pi) * waist_w0)
    return 0.0


def pump_probe_overlap_numeric(idx, waist_w0, n_radial=200):
    """Quadrature route for the pump/probe overlap (testing/verification)."""
    thz_waist = waist_w0 / math.sqrt(2.0)
    n_phi = 4 * abs(idx.l) + 8
    r, wr, phi, wphi = _polar_quadrature(waist_w0, n_radial, n_phi)
    g00 = waist_mode(LGModeIndex(0, 0), waist_w0, r[:, None], phi[None, :])
    glp = waist_mode(idx, thz_waist, r[:, None], phi[None, :])
    val = complex(np.sum(g00**2 * glp * wr[:, None] * wphi))
    return val.real if abs(val.imag) < 1e-12 * max(abs(val.real), 1.0) else val


def paraxial_validity(geometry, phonon, omega):
    """Crystal thickness over the THz Rayleigh range, l / (k_W w0^2 / 2).

    k_W = n_W(omega) * omega / c0 uses the THz-band index.  Ratios of
    order 1 or larger mean the THz mode diverges appreciably inside the
    crystal; a warning is emitted but the value is always returned.
    """
    omega = np.asarray(omega, dtype=float)
    if np.any(omega <= 0):
        raise ValueError("omega must be positive")
    k_thz = phonon.n(omega) * omega / C0
    ratio = geometry.length_l / (0.5 * k_thz * geometry.waist_w0**2)
    if np.any(ratio >= 1.0):
        warnings.warn(
            "paraxial validity ratio >= 1: single-plane sampling picture degrades",
            stacklevel=2,
        )
    return ratio[()]
