"""Delay-dependent noise of squeezed multi-THz vacua.

Squeezing a band [W1, W2] of the THz vacuum (band centre W_c, squeeze
parameter r, phase theta) turns the delay-independent vacuum variance into
an oscillating trace.  Relative to the bare-vacuum electro-optic variance,

    ratio(tau) = 1 + 2 a M + 2 b sqrt(M (M+1)) cos(theta - 2 W_c tau),

with M = sinh r (the squeeze magnitude in the convention adopted
throughout; the conventional photon-number reading M = sinh^2 r is
available via ``convention="sinh2"``).  The band coefficients

    a = I_a / I,   b = I_b / I,
    I   = int_0^inf  rho(W)^2 dW,
    I_a = int_W1^W2  rho(W)^2 dW,
    I_b = int_W1^W2  rho(W) rho(2 W_c - W) dW,

weigh the squeezed band (a) and its phase-conjugate pairing (b) with the
detection amplitude rho(W) = sqrt(W / n_W) * R0(W).  The
Cauchy-Bunyakovsky-Schwarz inequality forces b <= a <= 1, so the minimum
1 + 2aM - 2b sqrt(M(M+1)) stays positive: detected vacuum noise can be
reduced below the bare-vacuum level but never suppressed completely.
The trace is periodic in delay with period pi / W_c, and its mean over
one period is 1 + 2 a M.
"""

import math
from dataclasses import dataclass

import numpy as np

from .numint import QuadratureSpec, find_root, integrate_1d

M_CONVENTIONS = ("sinh", "sinh2")


@dataclass(frozen=True)
class SqueezeSpec:
    """Squeezed band [omega1, omega2] (rad/s), parameter r and phase theta."""

    omega1: float
    omega2: float
    r: float
    theta: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.omega1 < self.omega2:
            raise ValueError("need 0 < omega1 < omega2")
        if self.r < 0:
            raise ValueError("squeeze parameter r must be >= 0")

    @property
    def omega_c(self):
        """Band centre (W1 + W2) / 2."""
        return 0.5 * (self.omega1 + self.omega2)

    @property
    def trace_period(self):
        """Delay period pi / W_c of the noise trace."""
        return math.pi / self.omega_c

    def magnitude(self, convention="sinh"):
        """Squeeze magnitude M under the chosen convention."""
        if convention not in M_CONVENTIONS:
            raise ValueError(f"unknown magnitude convention {convention!r}")
        m = math.sinh(self.r)
        return m if convention == "sinh" else m * m


@dataclass(frozen=True)
class SqueezeCoefficients:
    """Band-overlap integrals and the normalized coefficients a, b."""

    i_total: float
    i_band: float
    i_cross: float
    a: float
    b: float


def detection_amplitude(rt, omega):
    """rho(W) = sqrt(W / n_W) * R0(W) for a phonon-backed response table."""
    if rt.phonon is None:
        raise ValueError("detection amplitude needs the THz index model")
    omega = np.asarray(omega, dtype=float)
    weight = np.sqrt(np.maximum(omega, 0.0) / rt.phonon.n(omega))
    return (weight * rt.response_at(omega))[()]


def squeeze_coefficients(rt, sq, quad=None):
    """Compute (I, I_a, I_b, a, b) for a response table and squeeze band.

    The band must lie inside the tabulated range.  A response with zero
    total weight I is rejected (nothing is detected, the normalization is
    undefined).
    """
    if quad is None:
        quad = QuadratureSpec()
    if sq.omega2 > rt.grid.omega_max:
        raise ValueError("squeezed band must lie inside the tabulated response range")

    def rho_sq(omega):
        v = float(detection_amplitude(rt, omega))
        return v * v

    bp = rt.breakpoints(extra=[sq.omega1, sq.omega2])
    i_total, _ = integrate_1d(rho_sq, (0.0, rt.grid.omega_max), quad, breakpoints=bp)
    if i_total <= 0.0:
        raise ValueError("response carries no spectral weight: I = 0")
    i_band, _ = integrate_1d(rho_sq, (sq.omega1, sq.omega2), quad, breakpoints=bp)

    two_wc = 2.0 * sq.omega_c

    def rho_pair(omega):
        return float(detection_amplitude(rt, omega)) * float(
            detection_amplitude(rt, two_wc - omega)
        )

    bp_pair = bp + [two_wc - x for x in bp]
    i_cross, _ = integrate_1d(rho_pair, (sq.omega1, sq.omega2), quad, breakpoints=bp_pair)
    return SqueezeCoefficients(
        i_total=float(i_total),
        i_band=float(i_band),
        i_cross=float(i_cross),
        a=float(i_band / i_total),
        b=float(i_cross / i_total),
    )


def sv_variance_ratio(c, sq, tau, convention="sinh"):
    """Squeezed-to-bare variance ratio at sampling delay ``tau`` (s)."""
    m = sq.magnitude(convention)
    tau = np.asarray(tau, dtype=float)
    osc = np.cos(sq.theta - 2.0 * sq.omega_c * tau)
    return (1.0 + 2.0 * c.a * m + 2.0 * c.b * math.sqrt(m * (m + 1.0)) * osc)[()]


def sv_extrema(c, m):
    """(min, max) of the ratio over delay for squeeze magnitude ``m``."""
    swing = 2.0 * c.b * math.sqrt(m * (m + 1.0))
    base = 1.0 + 2.0 * c.a * m
    return (min(base - swing, base + swing), max(base - swing, base + swing))


@dataclass(frozen=True)
class OptimalSqueeze:
    """Result of the noise-floor optimization over the squeeze magnitude.

    ``interior`` is False when no stationary point lies inside the search
    interval (for b -> a the optimal magnitude grows without bound and
    the search returns the interval edge with the lower floor).
    """

    m: float
    ratio: float
    interior: bool


def optimal_squeeze(c, m_range=(1e-9, 1e6)):
    """Minimize the noise floor 1 + 2aM - 2b sqrt(M(M+1)) over M.

    The stationarity condition is a = b (2M+1) / (2 sqrt(M(M+1))); when it
    has no solution inside ``m_range`` the better interval edge is
    returned with ``interior=False``.
    """
    lo, hi = float(m_range[0]), float(m_range[1])
    if not 0 <= lo < hi:
        raise ValueError("need 0 <= m_range[0] < m_range[1]")

    def floor(m):
        return 1.0 + 2.0 * c.a * m - 2.0 * c.b * math.sqrt(m * (m + 1.0))

    def stationarity(m):
        return 2.0 * c.a * math.sqrt(m * (m + 1.0)) - c.b * (2.0 * m + 1.0)

    glo, ghi = stationarity(lo), stationarity(hi)
    if glo < 0.0 < ghi:
        # unique interior stationary point (the floor is convex in M)
        m_opt = find_root(stationarity, (lo, hi), tol=1e-12)
        return OptimalSqueeze(m=m_opt, ratio=floor(m_opt), interior=True)
    if floor(lo) <= floor(hi):
        return OptimalSqueeze(m=lo, ratio=floor(lo), interior=False)
    return OptimalSqueeze(m=hi, ratio=floor(hi), interior=False)


def quadrature_ellipse(r, theta):
    """Uncertainty-ellipse axes of the squeezed band's joint quadratures.

    Returns (semi_x, semi_y, rotation) in units of the vacuum circle
    radius: the unrotated ellipse has semi-axis exp(+r) along X and
    exp(-r) along Y, then the frame is rotated by theta/2.  Thus theta = 0
    shrinks the phase quadrature Y, while theta = pi rotates by pi/2 and
    shrinks the amplitude quadrature X.  r = 0 gives the unit circle.
    """
    if r < 0:
        raise ValueError("squeeze parameter r must be >= 0")
    return (math.exp(r), math.exp(-r), 0.5 * theta)


def ellipse_points(r, theta, num=361):
    """Sampled (x, y) contour of :func:`quadrature_ellipse`."""
    ax, ay, rot = quadrature_ellipse(r, theta)
    t = np.linspace(0.0, 2.0 * np.pi, num)
    x0, y0 = ax * np.cos(t), ay * np.sin(t)
    cr, sr = math.cos(rot), math.sin(rot)
    return cr * x0 - sr * y0, sr * x0 + cr * y0
