"""Phase-matching response of the electro-optic detection crystal.

The detected THz field is filtered by the normalized response

    R0(W) = sinc[ l * W * (n_W - n_g) / (2 c0) ] * f(W)

where the sinc expresses the velocity mismatch between the THz phase front
(index ``n_W`` from the phonon-polariton model) and the probe pulse (group
index ``n_g``) over the crystal length ``l``, and ``f`` is the probe's
spectral autocorrelation.  ``R0`` is real; sampling delays only contribute
an analytic phase ``exp(-i W tau)`` downstream and are never tabulated.

A transverse (Gouy/diffraction) low-frequency cutoff removes THz
wavelengths too long to focus into the probe waist: frequencies with
``lambda / (2 n_W) > w0`` are excluded.  The cutoff frequency solves
``W n_W(W) = pi c0 / w0`` self-consistently; below it the tabulated
response is identically zero when the cutoff is enabled.

The pulse-averaged variance of the sampled vacuum field involves the
spectral weight ``W * (n / n_W) * R0(W)^2``, exposed both per grid point
(:func:`variance_integrand`) and integrated (:func:`variance_integral`).
"""

from dataclasses import dataclass, field

import numpy as np

from .numint import QuadratureSpec, find_root, integrate_1d
from .physunits import C0, thz_to_angular
from .probe import DetectorEfficiency, autocorrelation_f

#: default tabulation grid: 0 to 2*pi*160 THz in 2*pi*0.05 THz steps
DEFAULT_GRID_MAX = thz_to_angular(160.0)
DEFAULT_GRID_STEP = thz_to_angular(0.05)


def sinc(x):
    """sin(x)/x with sinc(0) = 1; series fallback below |x| = 1e-4.

    The two-term series 1 - x^2/6 + x^4/120 is exact to double precision
    in the fallback region and avoids the 0/0 at the origin.
    """
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    series = 1.0 - x * x / 6.0 + x**4 / 120.0
    return np.where(small, series, np.sin(safe) / safe)[()]


@dataclass(frozen=True)
class FrequencyGrid:
    """Uniform ascending angular-frequency grid starting at zero."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 1 or pts.size < 3:
            raise ValueError("grid needs at least 3 points")
        d = np.diff(pts)
        if np.any(d <= 0):
            raise ValueError("grid must be strictly increasing")
        if not np.allclose(d, d[0], rtol=1e-9, atol=0.0):
            raise ValueError("grid must be uniform")
        if abs(pts[0]) > 1e-9 * d[0]:
            raise ValueError("grid must start at zero")
        object.__setattr__(self, "points", pts)

    @classmethod
    def regular(cls, omega_max=DEFAULT_GRID_MAX, step=DEFAULT_GRID_STEP):
        """Grid [0, omega_max] with the given spacing (count rounded)."""
        n = int(round(omega_max / step))
        if n < 2:
            raise ValueError("grid too coarse for the requested range")
        return cls(np.linspace(0.0, omega_max, n + 1))

    @property
    def spacing(self):
        return float(self.points[1] - self.points[0])

    @property
    def omega_max(self):
        return float(self.points[-1])


def phase_matching_sinc(geometry, phonon, omega):
    """Phase-matching factor sinc[l W (n_W - n_g) / (2 c0)] at W = omega."""
    arg = geometry.length_l * np.asarray(omega, dtype=float) * (
        phonon.n(omega) - geometry.n_g
    ) / (2.0 * C0)
    return sinc(arg)


def diffraction_cutoff(phonon, waist_w0):
    """Lowest focusable THz frequency: solves lambda/(2 n_W) = w0.

    Equivalently the root of W * n_W(W) - pi c0 / w0.  The product
    W * n_W is monotonic on either side of the phonon resonance, so the
    branch above the LO frequency is tried first (tight foci) and the
    quasi-static branch below the TO frequency second (loose foci).
    Raises ValueError if neither branch brackets a root.
    """
    if waist_w0 <= 0:
        raise ValueError("waist must be positive")
    target = np.pi * C0 / waist_w0

    def h(omega):
        return omega * float(phonon.n(omega)) - target

    try:
        return find_root(h, (phonon.omega_lo, phonon.omega_lo + 1e3 * target), tol=1e-6)
    except ValueError:
        return find_root(h, (1e-6 * phonon.omega_to, phonon.omega_to), tol=1e-6)


@dataclass(frozen=True)
class ResponseTable:
    """Tabulated detection response R0 on a uniform frequency grid.

    ``values`` hold R0 at ``grid.points`` (zeroed below ``cutoff_omega``
    when ``cutoff_enabled``).  When built by :func:`build_response` the
    table keeps its generating models so the response can also be
    evaluated continuously between grid points; hand-made tables fall
    back to linear interpolation of ``values``.
    """

    grid: FrequencyGrid
    values: np.ndarray
    cutoff_omega: float
    cutoff_enabled: bool
    probe: object | None = None
    eta: object | None = None
    geometry: object | None = None
    phonon: object | None = None

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != self.grid.points.shape:
            raise ValueError("values must match the grid shape")
        object.__setattr__(self, "values", vals)

    @property
    def has_model(self):
        return self.probe is not None and self.geometry is not None and self.phonon is not None

    def response_at(self, omega):
        """Continuous response R0(omega); honours the cutoff zeroing."""
        omega = np.asarray(omega, dtype=float)
        if self.has_model:
            raw = phase_matching_sinc(self.geometry, self.phonon, omega) * autocorrelation_f(
                self.probe, self.eta, omega
            )
        else:
            raw = np.interp(omega, self.grid.points, self.values, left=0.0, right=0.0)
        if self.cutoff_enabled:
            raw = np.where(omega < self.cutoff_omega, 0.0, raw)
        return raw[()]

    def breakpoints(self, extra=()):
        """Known kinks of the response for quadrature panel splitting."""
        pts = list(extra)
        if self.cutoff_enabled:
            pts.append(self.cutoff_omega)
        if self.phonon is not None:
            pts += [self.phonon.omega_to, self.phonon.omega_lo]
        if self.probe is not None:
            pts.append(self.probe.delta_omega)  # autocorrelation support edge
        return pts


def build_response(p, eta, geometry, phonon, grid=None, cutoff=True):
    """Tabulate R0 = sinc * f on ``grid`` (default 0..160 THz @ 0.05 THz).

    The grid must cover the autocorrelation support (omega_max >=
    delta_omega), otherwise the spectral weight would be truncated.
    """
    if grid is None:
        grid = FrequencyGrid.regular()
    if grid.omega_max < p.delta_omega:
        raise ValueError("grid must cover the autocorrelation support delta_omega")
    cutoff_omega = diffraction_cutoff(phonon, geometry.waist_w0)
    om = grid.points
    values = phase_matching_sinc(geometry, phonon, om) * autocorrelation_f(p, eta, om)
    if cutoff:
        values = np.where(om < cutoff_omega, 0.0, values)
    return ResponseTable(
        grid=grid,
        values=values,
        cutoff_omega=float(cutoff_omega),
        cutoff_enabled=bool(cutoff),
        probe=p,
        eta=eta,
        geometry=geometry,
        phonon=phonon,
    )


def variance_integrand(rt):
    """Spectral weight W * (n / n_W) * R0^2 at each grid point."""
    if rt.phonon is None or rt.geometry is None:
        raise ValueError("variance integrand needs a model-backed response table")
    om = rt.grid.points
    n_thz = rt.phonon.n(om)
    return om * (rt.geometry.n / n_thz) * rt.values**2


def variance_integral(rt, quad=None):
    """int W (n/n_W) R0(W)^2 dW over the tabulated range.

    Uses the continuous response with panel breakpoints at the cutoff, the
    phonon resonances and the autocorrelation edge, so both quadrature
    methods converge at their nominal order.
    """
    if quad is None:
        quad = QuadratureSpec()
    if rt.phonon is None or rt.geometry is None:
        raise ValueError("variance integral needs a model-backed response table")

    def integrand(omega):
        if omega <= 0.0:
            return 0.0
        r0 = float(rt.response_at(omega))
        return omega * (rt.geometry.n / float(rt.phonon.n(omega))) * r0 * r0

    value, _ = integrate_1d(
        integrand,
        (0.0, rt.grid.omega_max),
        quad,
        breakpoints=rt.breakpoints(),
    )
    return value
