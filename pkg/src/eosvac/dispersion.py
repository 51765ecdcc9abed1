"""Refractive-index models for electro-optic crystals.

Two single-resonance models cover the two spectral regions that matter for
electro-optic sampling:

* near-infrared probe band: a one-pole Sellmeier law
  ``n^2 = A + B*lambda^2 / (lambda^2 - c2)`` with the wavelength in
  micrometres, together with the analytic group index
  ``n_g = n + omega * dn/domega``.
* multi-THz detection band: a phonon-polariton dielectric function
  ``eps(W) = eps_inf * [1 + (w_LO^2 - w_TO^2) / (w_TO^2 - W^2 - i*gamma*W)]``
  whose principal complex square root (non-negative imaginary part, as
  required for a passive medium) supplies the real index
  ``n_W = Re sqrt(eps)``.

The bundled ZnTe parameters are A = 4.27, B = 3.01, c2 = 0.142 um^2 for the
Sellmeier law and hw_TO = 177 cm^-1, hw_LO = 206 cm^-1, gamma = 3.01 cm^-1,
eps_inf = 6.7 for the phonon model.

``CrystalGeometry`` collects the sampling-crystal properties entering the
detection response: thickness, electro-optic coefficient r41, probe waist,
and the probe-band indices evaluated at the probe centre frequency.  The
nonlinear coupling ``d = -n^4 * r41`` is always derived on access so it can
never drift out of sync with the stored index.
"""

from dataclasses import dataclass

import numpy as np

from .physunits import C0, TWO_PI, wavenumber_cm_to_angular


@dataclass(frozen=True)
class SellmeierModel:
    """One-pole Sellmeier refractive index for the near-infrared.

    Parameters a (dimensionless), b (dimensionless) and c2_um2 (um^2) enter
    as n^2 = a + b*lam^2/(lam^2 - c2_um2) with lam the vacuum wavelength in
    micrometres.
    """

    a: float
    b: float
    c2_um2: float

    def __post_init__(self):
        if self.a <= 0 or self.b < 0 or self.c2_um2 < 0:
            raise ValueError("Sellmeier coefficients must satisfy a > 0, b >= 0, c2 >= 0")

    def _lambda_um(self, omega):
        omega = np.asarray(omega, dtype=float)
        if np.any(omega <= 0):
            raise ValueError("Sellmeier model requires omega > 0")
        lam = TWO_PI * C0 / omega * 1e6
        if np.any(lam * lam <= self.c2_um2):
            raise ValueError("wavelength inside the Sellmeier pole: lambda^2 <= c2")
        return lam

    def n(self, omega):
        """Refractive index at angular frequency ``omega`` (rad/s)."""
        lam2 = self._lambda_um(omega) ** 2
        n2 = self.a + self.b * lam2 / (lam2 - self.c2_um2)
        return np.sqrt(n2)[()]

    def group_index(self, omega):
        """Group index n_g = n + omega * dn/domega, evaluated analytically.

        With lam ~ 1/omega the chain rule gives
        n_g = n - lam * dn/dlam and
        dn/dlam = -b*c2*lam / (n * (lam^2 - c2)^2), hence
        n_g = n + b*c2*lam^2 / (n * (lam^2 - c2)^2).
        """
        lam2 = self._lambda_um(omega) ** 2
        n = np.sqrt(self.a + self.b * lam2 / (lam2 - self.c2_um2))
        return (n + self.b * self.c2_um2 * lam2 / (n * (lam2 - self.c2_um2) ** 2))[()]


@dataclass(frozen=True)
class PhononModel:
    """Phonon-polariton dielectric response of the multi-THz band.

    Frequencies are angular (rad/s): ``omega_to`` and ``omega_lo`` are the
    transverse/longitudinal optical phonon frequencies, ``gamma`` the
    damping rate, and ``eps_inf`` the high-frequency permittivity.
    """

    omega_to: float
    omega_lo: float
    gamma: float
    eps_inf: float

    def __post_init__(self):
        if not 0 < self.omega_to < self.omega_lo:
            raise ValueError("need 0 < omega_to < omega_lo")
        if self.gamma < 0 or self.eps_inf <= 0:
            raise ValueError("need gamma >= 0 and eps_inf > 0")

    @classmethod
    def from_wavenumbers(cls, to_cm, lo_cm, gamma_cm, eps_inf):
        """Build from spectroscopic wavenumbers in cm^-1."""
        return cls(
            omega_to=wavenumber_cm_to_angular(to_cm),
            omega_lo=wavenumber_cm_to_angular(lo_cm),
            gamma=wavenumber_cm_to_angular(gamma_cm),
            eps_inf=eps_inf,
        )

    def epsilon(self, omega):
        """Complex dielectric function at angular frequency ``omega``."""
        omega = np.asarray(omega, dtype=complex)
        lorentz = (self.omega_lo**2 - self.omega_to**2) / (
            self.omega_to**2 - omega**2 - 1j * self.gamma * omega
        )
        return (self.eps_inf * (1.0 + lorentz))[()]

    def complex_index(self, omega):
        """Principal complex refractive index, Im >= 0 (passive medium)."""
        nc = np.sqrt(self.epsilon(omega))
        # principal square root of eps with Im(eps) >= 0 already lands in the
        # upper half plane; flip any stray sign from rounding at Im(eps) ~ 0
        nc = np.where(np.imag(nc) < 0, -nc, nc)
        return nc[()]

    def n(self, omega):
        """Real refractive index Re sqrt(eps) of the THz band."""
        return np.real(self.complex_index(omega))[()]


@dataclass(frozen=True)
class CrystalGeometry:
    """Sampling-crystal geometry and probe-band indices.

    ``n`` and ``n_g`` are the Sellmeier index and group index at the probe
    centre frequency; rebuild the geometry via :meth:`for_probe` whenever
    that frequency changes.  All lengths are in metres and ``r41`` in m/V.
    """

    length_l: float
    r41: float
    waist_w0: float
    n: float
    n_g: float

    def __post_init__(self):
        if self.length_l <= 0 or self.waist_w0 <= 0:
            raise ValueError("crystal length and waist must be positive")
        if self.n <= 0 or self.n_g <= 0:
            raise ValueError("refractive indices must be positive")

    @classmethod
    def for_probe(cls, sellmeier, omega_c, length_l, r41, waist_w0):
        """Derive the probe-band indices from ``sellmeier`` at ``omega_c``."""
        return cls(
            length_l=float(length_l),
            r41=float(r41),
            waist_w0=float(waist_w0),
            n=float(sellmeier.n(omega_c)),
            n_g=float(sellmeier.group_index(omega_c)),
        )

    @property
    def coupling_d(self):
        """Nonlinear coupling d = -n^4 * r41, derived, never stored."""
        return -(self.n**4) * self.r41


# bundled material parameters
ZNTE_SELLMEIER = SellmeierModel(a=4.27, b=3.01, c2_um2=0.142)
ZNTE_PHONON = PhononModel.from_wavenumbers(to_cm=177.0, lo_cm=206.0, gamma_cm=3.01, eps_inf=6.7)

MATERIALS = {
    "ZnTe": (ZNTE_SELLMEIER, ZNTE_PHONON),
}


def material_from_config(entry):
    """Resolve a config material entry to a (SellmeierModel, PhononModel) pair.

    ``entry`` is either the name of a bundled material or a mapping with the
    keys A, B, c2_um2, omega_to_cm1, omega_lo_cm1, gamma_cm1, eps_inf.
    """
    if isinstance(entry, str):
        try:
            return MATERIALS[entry]
        except KeyError:
            raise ValueError(
                f"unknown material {entry!r}; bundled: {sorted(MATERIALS)}"
            ) from None
    required = {"A", "B", "c2_um2", "omega_to_cm1", "omega_lo_cm1", "gamma_cm1", "eps_inf"}
    missing = required - set(entry)
    if missing:
        raise ValueError(f"material table missing keys: {sorted(missing)}")
    sell = SellmeierModel(a=float(entry["A"]), b=float(entry["B"]), c2_um2=float(entry["c2_um2"]))
    phonon = PhononModel.from_wavenumbers(
        to_cm=float(entry["omega_to_cm1"]),
        lo_cm=float(entry["omega_lo_cm1"]),
        gamma_cm=float(entry["gamma_cm1"]),
        eps_inf=float(entry["eps_inf"]),
    )
    return sell, phonon
