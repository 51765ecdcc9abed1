"""Physical constants and unit conversions.

All internal computations use SI units with *angular* frequencies (rad/s).
Cyclic frequencies in THz, wavenumbers in cm^-1 and delays in femtoseconds
appear only at I/O boundaries (configuration files, CSV output, plot axes)
and are converted through the helpers below.

Constants follow the 2018 CODATA recommended values.
"""

import math

# speed of light in vacuum [m/s]
C0 = 2.99792458e8
# reduced Planck constant [J s]
HBAR = 1.054571817e-34
# vacuum permittivity [F/m]
EPS0 = 8.8541878128e-12

TWO_PI = 2.0 * math.pi


def thz_to_angular(nu_thz):
    """Convert a cyclic frequency in THz to an angular frequency in rad/s."""
    return TWO_PI * nu_thz * 1e12


def angular_to_thz(omega):
    """Convert an angular frequency in rad/s to a cyclic frequency in THz."""
    return omega / (TWO_PI * 1e12)


def wavenumber_cm_to_angular(k_cm):
    """Convert a spectroscopic wavenumber in cm^-1 to an angular frequency.

    A wavenumber k (cm^-1) corresponds to the angular frequency
    2*pi*c0*k with k expressed in m^-1, i.e. omega = 2*pi*c0*100*k.
    """
    return TWO_PI * C0 * k_cm * 100.0


def fs_to_seconds(t_fs):
    """Convert femtoseconds to seconds."""
    return t_fs * 1e-15


def seconds_to_fs(t_s):
    """Convert seconds to femtoseconds."""
    return t_s * 1e15
