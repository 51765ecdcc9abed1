"""Unit conversions and physical constants."""

from decimal import Decimal, getcontext

import numpy as np
import pytest

from eosvac import (
    C0,
    EPS0,
    HBAR,
    angular_to_thz,
    fs_to_seconds,
    seconds_to_fs,
    thz_to_angular,
    wavenumber_cm_to_angular,
)


def test_codata_constants_exact():
    assert C0 == 2.99792458e8
    assert HBAR == 1.054571817e-34
    assert EPS0 == 8.8541878128e-12


def test_thz_zero_maps_to_zero():
    assert thz_to_angular(0.0) == 0.0
    assert wavenumber_cm_to_angular(0.0) == 0.0


def test_thz_one_is_two_pi_e12():
    assert thz_to_angular(1.0) == 2.0 * np.pi * 1e12


def test_thz_255_matches_direct_evaluation():
    assert thz_to_angular(255.0) == pytest.approx(2.0 * np.pi * 255e12, abs=1e10)


@pytest.mark.parametrize("wavenumber_cm,frozen", [
    # frozen from a 50-digit Decimal evaluation of 2*pi*c0*100*k
    (177.0, 33340632741366.7),
    (206.0, 38803222286562.375),
])
def test_wavenumber_conversion_frozen(wavenumber_cm, frozen):
    assert wavenumber_cm_to_angular(wavenumber_cm) == pytest.approx(frozen, rel=1e-15)


@pytest.mark.parametrize("wavenumber_cm", [1.0, 3.01, 177.0, 206.0, 12345.6])
def test_wavenumber_conversion_against_decimal_oracle(wavenumber_cm):
    getcontext().prec = 50
    two_pi = Decimal(2) * Decimal("3.14159265358979323846264338327950288419716939937511")
    oracle = two_pi * Decimal("2.99792458e8") * Decimal(repr(wavenumber_cm)) * 100
    assert wavenumber_cm_to_angular(wavenumber_cm) == pytest.approx(float(oracle), rel=1e-14)


@pytest.mark.parametrize("seed", range(5))
def test_frequency_round_trip(seed):
    rng = np.random.default_rng(seed)
    nu = 10.0 ** rng.uniform(-3, 4, size=50)
    back = angular_to_thz(thz_to_angular(nu))
    np.testing.assert_allclose(back, nu, rtol=1e-12)


def test_time_round_trip():
    assert fs_to_seconds(12.5) == 12.5e-15
    assert seconds_to_fs(fs_to_seconds(0.05)) == pytest.approx(0.05, rel=1e-14)
