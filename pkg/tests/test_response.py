"""Phase matching, diffraction cutoff, response table, variance integral."""

import math

import numpy as np
import pytest
from scipy.integrate import quad as scipy_quad

import eosvac as ev
from eosvac import (
    C0,
    ZNTE_PHONON,
    FrequencyGrid,
    ResponseTable,
    angular_to_thz,
    build_response,
    diffraction_cutoff,
    phase_matching_sinc,
    thz_to_angular,
    variance_integral,
    variance_integrand,
)
from eosvac.numint import QuadratureSpec
from eosvac.response import sinc

#: frozen from the adaptive route at rel_tol 1e-8, cross-checked against the
#: fixed-grid route (rel diff 9e-12) and scipy.integrate.quad (rel diff 2e-9)
FROZEN_VARIANCE_INTEGRAL = 3.4273347928314557e+28
#: frozen from the two-branch root solve, cross-checked by fixed-point iteration
FROZEN_CUTOFF_THZ = 19.580390278044185


class TestSinc:
    def test_unit_at_zero(self):
        assert sinc(0.0) == 1.0

    @pytest.mark.parametrize("x", [1e-9, 1e-6, 9.9e-5, 1.1e-4, 0.5, 2.0, -3.0])
    def test_matches_numpy_reference(self, x):
        assert float(sinc(x)) == pytest.approx(float(np.sinc(x / np.pi)), rel=1e-14)

    def test_series_region_is_smooth_across_switch(self):
        xs = np.array([0.99e-4, 1.0e-4, 1.01e-4])
        vals = sinc(xs)
        assert np.all(np.diff(vals) < 0)  # still monotone through the switch


class TestFrequencyGrid:
    def test_default_resolution(self):
        grid = FrequencyGrid.regular()
        assert grid.points.size == 3201
        assert angular_to_thz(grid.omega_max) == pytest.approx(160.0, rel=1e-12)
        assert angular_to_thz(grid.spacing) == pytest.approx(0.05, rel=1e-9)

    @pytest.mark.parametrize("points", [
        [0.0, 1.0],                      # too few
        [0.0, 2.0, 1.0],                 # not increasing
        [0.0, 1.0, 2.5],                 # not uniform
        [1.0, 2.0, 3.0],                 # does not start at zero
    ])
    def test_validation(self, points):
        with pytest.raises(ValueError):
            FrequencyGrid(np.asarray(points, dtype=float))


class TestPhaseMatching:
    def test_unity_at_zero_frequency(self, geometry):
        assert float(phase_matching_sinc(geometry, ZNTE_PHONON, 0.0)) == 1.0

    def test_value_at_40_thz_frozen(self, geometry):
        # frozen from direct evaluation of the sinc argument (~ -0.939 rad)
        val = float(phase_matching_sinc(geometry, ZNTE_PHONON, thz_to_angular(40.0)))
        assert val == pytest.approx(0.8592584590015343, rel=1e-12)
        assert 0.84 < val < 0.87

    def test_matches_manual_formula(self, geometry):
        omega = thz_to_angular(55.0)
        arg = (
            geometry.length_l
            * omega
            * (float(ZNTE_PHONON.n(omega)) - geometry.n_g)
            / (2.0 * C0)
        )
        assert float(phase_matching_sinc(geometry, ZNTE_PHONON, omega)) == pytest.approx(
            math.sin(arg) / arg, rel=1e-14
        )


class TestDiffractionCutoff:
    def test_value_frozen(self):
        cutoff = diffraction_cutoff(ZNTE_PHONON, 3e-6)
        assert angular_to_thz(cutoff) == pytest.approx(FROZEN_CUTOFF_THZ, rel=1e-9)

    def test_fixed_point_iteration_oracle(self):
        # independent solve: iterate W <- pi c0 / (w0 n(W)); converges since
        # n varies slowly above the phonon resonance
        w0 = 3e-6
        omega = thz_to_angular(30.0)
        for _ in range(60):
            omega = np.pi * C0 / (w0 * float(ZNTE_PHONON.n(omega)))
        assert diffraction_cutoff(ZNTE_PHONON, w0) == pytest.approx(omega, rel=1e-10)

    def test_self_consistency(self):
        for w0 in (2e-6, 3e-6, 5e-6):
            cutoff = diffraction_cutoff(ZNTE_PHONON, w0)
            half_wavelength_in_medium = np.pi * C0 / (cutoff * float(ZNTE_PHONON.n(cutoff)))
            assert abs(half_wavelength_in_medium - w0) <= 1e-6 * w0

    def test_loose_focus_lands_below_resonance(self):
        cutoff = diffraction_cutoff(ZNTE_PHONON, 100e-6)
        assert cutoff < ZNTE_PHONON.omega_to
        lam_check = np.pi * C0 / (cutoff * float(ZNTE_PHONON.n(cutoff)))
        assert lam_check == pytest.approx(100e-6, rel=1e-6)

    def test_invalid_waist_rejected(self):
        with pytest.raises(ValueError):
            diffraction_cutoff(ZNTE_PHONON, 0.0)


class TestResponseTable:
    def test_values_real_and_bounded(self, response_table):
        assert response_table.values.dtype == np.float64
        assert np.all(np.abs(response_table.values) <= 1.0)

    def test_zero_below_cutoff(self, response_table):
        below = response_table.grid.points < response_table.cutoff_omega
        assert below.sum() > 0
        assert np.all(response_table.values[below] == 0.0)

    def test_equals_product_above_cutoff(self, response_table, probe, eta, geometry):
        om = response_table.grid.points
        above = om >= response_table.cutoff_omega
        expected = phase_matching_sinc(geometry, ZNTE_PHONON, om[above]) * ev.autocorrelation_f(
            probe, eta, om[above]
        )
        np.testing.assert_allclose(response_table.values[above], expected, rtol=1e-13)

    def test_no_cutoff_keeps_low_frequencies(self, response_nocutoff):
        low = (response_nocutoff.grid.points > 0) & (
            response_nocutoff.grid.points < thz_to_angular(19.0)
        )
        assert np.count_nonzero(response_nocutoff.values[low]) > 300

    def test_vanishes_at_and_beyond_bandwidth(self, response_table, probe):
        beyond = response_table.grid.points >= probe.delta_omega
        assert np.all(response_table.values[beyond] == 0.0)

    def test_thin_crystal_limit_recovers_autocorrelation(self, probe, eta):
        thin = ev.CrystalGeometry.for_probe(
            ev.ZNTE_SELLMEIER, probe.omega_c, length_l=1e-12, r41=4e-12, waist_w0=3e-6
        )
        rt = build_response(probe, eta, thin, ZNTE_PHONON, cutoff=False)
        om = rt.grid.points
        np.testing.assert_allclose(
            rt.values, ev.autocorrelation_f(probe, eta, om), atol=1e-9
        )

    def test_response_at_matches_table_on_grid(self, response_table):
        om = response_table.grid.points[::100]
        np.testing.assert_allclose(
            response_table.response_at(om), response_table.values[::100], rtol=1e-13
        )

    def test_grid_must_cover_probe_bandwidth(self, probe, eta, geometry):
        short = FrequencyGrid.regular(
            omega_max=thz_to_angular(100.0), step=thz_to_angular(0.05)
        )
        with pytest.raises(ValueError):
            build_response(probe, eta, geometry, ZNTE_PHONON, grid=short)

    def test_synthetic_table_interpolates(self):
        grid = FrequencyGrid(np.linspace(0.0, 10.0, 11))
        vals = np.linspace(0.0, 1.0, 11)
        rt = ResponseTable(grid, vals, cutoff_omega=0.0, cutoff_enabled=False)
        assert not rt.has_model
        assert float(rt.response_at(5.5)) == pytest.approx(0.55, rel=1e-12)
        assert float(rt.response_at(50.0)) == 0.0


class TestVarianceIntegral:
    def test_value_frozen(self, response_table):
        assert variance_integral(response_table) == pytest.approx(
            FROZEN_VARIANCE_INTEGRAL, rel=1e-8
        )

    def test_two_methods_agree(self, response_table):
        adaptive = variance_integral(response_table)
        fixed = variance_integral(
            response_table,
            QuadratureSpec(method="fixed-grid-simpson", step=thz_to_angular(0.01)),
        )
        assert fixed == pytest.approx(adaptive, rel=1e-6)

    def test_scipy_oracle_agrees(self, response_table, geometry):
        def integrand(w):
            r0 = float(response_table.response_at(w))
            return w * (geometry.n / float(ZNTE_PHONON.n(w))) * r0 * r0

        edges = [0.0] + sorted(
            b for b in response_table.breakpoints() if 0 < b < response_table.grid.omega_max
        ) + [response_table.grid.omega_max]
        oracle = 0.0
        for lo, hi in zip(edges[:-1], edges[1:]):
            pad = 1e-9 * (hi - lo)
            val, _ = scipy_quad(integrand, lo + pad, hi - pad, limit=400)
            oracle += val
        assert variance_integral(response_table) == pytest.approx(oracle, rel=1e-6)

    def test_grid_halving_convergence(self, probe, eta, geometry):
        coarse = build_response(probe, eta, geometry, ZNTE_PHONON)
        fine = build_response(
            probe, eta, geometry, ZNTE_PHONON,
            grid=FrequencyGrid.regular(step=thz_to_angular(0.025)),
        )
        va, vb = variance_integral(coarse), variance_integral(fine)
        assert abs(va - vb) / abs(vb) < 1e-6

    def test_cutoff_removal_raises_integral_21_percent(self, response_table, response_nocutoff):
        ratio = variance_integral(response_nocutoff) / variance_integral(response_table)
        assert ratio == pytest.approx(1.2158301592060297, rel=1e-6)
        assert 1.19 < ratio < 1.23

    def test_integrand_zero_below_cutoff_and_beyond_band(self, response_table, probe):
        tab = variance_integrand(response_table)
        om = response_table.grid.points
        assert np.all(tab[om < response_table.cutoff_omega] == 0.0)
        assert np.all(tab[om >= probe.delta_omega] == 0.0)
        assert np.all(tab >= 0.0)

    def test_integrand_peak_frozen_against_dense_grid(self, response_table, probe, eta, geometry):
        tab = variance_integrand(response_table)
        i = int(np.argmax(tab))
        assert angular_to_thz(response_table.grid.points[i]) == pytest.approx(33.65, abs=0.051)
        # dense-grid oracle at 10x resolution
        fine = build_response(
            probe, eta, geometry, ZNTE_PHONON,
            grid=FrequencyGrid.regular(step=thz_to_angular(0.005)),
        )
        dense = variance_integrand(fine)
        j = int(np.argmax(dense))
        assert angular_to_thz(fine.grid.points[j]) == pytest.approx(33.66, abs=0.006)
        assert float(tab[i]) == pytest.approx(float(dense[j]), rel=1e-6)
        assert float(dense[j]) == pytest.approx(109674010057604.92, rel=1e-9)

    def test_synthetic_table_has_no_integrand(self):
        grid = FrequencyGrid(np.linspace(0.0, 10.0, 11))
        rt = ResponseTable(grid, np.ones(11), cutoff_omega=0.0, cutoff_enabled=False)
        with pytest.raises(ValueError):
            variance_integrand(rt)
        with pytest.raises(ValueError):
            variance_integral(rt)
