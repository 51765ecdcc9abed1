"""Shared fixtures: the reference ZnTe configuration used across the suite."""

import numpy as np
import pytest

import eosvac as ev

#: scoreboard lines filled in by the acceptance tests and echoed after the
#: run (the terminal summary is exempt from output capture)
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def probe():
    """Rectangular probe: 255 THz centre, 150 THz full width, 1e10 photons."""
    return ev.ProbeSpec(
        omega_c=ev.thz_to_angular(255.0),
        delta_omega=ev.thz_to_angular(150.0),
        photons_n=1e10,
    )


@pytest.fixture(scope="session")
def eta():
    return ev.DetectorEfficiency.default()


@pytest.fixture(scope="session")
def geometry(probe):
    """7 um ZnTe, r41 = 4 pm/V, 3 um probe waist."""
    return ev.CrystalGeometry.for_probe(
        ev.ZNTE_SELLMEIER, probe.omega_c, length_l=7e-6, r41=4e-12, waist_w0=3e-6
    )


@pytest.fixture(scope="session")
def response_table(probe, eta, geometry):
    return ev.build_response(probe, eta, geometry, ev.ZNTE_PHONON)


@pytest.fixture(scope="session")
def response_nocutoff(probe, eta, geometry):
    return ev.build_response(probe, eta, geometry, ev.ZNTE_PHONON, cutoff=False)


@pytest.fixture(scope="session")
def squeeze_band():
    """40 THz centre band of full width 40 THz, sinh r = 2."""
    return ev.SqueezeSpec(
        omega1=ev.thz_to_angular(20.0),
        omega2=ev.thz_to_angular(60.0),
        r=float(np.arcsinh(2.0)),
    )


@pytest.fixture(scope="session")
def coefficients(response_table, squeeze_band):
    return ev.squeeze_coefficients(response_table, squeeze_band)
