"""Paraxial quantum theory of electro-optic sampling of multi-THz vacuum.

The package computes, from first principles, the statistics a balanced
electro-optic detector records when a femtosecond near-infrared probe
co-propagates with the bare (or squeezed) multi-THz vacuum field inside a
thin zincblende crystal:

* refractive-index models for the probe band (Sellmeier) and the THz band
  (phonon-polariton resonance) -- :mod:`eosvac.dispersion`
* the probe pulse, detector efficiency and the spectral autocorrelation
  entering the detected signal -- :mod:`eosvac.probe`
* the phase-matching response versus THz frequency, including the paraxial
  low-frequency cutoff from THz diffraction -- :mod:`eosvac.response`
* Laguerre-Gaussian transverse modes and pump/probe overlap integrals --
  :mod:`eosvac.modes`
* vacuum-noise variance, shot-noise comparison and synthetic per-pulse
  traces -- :mod:`eosvac.stats`
* two-mode squeezed vacuum: delay-dependent noise traces, the optimal
  squeezing strength and quadrature uncertainty ellipses --
  :mod:`eosvac.squeeze`
* batch CSV/JSON output for figure tooling -- ``eosvac`` CLI
  (:mod:`eosvac.cli`)

Internally every frequency is an SI angular frequency (rad/s); THz, fs and
V/m appear only at the I/O boundary (:mod:`eosvac.physunits`).
"""

from .dispersion import (
    MATERIALS,
    ZNTE_PHONON,
    ZNTE_SELLMEIER,
    CrystalGeometry,
    PhononModel,
    SellmeierModel,
    material_from_config,
)
from .modes import (
    LGModeIndex,
    ModeGeometry,
    lg_mode,
    mode_norm,
    paraxial_validity,
    pump_probe_overlap,
    pump_probe_overlap_numeric,
    waist_mode,
)
from .numint import QuadratureError, QuadratureSpec, find_root, integrate_1d
from .physunits import (
    C0,
    EPS0,
    HBAR,
    angular_to_thz,
    fs_to_seconds,
    seconds_to_fs,
    thz_to_angular,
    wavenumber_cm_to_angular,
)
from .probe import (
    DetectorEfficiency,
    ProbeSpec,
    TabulatedSpectrum,
    autocorrelation_f,
    avg_detected_frequency,
    rect_avg_frequency,
    temporal_intensity,
)
from .response import (
    FrequencyGrid,
    ResponseTable,
    build_response,
    diffraction_cutoff,
    phase_matching_sinc,
    variance_integral,
    variance_integrand,
)
from .squeeze import (
    OptimalSqueeze,
    SqueezeCoefficients,
    SqueezeSpec,
    detection_amplitude,
    ellipse_points,
    optimal_squeeze,
    quadrature_ellipse,
    squeeze_coefficients,
    sv_extrema,
    sv_variance_ratio,
)
from .stats import (
    TRACE_GENERATOR,
    EffectiveField,
    SignalStats,
    crossover_photon_number,
    effective_vacuum_field,
    eos_variance_pv,
    sweep_photon_number,
    synth_traces,
)

__version__ = "0.1.0"

__all__ = [
    "C0",
    "EPS0",
    "HBAR",
    "MATERIALS",
    "TRACE_GENERATOR",
    "ZNTE_PHONON",
    "ZNTE_SELLMEIER",
    "CrystalGeometry",
    "DetectorEfficiency",
    "EffectiveField",
    "FrequencyGrid",
    "LGModeIndex",
    "ModeGeometry",
    "OptimalSqueeze",
    "PhononModel",
    "ProbeSpec",
    "QuadratureError",
    "QuadratureSpec",
    "ResponseTable",
    "SellmeierModel",
    "SignalStats",
    "SqueezeCoefficients",
    "SqueezeSpec",
    "TabulatedSpectrum",
    "angular_to_thz",
    "autocorrelation_f",
    "avg_detected_frequency",
    "build_response",
    "crossover_photon_number",
    "detection_amplitude",
    "diffraction_cutoff",
    "effective_vacuum_field",
    "ellipse_points",
    "eos_variance_pv",
    "find_root",
    "fs_to_seconds",
    "integrate_1d",
    "lg_mode",
    "material_from_config",
    "mode_norm",
    "optimal_squeeze",
    "paraxial_validity",
    "phase_matching_sinc",
    "pump_probe_overlap",
    "pump_probe_overlap_numeric",
    "quadrature_ellipse",
    "rect_avg_frequency",
    "seconds_to_fs",
    "squeeze_coefficients",
    "sv_extrema",
    "sv_variance_ratio",
    "sweep_photon_number",
    "synth_traces",
    "temporal_intensity",
    "thz_to_angular",
    "variance_integral",
    "variance_integrand",
    "waist_mode",
    "wavenumber_cm_to_angular",
]
