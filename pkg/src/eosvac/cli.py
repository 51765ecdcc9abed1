"""Command-line interface: batch computations to CSV/JSON files.

Subcommands
-----------
dispersion   NIR index n and THz index n_W tables
response     phase-matching response table (with and without the
             low-frequency cutoff) and the probe temporal profile
variance     vacuum-noise summary and the photon-number sweep
squeeze      squeezed-vacuum delay traces, band coefficients and
             quadrature uncertainty ellipses
traces       synthetic per-pulse signal samples
all          everything above

Configuration is a single JSON file with sections (material, probe,
crystal, detector, grid, squeeze, traces, sweep, dispersion) merged over
the bundled ``paper-znte`` preset, which reproduces the reference ZnTe
parameter set.  ``--config`` accepts either a preset name or a path.
Frequencies in configs and CSV files are cyclic THz, delays femtoseconds,
fields V/m; lengths are micrometres and r41 pm/V.

Every output file starts with '#'-prefixed metadata lines including a
SHA-256 hash of the fully resolved configuration, so downstream figure
tooling can verify that mixed inputs belong to the same run.  Files are
written atomically (temp file + rename).  Exit codes: 0 success, 2 config
validation failure, 3 computation failure, 4 I/O failure.
"""

import argparse
import hashlib
import json
import math
import os
import sys
import tempfile
from importlib import resources

import numpy as np

from . import __version__
from .dispersion import CrystalGeometry, material_from_config
from .physunits import angular_to_thz, fs_to_seconds, seconds_to_fs, thz_to_angular
from .probe import (
    DetectorEfficiency,
    ProbeSpec,
    TabulatedSpectrum,
    autocorrelation_f,
    avg_detected_frequency,
    temporal_intensity,
)
from .response import (
    FrequencyGrid,
    build_response,
    phase_matching_sinc,
    variance_integrand,
)
from .squeeze import (
    SqueezeSpec,
    ellipse_points,
    optimal_squeeze,
    squeeze_coefficients,
    sv_extrema,
    sv_variance_ratio,
)
from .stats import (
    TRACE_GENERATOR,
    crossover_photon_number,
    effective_vacuum_field,
    eos_variance_pv,
    sweep_photon_number,
    synth_traces,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_COMPUTE = 3
EXIT_IO = 4

#: significant digits of CSV numbers (17 -> lossless float64 round trip)
_FFMT = "{:.16e}"


class ConfigError(ValueError):
    """Raised for malformed configuration; message lists every bad field."""


# --------------------------------------------------------------------------
# configuration loading and validation
# --------------------------------------------------------------------------

_SECTIONS = {
    "material",
    "probe",
    "crystal",
    "detector",
    "grid",
    "squeeze",
    "traces",
    "sweep",
    "dispersion",
    "cutoff_enabled",
    "seed",
    "output_dir",
}


def _preset_text(name):
    ref = resources.files("eosvac") / "presets" / f"{name.replace('-', '_')}.json"
    if not ref.is_file():
        raise ConfigError(f"unknown preset {name!r}")
    return ref.read_text()


def load_config(source="paper-znte"):
    """Load a config by preset name or file path, merged over the preset."""
    base = json.loads(_preset_text("paper-znte"))
    if source in (None, "paper-znte"):
        return base
    if os.path.sep not in str(source) and not str(source).endswith(".json"):
        return json.loads(_preset_text(str(source)))
    try:
        with open(source) as fh:
            user = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {source!r} is not valid JSON: {exc}") from exc
    if not isinstance(user, dict):
        raise ConfigError("config root must be a JSON object")
    merged = dict(base)
    for key, value in user.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    return merged


def _check(errors, cond, message):
    if not cond:
        errors.append(message)


def _num(errors, section, key, value, lo=None, hi=None, integer=False):
    name = f"{section}.{key}"
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        errors.append(f"{name}: expected a number, got {value!r}")
        return None
    if integer and int(value) != value:
        errors.append(f"{name}: expected an integer, got {value!r}")
        return None
    if lo is not None and value < lo:
        errors.append(f"{name}: must be >= {lo}, got {value!r}")
        return None
    if hi is not None and value > hi:
        errors.append(f"{name}: must be <= {hi}, got {value!r}")
        return None
    return value


def validate_config(cfg):
    """Validate the merged config; raises ConfigError listing all problems."""
    errors = []
    unknown = set(cfg) - _SECTIONS
    _check(errors, not unknown, f"unknown config keys: {sorted(unknown)}")

    material = cfg.get("material")
    _check(
        errors,
        isinstance(material, (str, dict)),
        "material: expected a material name or parameter table",
    )

    probe = cfg.get("probe", {})
    _num(errors, "probe", "center_thz", probe.get("center_thz"), lo=1e-6)
    bw = _num(errors, "probe", "bandwidth_thz", probe.get("bandwidth_thz"), lo=1e-9)
    ctr = probe.get("center_thz")
    if bw is not None and isinstance(ctr, (int, float)) and ctr - 0.5 * bw <= 0:
        errors.append("probe: bandwidth extends to non-positive frequencies")
    _num(errors, "probe", "photons", probe.get("photons"), lo=1e-300)
    _num(errors, "probe", "delay_fs", probe.get("delay_fs", 0.0))
    shape = probe.get("shape", "rectangular")
    _check(errors, shape in ("rectangular", "tabulated"), f"probe.shape: unknown {shape!r}")
    if shape == "tabulated":
        _check(
            errors,
            isinstance(probe.get("spectrum_csv"), str),
            "probe.spectrum_csv: required for the tabulated shape",
        )

    crystal = cfg.get("crystal", {})
    _num(errors, "crystal", "length_um", crystal.get("length_um"), lo=1e-6)
    _num(errors, "crystal", "r41_pm_per_v", crystal.get("r41_pm_per_v"), lo=0.0)
    _num(errors, "crystal", "waist_um", crystal.get("waist_um"), lo=1e-3)

    detector = cfg.get("detector", {})
    _num(errors, "detector", "low_cut_thz", detector.get("low_cut_thz", 30.0), lo=0.0)

    grid = cfg.get("grid", {})
    gmax = _num(errors, "grid", "max_thz", grid.get("max_thz"), lo=1e-3)
    gstep = _num(errors, "grid", "step_thz", grid.get("step_thz"), lo=1e-9)
    if gmax is not None and gstep is not None and gmax / gstep < 2:
        errors.append("grid: max_thz/step_thz leaves fewer than 3 points")
    if gmax is not None and bw is not None and gmax < bw:
        errors.append("grid.max_thz: must cover the probe bandwidth")

    sq = cfg.get("squeeze", {})
    has_band = "omega1_thz" in sq or "omega2_thz" in sq
    has_center = "center_thz" in sq or "width_thz" in sq
    _check(errors, not (has_band and has_center), "squeeze: give either omega1/omega2 or center/width, not both")
    if has_band:
        o1 = _num(errors, "squeeze", "omega1_thz", sq.get("omega1_thz"), lo=1e-9)
        o2 = _num(errors, "squeeze", "omega2_thz", sq.get("omega2_thz"), lo=1e-9)
        if o1 is not None and o2 is not None and not o1 < o2:
            errors.append("squeeze: need omega1_thz < omega2_thz")
    else:
        c = _num(errors, "squeeze", "center_thz", sq.get("center_thz"), lo=1e-9)
        w = _num(errors, "squeeze", "width_thz", sq.get("width_thz"), lo=1e-9)
        if c is not None and w is not None and c - 0.5 * w <= 0:
            errors.append("squeeze: band extends to non-positive frequencies")
    _check(errors, not ("sinh_r" in sq and "r" in sq), "squeeze: give either sinh_r or r, not both")
    if "r" in sq:
        _num(errors, "squeeze", "r", sq.get("r"), lo=0.0)
    else:
        _num(errors, "squeeze", "sinh_r", sq.get("sinh_r"), lo=0.0)
    thetas = sq.get("thetas", [0.0, math.pi])
    if not (isinstance(thetas, list) and thetas and all(isinstance(t, (int, float)) for t in thetas)):
        errors.append("squeeze.thetas: expected a non-empty list of numbers")
    _check(
        errors,
        sq.get("m_convention", "sinh") in ("sinh", "sinh2"),
        "squeeze.m_convention: expected 'sinh' or 'sinh2'",
    )
    _num(errors, "squeeze", "tau_span_periods", sq.get("tau_span_periods", 2.0), lo=1.0)
    _num(errors, "squeeze", "tau_step_fs", sq.get("tau_step_fs", 0.05), lo=1e-6, hi=0.1)

    traces = cfg.get("traces", {})
    _num(errors, "traces", "count", traces.get("count", 100000), lo=0, integer=True)

    sweep = cfg.get("sweep", {})
    _num(errors, "sweep", "decades_span", sweep.get("decades_span", 8.0), lo=0.1)
    _num(errors, "sweep", "points", sweep.get("points", 81), lo=2, integer=True)

    disp = cfg.get("dispersion", {})
    for key in ("nir_range_thz", "thz_range_thz"):
        rng = disp.get(key)
        if rng is None:
            continue
        good = (
            isinstance(rng, list)
            and len(rng) == 3
            and all(isinstance(v, (int, float)) for v in rng)
            and rng[2] > 0
        )
        _check(errors, good, f"dispersion.{key}: expected [min_thz, max_thz, step_thz]")

    _check(errors, isinstance(cfg.get("cutoff_enabled", True), bool), "cutoff_enabled: expected true/false")
    _num(errors, "top-level", "seed", cfg.get("seed", 0), lo=0, integer=True)
    _check(errors, isinstance(cfg.get("output_dir", "out"), str), "output_dir: expected a string")

    if errors:
        raise ConfigError("invalid configuration:\n  " + "\n  ".join(errors))
    return cfg


class Resolved:
    """Configuration resolved into model objects (SI, angular frequencies)."""

    def __init__(self, cfg):
        validate_config(cfg)
        self.raw = cfg
        # hash only what affects the numbers: the output location is excluded
        hashed = {k: v for k, v in cfg.items() if k != "output_dir"}
        blob = json.dumps(hashed, sort_keys=True, separators=(",", ":")).encode()
        self.config_hash = hashlib.sha256(blob).hexdigest()

        self.sellmeier, self.phonon = material_from_config(cfg["material"])
        pr = cfg["probe"]
        if pr.get("shape", "rectangular") == "tabulated":
            table = np.loadtxt(pr["spectrum_csv"], delimiter=",", comments="#")
            spectrum = TabulatedSpectrum(
                omega=thz_to_angular(table[:, 0]), amplitude=table[:, 1]
            )
            self.probe = ProbeSpec.from_table(
                spectrum,
                photons_n=float(pr["photons"]),
                delay_tau=fs_to_seconds(float(pr.get("delay_fs", 0.0))),
            )
        else:
            self.probe = ProbeSpec(
                omega_c=thz_to_angular(float(pr["center_thz"])),
                delta_omega=thz_to_angular(float(pr["bandwidth_thz"])),
                photons_n=float(pr["photons"]),
                delay_tau=fs_to_seconds(float(pr.get("delay_fs", 0.0))),
            )
        low_cut = float(cfg.get("detector", {}).get("low_cut_thz", 30.0))
        thr = thz_to_angular(low_cut)

        def eta_fn(omega, _thr=thr):
            return np.where(np.asarray(omega, dtype=float) >= _thr, 1.0, 0.0)[()]

        self.eta = DetectorEfficiency(eta_fn, threshold=thr)
        cr = cfg["crystal"]
        self.geometry = CrystalGeometry.for_probe(
            self.sellmeier,
            self.probe.omega_c,
            length_l=float(cr["length_um"]) * 1e-6,
            r41=float(cr["r41_pm_per_v"]) * 1e-12,
            waist_w0=float(cr["waist_um"]) * 1e-6,
        )
        g = cfg["grid"]
        self.grid = FrequencyGrid.regular(
            omega_max=thz_to_angular(float(g["max_thz"])),
            step=thz_to_angular(float(g["step_thz"])),
        )
        sq = cfg["squeeze"]
        if "omega1_thz" in sq:
            o1, o2 = thz_to_angular(float(sq["omega1_thz"])), thz_to_angular(float(sq["omega2_thz"]))
        else:
            c, w = float(sq["center_thz"]), float(sq["width_thz"])
            o1, o2 = thz_to_angular(c - 0.5 * w), thz_to_angular(c + 0.5 * w)
        r = float(sq["r"]) if "r" in sq else math.asinh(float(sq["sinh_r"]))
        self.thetas = [float(t) for t in sq.get("thetas", [0.0, math.pi])]
        self.squeeze_specs = [
            SqueezeSpec(omega1=o1, omega2=o2, r=r, theta=t) for t in self.thetas
        ]
        self.m_convention = sq.get("m_convention", "sinh")
        self.tau_span_periods = float(sq.get("tau_span_periods", 2.0))
        self.tau_step_fs = float(sq.get("tau_step_fs", 0.05))
        self.cutoff_enabled = bool(cfg.get("cutoff_enabled", True))
        self.seed = int(cfg.get("seed", 0))
        self.trace_count = int(cfg.get("traces", {}).get("count", 100000))
        self.sweep_decades = float(cfg.get("sweep", {}).get("decades_span", 8.0))
        self.sweep_points = int(cfg.get("sweep", {}).get("points", 81))
        self.output_dir = cfg.get("output_dir", "out")
        self._response = None

    def response(self):
        if self._response is None:
            self._response = build_response(
                self.probe,
                self.eta,
                self.geometry,
                self.phonon,
                grid=self.grid,
                cutoff=self.cutoff_enabled,
            )
        return self._response

    def meta(self, **extra):
        m = {
            "generator": f"eosvac {__version__}",
            "config_sha256": self.config_hash,
        }
        m.update(extra)
        return m


# --------------------------------------------------------------------------
# atomic writers
# --------------------------------------------------------------------------


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt_cell(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return _FFMT.format(float(x))


def write_csv(path, columns, rows, meta):
    """CSV with '#' metadata lines, a header row and 17-digit numbers."""
    lines = [f"# {k} = {v}" for k, v in meta.items()]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_fmt_cell(x) for x in row))
    _atomic_write(path, "\n".join(lines) + "\n")


def write_json(path, payload, meta):
    _atomic_write(path, json.dumps({"meta": meta, "results": payload}, indent=2) + "\n")


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def _range_rows(rng, fn):
    lo, hi, step = float(rng[0]), float(rng[1]), float(rng[2])
    if hi < lo:
        return []
    n = int(math.floor((hi - lo) / step + 1e-9))
    freqs = lo + step * np.arange(n + 1)
    return [(f, fn(f)) for f in freqs]


def cmd_dispersion(res, outdir):
    """NIR and THz index tables."""
    disp = res.raw.get("dispersion", {})
    pr = res.probe
    nir_default = [angular_to_thz(pr.omega_lo), angular_to_thz(pr.omega_hi), 0.5]
    thz_default = [
        angular_to_thz(res.grid.spacing),
        angular_to_thz(res.grid.omega_max),
        angular_to_thz(res.grid.spacing),
    ]
    nir_rng = disp.get("nir_range_thz", nir_default)
    thz_rng = disp.get("thz_range_thz", thz_default)
    nir_rows = _range_rows(nir_rng, lambda f: float(res.sellmeier.n(thz_to_angular(f))))
    thz_rows = _range_rows(thz_rng, lambda f: float(res.phonon.n(thz_to_angular(f))))
    write_csv(
        os.path.join(outdir, "dispersion_nir.csv"),
        ["freq_thz", "n"],
        nir_rows,
        res.meta(band="near-infrared (Sellmeier)"),
    )
    write_csv(
        os.path.join(outdir, "dispersion_thz.csv"),
        ["freq_thz", "n"],
        thz_rows,
        res.meta(band="multi-THz (phonon-polariton)"),
    )


def cmd_response(res, outdir):
    """Response table(s) and the probe temporal profile."""
    rt = res.response()
    rt_nc = build_response(
        res.probe, res.eta, res.geometry, res.phonon, grid=res.grid, cutoff=False
    )
    om = rt.grid.points

    def rows_for(table):
        f_vals = autocorrelation_f(res.probe, res.eta, om)
        sinc_vals = phase_matching_sinc(res.geometry, res.phonon, om)
        integ = variance_integrand(table)
        return [
            (
                angular_to_thz(om[i]),
                float(f_vals[i]),
                float(sinc_vals[i]),
                float(table.values[i]),
                float(integ[i]),
            )
            for i in range(om.size)
        ]

    meta = res.meta(
        cutoff_omega_thz=_FFMT.format(angular_to_thz(rt.cutoff_omega)),
        cutoff_enabled=str(rt.cutoff_enabled).lower(),
    )
    write_csv(
        os.path.join(outdir, "response.csv"),
        ["omega_thz", "f", "sinc", "R", "integrand"],
        rows_for(rt),
        meta,
    )
    meta_nc = res.meta(
        cutoff_omega_thz=_FFMT.format(angular_to_thz(rt_nc.cutoff_omega)),
        cutoff_enabled="false",
    )
    write_csv(
        os.path.join(outdir, "response_nocutoff.csv"),
        ["omega_thz", "f", "sinc", "R", "integrand"],
        rows_for(rt_nc),
        meta_nc,
    )

    t_fs = np.arange(-20.0, 20.0 + 1e-9, 0.01)
    intensity, envelope = temporal_intensity(res.probe, fs_to_seconds(t_fs))
    write_csv(
        os.path.join(outdir, "probe_time.csv"),
        ["time_fs", "intensity", "envelope"],
        list(zip(t_fs, intensity, envelope)),
        res.meta(),
    )


def cmd_variance(res, outdir):
    """Vacuum-noise summary and photon-number sweep."""
    rt = res.response()
    stats = eos_variance_pv(res.probe, res.eta, res.geometry, rt)
    omega_p = avg_detected_frequency(res.probe, res.eta)
    field = effective_vacuum_field(rt, res.geometry, omega_p)
    try:
        n_star = crossover_photon_number(stats)
    except ValueError:
        n_star = None

    summary = {
        "photons": stats.photons_n,
        "kappa": stats.kappa,
        "var_eo": stats.var_eo,
        "var_sn": stats.var_sn,
        "rms_total": stats.rms_total,
        "ratio_excess": stats.ratio_excess,
        "e_rms_v_per_m": field.e_rms,
        "sampling_gain_m_per_v": field.sampling_gain,
        "omega_p_thz": angular_to_thz(omega_p),
        "crossover_photons": n_star,
        "cutoff_omega_thz": angular_to_thz(rt.cutoff_omega),
    }
    write_json(os.path.join(outdir, "variance_summary.json"), summary, res.meta())

    if n_star is not None:
        half = 0.5 * res.sweep_decades
        n_values = np.logspace(
            math.log10(n_star) - half, math.log10(n_star) + half, res.sweep_points
        )
        n_values = np.unique(np.append(n_values, [n_star, stats.photons_n]))
    else:
        n_values = np.unique(np.append(np.logspace(0, 12, res.sweep_points), stats.photons_n))
    table = sweep_photon_number(stats, n_values)
    write_csv(
        os.path.join(outdir, "sweep.csv"),
        ["n_photons", "ds_over_n", "sn_over_n", "excess"],
        [tuple(row) for row in table],
        res.meta(
            kappa=_FFMT.format(stats.kappa),
            crossover_photons="none" if n_star is None else _FFMT.format(n_star),
        ),
    )


def _theta_label(theta):
    if abs(theta) < 1e-12:
        return "theta0"
    if abs(theta - math.pi) < 1e-12:
        return "thetapi"
    return f"theta{theta:.6f}".rstrip("0").rstrip(".")


def cmd_squeeze(res, outdir):
    """Delay traces, band coefficients, optimum and uncertainty ellipses."""
    rt = res.response()
    base = res.squeeze_specs[0]
    coeffs = squeeze_coefficients(rt, base)
    m = base.magnitude(res.m_convention)
    period_fs = seconds_to_fs(base.trace_period)
    tau_fs = np.arange(
        0.0, res.tau_span_periods * period_fs + 1e-12, res.tau_step_fs
    )
    tau_s = fs_to_seconds(tau_fs)

    for spec in res.squeeze_specs:
        ratio = sv_variance_ratio(coeffs, spec, tau_s, res.m_convention)
        write_csv(
            os.path.join(outdir, f"squeeze_{_theta_label(spec.theta)}.csv"),
            ["tau_fs", "ratio"],
            list(zip(tau_fs, ratio)),
            res.meta(
                theta=_FFMT.format(spec.theta),
                m=_FFMT.format(m),
                period_fs=_FFMT.format(period_fs),
            ),
        )

    lo, hi = sv_extrema(coeffs, m)
    opt = optimal_squeeze(coeffs)
    summary = {
        "i_total": coeffs.i_total,
        "i_band": coeffs.i_band,
        "i_cross": coeffs.i_cross,
        "a": coeffs.a,
        "b": coeffs.b,
        "m": m,
        "m_convention": res.m_convention,
        "ratio_min": lo,
        "ratio_max": hi,
        "period_fs": period_fs,
        "optimal_m": opt.m,
        "optimal_ratio": opt.ratio,
        "optimal_interior": opt.interior,
    }
    write_json(os.path.join(outdir, "squeeze_summary.json"), summary, res.meta())

    vac_x, vac_y = ellipse_points(0.0, 0.0)
    write_csv(
        os.path.join(outdir, "ellipse_vacuum.csv"),
        ["x", "y"],
        list(zip(vac_x, vac_y)),
        res.meta(r="0", theta="0"),
    )
    for spec in res.squeeze_specs:
        ex, ey = ellipse_points(spec.r, spec.theta)
        write_csv(
            os.path.join(outdir, f"ellipse_{_theta_label(spec.theta)}.csv"),
            ["x", "y"],
            list(zip(ex, ey)),
            res.meta(r=_FFMT.format(spec.r), theta=_FFMT.format(spec.theta)),
        )


def cmd_traces(res, outdir, count=None):
    """Synthetic per-pulse signals."""
    rt = res.response()
    stats = eos_variance_pv(res.probe, res.eta, res.geometry, rt)
    n = res.trace_count if count is None else int(count)
    samples = synth_traces(stats, n, res.seed)
    write_csv(
        os.path.join(outdir, "traces.csv"),
        ["pulse_index", "signal"],
        list(zip(range(n), samples)),
        res.meta(
            seed=res.seed,
            rng=TRACE_GENERATOR,
            variance=_FFMT.format(stats.var_eo + stats.var_sn),
        ),
    )


COMMANDS = ("dispersion", "response", "variance", "squeeze", "traces", "all")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="eosvac",
        description="electro-optic sampling of THz vacuum: batch computations to CSV",
    )
    parser.add_argument("command", choices=COMMANDS, help="computation to run")
    parser.add_argument(
        "--config",
        default="paper-znte",
        help="preset name or JSON config path (default: paper-znte)",
    )
    parser.add_argument("--out", default=None, help="output directory (overrides config)")
    parser.add_argument(
        "--no-cutoff",
        action="store_true",
        help="disable the diffraction low-frequency cutoff",
    )
    parser.add_argument("--seed", type=int, default=None, help="RNG seed (overrides config)")
    parser.add_argument(
        "--grid-step-thz",
        type=float,
        default=None,
        help="frequency-grid spacing in THz (overrides config)",
    )
    parser.add_argument(
        "--count", type=int, default=None, help="number of synthetic traces (traces command)"
    )
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        if args.no_cutoff:
            cfg["cutoff_enabled"] = False
        if args.seed is not None:
            cfg["seed"] = args.seed
        if args.grid_step_thz is not None:
            cfg.setdefault("grid", {})["step_thz"] = args.grid_step_thz
        if args.count is not None:
            cfg.setdefault("traces", {})["count"] = args.count
        if args.out is not None:
            cfg["output_dir"] = args.out
        res = Resolved(cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ValueError, OSError) as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    outdir = res.output_dir
    steps = {
        "dispersion": [cmd_dispersion],
        "response": [cmd_response],
        "variance": [cmd_variance],
        "squeeze": [cmd_squeeze],
        "traces": [cmd_traces],
        "all": [cmd_dispersion, cmd_response, cmd_variance, cmd_squeeze, cmd_traces],
    }[args.command]
    for step in steps:
        try:
            step(res, outdir)
        except OSError as exc:
            print(f"error: I/O failure in {step.__name__}: {exc}", file=sys.stderr)
            return EXIT_IO
        except Exception as exc:  # computation failures (quadrature, domain, ...)
            print(f"error: computation failed in {step.__name__}: {exc}", file=sys.stderr)
            return EXIT_COMPUTE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
