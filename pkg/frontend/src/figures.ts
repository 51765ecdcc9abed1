/**
 * The eight figure jobs.
 *
 * Each job reads documented CSV artifacts from one engine run, checks the
 * schema and the shared configuration hash, and renders a deterministic
 * SVG.  No physics is computed here; every plotted number comes straight
 * from the input files.
 */

import { mkdirSync, writeFileSync } from "node:fs";
import { dirname, join } from "node:path";

import { assertSameConfig, column, metaNumber, readTable, requireColumns, Table } from "./csv.js";
import { ChartSpec, renderChart } from "./svg.js";

export type FigureId =
  | "fig2a"
  | "fig2b"
  | "fig2c"
  | "fig3b"
  | "fig3c"
  | "figs1"
  | "figs2"
  | "figs3";

/** CSV files each figure consumes, relative to the input directory */
export const FIGURE_INPUTS: Record<FigureId, string[]> = {
  fig2a: ["response.csv"],
  fig2b: ["sweep.csv"],
  fig2c: ["sweep.csv"],
  fig3b: ["ellipse_vacuum.csv", "ellipse_theta0.csv", "ellipse_thetapi.csv"],
  fig3c: ["squeeze_theta0.csv", "squeeze_thetapi.csv"],
  figs1: ["probe_time.csv"],
  figs2: ["dispersion_thz.csv", "dispersion_nir.csv"],
  figs3: ["response.csv", "response_nocutoff.csv"],
};

export const FIGURE_IDS = Object.keys(FIGURE_INPUTS) as FigureId[];

function loadInputs(id: FigureId, inDir: string): { tables: Table[]; hash: string } {
  const tables = FIGURE_INPUTS[id].map((name) => readTable(join(inDir, name)));
  for (const t of tables) {
    if (t.rows.length === 0) {
      throw new Error(`${t.path}: no data rows`);
    }
  }
  return { tables, hash: assertSameConfig(tables) };
}

const footer = (hash: string): string => `config_sha256 ${hash}`;

type Builder = (tables: Table[], hash: string) => ChartSpec;

const builders: Record<FigureId, Builder> = {
  // spectral weight of the detected vacuum: the integrand whose area is var_eo
  fig2a: ([response], hash) => {
    requireColumns(response, ["omega_thz", "integrand"]);
    return {
      title: "Spectral weight of the detected vacuum",
      xLabel: "frequency (THz)",
      yLabel: "integrand (s^-2 m^-2 per rad/s)",
      series: [
        { x: column(response, "omega_thz"), y: column(response, "integrand"), stroke: "black" },
      ],
      footer: footer(hash),
    };
  },

  // relative noise vs photon number, double-log, with both one-sided limits
  fig2b: ([sweep], hash) => {
    requireColumns(sweep, ["n_photons", "ds_over_n", "sn_over_n"]);
    const n = column(sweep, "n_photons");
    const kappa = metaNumber(sweep, "kappa");
    return {
      title: "Relative noise vs probe photon number",
      xLabel: "photon number N",
      yLabel: "rms noise / N",
      xScale: "log",
      yScale: "log",
      series: [
        { x: n, y: column(sweep, "ds_over_n"), stroke: "black", width: 2, label: "total" },
        { x: n, y: column(sweep, "sn_over_n"), stroke: "black", dash: "2 4", label: "shot noise" },
      ],
      guides: [
        { axis: "y", value: kappa, stroke: "red", dash: "8 4", label: "vacuum asymptote" },
      ],
      footer: footer(hash),
    };
  },

  // noise in excess of shot noise vs photon number
  fig2c: ([sweep], hash) => {
    requireColumns(sweep, ["n_photons", "excess"]);
    const crossover = metaNumber(sweep, "crossover_photons");
    return {
      title: "Excess noise above the shot-noise level",
      xLabel: "photon number N",
      yLabel: "(rms - rms_sn) / rms_sn",
      xScale: "log",
      yScale: "log",
      series: [
        { x: column(sweep, "n_photons"), y: column(sweep, "excess"), stroke: "black", width: 2 },
      ],
      guides: [
        { axis: "x", value: crossover, stroke: "#888", dash: "4 4", label: "crossover N*" },
      ],
      footer: footer(hash),
    };
  },

  // quadrature uncertainty contours: bare vacuum circle vs squeezed ellipses
  fig3b: ([vacuum, theta0, thetapi], hash) => {
    for (const t of [vacuum, theta0, thetapi]) requireColumns(t, ["x", "y"]);
    return {
      title: "Quadrature uncertainty contours",
      xLabel: "amplitude quadrature X",
      yLabel: "phase quadrature Y",
      equalAspect: true,
      series: [
        { x: column(vacuum, "x"), y: column(vacuum, "y"), stroke: "#888", width: 2, label: "vacuum" },
        { x: column(theta0, "x"), y: column(theta0, "y"), stroke: "red", width: 2, label: "theta = 0" },
        { x: column(thetapi, "x"), y: column(thetapi, "y"), stroke: "green", width: 2, label: "theta = pi" },
      ],
      footer: footer(hash),
    };
  },

  // delay-dependent noise of squeezed vacuum, normalized to the bare level
  fig3c: ([theta0, thetapi], hash) => {
    for (const t of [theta0, thetapi]) requireColumns(t, ["tau_fs", "ratio"]);
    return {
      title: "Squeezed-vacuum noise vs sampling delay",
      xLabel: "delay tau (fs)",
      yLabel: "variance / bare-vacuum variance",
      series: [
        { x: column(theta0, "tau_fs"), y: column(theta0, "ratio"), stroke: "red", width: 2, label: "theta = 0" },
        {
          x: column(thetapi, "tau_fs"),
          y: column(thetapi, "ratio"),
          stroke: "green",
          dash: "6 4",
          width: 2,
          label: "theta = pi",
        },
      ],
      guides: [{ axis: "y", value: 1.0, stroke: "black", label: "bare vacuum" }],
      footer: footer(hash),
    };
  },

  // temporal intensity profile of the probe pulse
  figs1: ([probe], hash) => {
    requireColumns(probe, ["time_fs", "intensity", "envelope"]);
    const t = column(probe, "time_fs");
    return {
      title: "Probe pulse temporal profile",
      xLabel: "time (fs)",
      yLabel: "intensity (peak-normalized)",
      series: [
        { x: t, y: column(probe, "intensity"), stroke: "red", label: "intensity" },
        { x: t, y: column(probe, "envelope"), stroke: "blue", dash: "6 4", label: "envelope" },
      ],
      footer: footer(hash),
    };
  },

  // refractive index in both frequency bands
  figs2: ([thz, nir], hash) => {
    for (const t of [thz, nir]) requireColumns(t, ["freq_thz", "n"]);
    return {
      title: "Refractive index dispersion",
      xLabel: "frequency (THz)",
      yLabel: "refractive index n",
      series: [
        { x: column(thz, "freq_thz"), y: column(thz, "n"), stroke: "red", width: 2, label: "multi-THz band" },
        { x: column(nir, "freq_thz"), y: column(nir, "n"), stroke: "blue", dash: "6 4", width: 2, label: "NIR band" },
      ],
      footer: footer(hash),
    };
  },

  // detection response with and without the low-frequency cutoff
  figs3: ([withCut, noCut], hash) => {
    for (const t of [withCut, noCut]) requireColumns(t, ["omega_thz", "R"]);
    return {
      title: "Detection response and low-frequency cutoff",
      xLabel: "frequency (THz)",
      yLabel: "response R",
      series: [
        {
          x: column(noCut, "omega_thz"),
          y: column(noCut, "R"),
          stroke: "red",
          dash: "6 4",
          label: "no cutoff",
        },
        { x: column(withCut, "omega_thz"), y: column(withCut, "R"), stroke: "black", width: 2, label: "with cutoff" },
      ],
      footer: footer(hash),
    };
  },
};

/** Render one figure from the artifacts in `inDir`; returns the SVG text. */
export function renderFigure(id: FigureId, inDir: string): string {
  const builder = builders[id];
  if (!builder) {
    throw new Error(`unknown figure "${id}" (know: ${FIGURE_IDS.join(", ")})`);
  }
  const { tables, hash } = loadInputs(id, inDir);
  return renderChart(builder(tables, hash));
}

/** Render and write atomically-enough: nothing is written unless rendering succeeds. */
export function renderFigureToFile(id: FigureId, inDir: string, outPath: string): void {
  const svg = renderFigure(id, inDir);
  mkdirSync(dirname(outPath), { recursive: true });
  writeFileSync(outPath, svg, "utf8");
}
