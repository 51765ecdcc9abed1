import { existsSync, mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { main } from "../src/cli";
import { column, readTable } from "../src/csv";
import { FIGURE_IDS, FIGURE_INPUTS, FigureId, renderFigure, renderFigureToFile } from "../src/figures";

const FIXTURES = fileURLToPath(new URL("./fixtures/paper-znte", import.meta.url));

/** copy selected fixture files into a fresh temp dir, optionally rewriting them */
function fixtureDir(
  files: string[],
  rewrite: Partial<Record<string, (text: string) => string>> = {},
): string {
  const dir = mkdtempSync(join(tmpdir(), "eosvac-figs-"));
  for (const name of files) {
    let text = readFileSync(join(FIXTURES, name), "utf8");
    const fn = rewrite[name];
    if (fn) text = fn(text);
    writeFileSync(join(dir, name), text);
  }
  return dir;
}

describe("all eight figure jobs", () => {
  const runHash = readTable(join(FIXTURES, "response.csv")).meta["config_sha256"];

  it.each(FIGURE_IDS)("%s renders deterministic SVG with provenance", (id) => {
    const svg = renderFigure(id, FIXTURES);
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.endsWith("</svg>\n")).toBe(true);
    expect(svg).toContain(`config_sha256 ${runHash}`);
    // pure string assembly: a second render is byte-identical
    expect(renderFigure(id, FIXTURES)).toBe(svg);
  });

  it("writes byte-identical files on repeated runs", () => {
    const dir = mkdtempSync(join(tmpdir(), "eosvac-out-"));
    const a = join(dir, "a.svg");
    const b = join(dir, "b.svg");
    renderFigureToFile("fig3b", FIXTURES, a);
    renderFigureToFile("fig3b", FIXTURES, b);
    expect(readFileSync(a)).toEqual(readFileSync(b));
  });

  it("rejects an unknown figure id", () => {
    expect(() => renderFigure("fig9z" as FigureId, FIXTURES)).toThrow(/unknown figure "fig9z"/);
  });

  it("every declared input file exists in the fixture run", () => {
    for (const id of FIGURE_IDS) {
      for (const name of FIGURE_INPUTS[id]) {
        expect(existsSync(join(FIXTURES, name)), `${id}: ${name}`).toBe(true);
      }
    }
  });
});

describe("fig2b: noise vs photon number", () => {
  const svg = renderFigure("fig2b", FIXTURES);

  it("uses double-log axes", () => {
    // decade tick labels on both axes
    expect(svg).toContain(">1e10</text>");
    expect(svg).toContain(">1e13</text>");
    expect(svg).toContain(">1e-5</text>");
    expect(svg).toContain(">1e-4</text>");
  });

  it("shows the shot-noise and vacuum guide curves", () => {
    expect(svg).toContain(">shot noise</text>");
    expect(svg).toContain(">vacuum asymptote</text>");
    // horizontal red dashed line at the kappa level
    expect(svg).toMatch(/<line x1="[\d.]+" y1="([\d.]+)" x2="[\d.]+" y2="\1" stroke="red" stroke-dasharray="8 4"\/>/);
  });
});

describe("fig2c: excess noise", () => {
  it("marks the crossover photon number", () => {
    const svg = renderFigure("fig2c", FIXTURES);
    expect(svg).toContain(">crossover N*</text>");
    // vertical guide: shared x, spanning the frame
    expect(svg).toMatch(/<line x1="([\d.]+)" y1="[\d.]+" x2="\1" y2="[\d.]+" stroke="#888" stroke-dasharray="4 4"\/>/);
  });
});

describe("fig3b: quadrature ellipses", () => {
  it("draws three contours in a square frame", () => {
    const svg = renderFigure("fig3b", FIXTURES);
    expect(svg.match(/<polyline /g)).toHaveLength(3);
    expect(svg).toContain(">vacuum</text>");
    expect(svg).toContain(">theta = 0</text>");
    expect(svg).toContain(">theta = pi</text>");
    const frame = svg.match(/<rect x="[\d.]+" y="[\d.]+" width="([\d.]+)" height="([\d.]+)" fill="none"/);
    expect(frame![1]).toBe(frame![2]);
  });
});

describe("fig3c: squeezed-vacuum noise vs delay", () => {
  const theta0 = readTable(join(FIXTURES, "squeeze_theta0.csv"));
  const tau = column(theta0, "tau_fs");
  const ratio = column(theta0, "ratio");

  it("input trace oscillates about the bare-vacuum level 1", () => {
    expect(Math.min(...ratio)).toBeLessThan(1.0);
    expect(Math.max(...ratio)).toBeGreaterThan(1.0);
    // crossings of the level 1: at least twice per period over a 2-period span
    let crossings = 0;
    for (let i = 1; i < ratio.length; i++) {
      if ((ratio[i - 1] - 1) * (ratio[i] - 1) < 0) crossings++;
    }
    expect(crossings).toBeGreaterThanOrEqual(4);
  });

  it("oscillation period is 12.5 fs", () => {
    // spacing of strict local maxima
    const peaks: number[] = [];
    for (let i = 1; i < ratio.length - 1; i++) {
      if (ratio[i] > ratio[i - 1] && ratio[i] >= ratio[i + 1]) peaks.push(tau[i]);
    }
    expect(peaks.length).toBeGreaterThanOrEqual(1);
    const spacings = peaks.slice(1).map((t, i) => t - peaks[i]);
    for (const s of spacings) {
      expect(s).toBeGreaterThan(12.4);
      expect(s).toBeLessThan(12.6);
    }
    // the metadata agrees
    expect(Number(theta0.meta["period_fs"])).toBeCloseTo(12.5, 9);
  });

  it("rendered figure overlays the bare-vacuum line at 1 and both traces", () => {
    const svg = renderFigure("fig3c", FIXTURES);
    expect(svg).toContain(">bare vacuum</text>");
    expect(svg).toContain(">theta = 0</text>");
    expect(svg).toContain(">theta = pi</text>");
    // full-width horizontal black guide strictly inside the frame
    // (y-axis tick marks also have y1 == y2, but span only 6 px)
    const horizontals = [...svg.matchAll(/<line x1="([\d.]+)" y1="([\d.]+)" x2="([\d.]+)" y2="\2" stroke="black"\/>/g)];
    const guide = horizontals.find((m) => Number(m[3]) - Number(m[1]) > 700);
    expect(guide).toBeDefined();
    const y = Number(guide![2]);
    expect(y).toBeGreaterThan(46);
    expect(y).toBeLessThan(486);
    expect(svg.match(/<polyline /g)).toHaveLength(2);
  });
});

describe("input validation", () => {
  it("empty CSV: error raised, no file written", () => {
    const dir = fixtureDir(["sweep.csv"], {
      "sweep.csv": (text) =>
        text
          .split("\n")
          .filter((l) => l.startsWith("#") || l.startsWith("n_photons"))
          .join("\n") + "\n",
    });
    const out = join(dir, "fig2b.svg");
    expect(() => renderFigureToFile("fig2b", dir, out)).toThrow(/sweep\.csv: no data rows/);
    expect(existsSync(out)).toBe(false);
  });

  it("schema mismatch: offending column is named", () => {
    const dir = fixtureDir(["sweep.csv"], {
      "sweep.csv": (text) => text.replace("ds_over_n", "total"),
    });
    expect(() => renderFigure("fig2b", dir)).toThrow(/missing column "ds_over_n"/);
  });

  it("inputs from different runs are rejected by hash", () => {
    const dir = fixtureDir(["squeeze_theta0.csv", "squeeze_thetapi.csv"], {
      "squeeze_thetapi.csv": (text) =>
        text.replace(/config_sha256 = [0-9a-f]+/, `config_sha256 = ${"0".repeat(64)}`),
    });
    expect(() => renderFigure("fig3c", dir)).toThrow(/configuration hash mismatch/);
  });

  it("missing input file is a hard error", () => {
    const dir = fixtureDir(["response.csv"]);
    expect(() => renderFigure("figs3", dir)).toThrow(/response_nocutoff\.csv/);
  });
});

describe("cli", () => {
  it("renders a figure end to end", () => {
    const out = join(mkdtempSync(join(tmpdir(), "eosvac-cli-")), "fig3c.svg");
    expect(main(["--figure", "fig3c", "--in", FIXTURES, "--out", out])).toBe(0);
    expect(readFileSync(out, "utf8")).toContain("</svg>");
  });

  it("usage errors exit 2", () => {
    expect(main([])).toBe(2);
    expect(main(["--figure", "fig3c"])).toBe(2);
    expect(main(["--figure", "nope", "--in", FIXTURES, "--out", "x.svg"])).toBe(2);
    expect(main(["--figure"])).toBe(2);
  });

  it("render failures exit 1", () => {
    const out = join(tmpdir(), "should-not-exist.svg");
    expect(main(["--figure", "fig2a", "--in", "/nonexistent-dir", "--out", out])).toBe(1);
  });
});
