/**
 * Minimal deterministic SVG chart builder.
 *
 * Pure string assembly: no DOM, no rendering backend, no randomness and no
 * timestamps, so identical inputs give byte-identical files.  Only the
 * pieces the figure jobs need: linear/log axes, polyline series, guide
 * lines and a provenance footer.
 */

export const CANVAS = { width: 860, height: 560 } as const;
const MARGIN = { left: 78, right: 24, top: 46, bottom: 74 } as const;
const FONT = "font-family=\"Helvetica, Arial, sans-serif\"";

export interface Series {
  x: number[];
  y: number[];
  stroke: string;
  /** SVG dash pattern, e.g. "6 4"; solid when omitted */
  dash?: string;
  width?: number;
  label?: string;
}

export interface GuideLine {
  /** orientation: horizontal at y = value, or vertical at x = value */
  axis: "x" | "y";
  value: number;
  stroke: string;
  dash?: string;
  label?: string;
}

export interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  xScale?: "linear" | "log";
  yScale?: "linear" | "log";
  series: Series[];
  guides?: GuideLine[];
  /** provenance line printed under the plot, e.g. the config hash */
  footer: string;
  /** force identical x/y pixel-per-unit (error-ellipse panels) */
  equalAspect?: boolean;
  xDomain?: [number, number];
  yDomain?: [number, number];
}

export interface Scale {
  (v: number): number;
  domain: [number, number];
  ticks: number[];
}

/** ~6 round-valued ticks covering [lo, hi] */
export function linearTicks(lo: number, hi: number): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const raw = span / 6;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => span / s <= 7)!;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) {
    ticks.push(Math.abs(v) < 1e-12 * step ? 0 : v);
  }
  return ticks;
}

/** decade ticks covering [lo, hi]; lo must be > 0 */
export function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.ceil(Math.log10(lo) - 1e-9); Math.pow(10, e) <= hi * (1 + 1e-9); e++) {
    ticks.push(Math.pow(10, e));
  }
  return ticks;
}

export function makeScale(
  kind: "linear" | "log",
  domain: [number, number],
  range: [number, number],
): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  if (kind === "log" && (d0 <= 0 || d1 <= 0)) {
    throw new Error(`log scale needs a positive domain, got [${d0}, ${d1}]`);
  }
  const t0 = kind === "log" ? Math.log10(d0) : d0;
  const t1 = kind === "log" ? Math.log10(d1) : d1;
  const f = (v: number): number => {
    const t = kind === "log" ? Math.log10(v) : v;
    return r0 + ((t - t0) / (t1 - t0)) * (r1 - r0);
  };
  const scale = f as Scale;
  scale.domain = domain;
  scale.ticks = kind === "log" ? logTicks(d0, d1) : linearTicks(d0, d1);
  return scale;
}

function fmtTick(v: number, kind: "linear" | "log"): string {
  if (kind === "log") {
    const e = Math.round(Math.log10(v));
    return `1e${e}`;
  }
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(0).replace("e+", "e");
  return Number(v.toPrecision(6)).toString();
}

const px = (v: number): string => v.toFixed(2);

function dataExtent(series: Series[], pick: (s: Series) => number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const s of series) {
    for (const v of pick(s)) {
      if (!Number.isFinite(v)) continue;
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (!(hi >= lo)) throw new Error("no finite data to plot");
  if (hi === lo) {
    hi += 1;
    lo -= 1;
  }
  return [lo, hi];
}

export function polylinePoints(xs: number[], ys: number[], sx: Scale, sy: Scale): string {
  const pts: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    if (!Number.isFinite(xs[i]) || !Number.isFinite(ys[i])) continue;
    pts.push(`${px(sx(xs[i]))},${px(sy(ys[i]))}`);
  }
  return pts.join(" ");
}

const esc = (s: string): string =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

export function renderChart(spec: ChartSpec): string {
  const xKind = spec.xScale ?? "linear";
  const yKind = spec.yScale ?? "linear";
  const { width, height } = CANVAS;

  let plotLeft = MARGIN.left;
  let plotRight = width - MARGIN.right;
  let plotTop = MARGIN.top;
  let plotBottom = height - MARGIN.bottom;

  let xDom = spec.xDomain ?? dataExtent(spec.series, (s) => s.x);
  let yDom = spec.yDomain ?? dataExtent(spec.series, (s) => s.y);

  if (spec.equalAspect) {
    // center a square plot area and give both axes the same span
    const side = Math.min(plotRight - plotLeft, plotBottom - plotTop);
    const cx = (plotLeft + plotRight) / 2;
    const cy = (plotTop + plotBottom) / 2;
    plotLeft = cx - side / 2;
    plotRight = cx + side / 2;
    plotTop = cy - side / 2;
    plotBottom = cy + side / 2;
    const span = Math.max(xDom[1] - xDom[0], yDom[1] - yDom[0]);
    const mx = (xDom[0] + xDom[1]) / 2;
    const my = (yDom[0] + yDom[1]) / 2;
    xDom = [mx - span / 2, mx + span / 2];
    yDom = [my - span / 2, my + span / 2];
  }

  const sx = makeScale(xKind, xDom, [plotLeft, plotRight]);
  const sy = makeScale(yKind, yDom, [plotBottom, plotTop]);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${px(width / 2)}" y="26" text-anchor="middle" ${FONT} ` +
      `font-size="16">${esc(spec.title)}</text>`,
  );

  // frame and ticks
  parts.push(
    `<rect x="${px(plotLeft)}" y="${px(plotTop)}" width="${px(plotRight - plotLeft)}" ` +
      `height="${px(plotBottom - plotTop)}" fill="none" stroke="black"/>`,
  );
  for (const t of sx.ticks) {
    const X = sx(t);
    if (X < plotLeft - 0.5 || X > plotRight + 0.5) continue;
    parts.push(
      `<line x1="${px(X)}" y1="${px(plotBottom)}" x2="${px(X)}" y2="${px(plotBottom + 6)}" stroke="black"/>`,
    );
    parts.push(
      `<text x="${px(X)}" y="${px(plotBottom + 22)}" text-anchor="middle" ${FONT} ` +
        `font-size="12">${fmtTick(t, xKind)}</text>`,
    );
  }
  for (const t of sy.ticks) {
    const Y = sy(t);
    if (Y < plotTop - 0.5 || Y > plotBottom + 0.5) continue;
    parts.push(
      `<line x1="${px(plotLeft - 6)}" y1="${px(Y)}" x2="${px(plotLeft)}" y2="${px(Y)}" stroke="black"/>`,
    );
    parts.push(
      `<text x="${px(plotLeft - 10)}" y="${px(Y + 4)}" text-anchor="end" ${FONT} ` +
        `font-size="12">${fmtTick(t, yKind)}</text>`,
    );
  }
  parts.push(
    `<text x="${px((plotLeft + plotRight) / 2)}" y="${px(plotBottom + 46)}" ` +
      `text-anchor="middle" ${FONT} font-size="14">${esc(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="20" y="${px((plotTop + plotBottom) / 2)}" text-anchor="middle" ${FONT} ` +
      `font-size="14" transform="rotate(-90 20 ${px((plotTop + plotBottom) / 2)})">` +
      `${esc(spec.yLabel)}</text>`,
  );

  // guide lines first so data draws on top
  for (const g of spec.guides ?? []) {
    const dash = g.dash ? ` stroke-dasharray="${g.dash}"` : "";
    if (g.axis === "y") {
      const Y = sy(g.value);
      parts.push(
        `<line x1="${px(plotLeft)}" y1="${px(Y)}" x2="${px(plotRight)}" y2="${px(Y)}" ` +
          `stroke="${g.stroke}"${dash}/>`,
      );
    } else {
      const X = sx(g.value);
      parts.push(
        `<line x1="${px(X)}" y1="${px(plotTop)}" x2="${px(X)}" y2="${px(plotBottom)}" ` +
          `stroke="${g.stroke}"${dash}/>`,
      );
    }
  }

  for (const s of spec.series) {
    const dash = s.dash ? ` stroke-dasharray="${s.dash}"` : "";
    parts.push(
      `<polyline fill="none" stroke="${s.stroke}" stroke-width="${s.width ?? 1.5}"${dash} ` +
        `points="${polylinePoints(s.x, s.y, sx, sy)}"/>`,
    );
  }

  // legend: labelled series and guides, top-right inside the frame
  const entries = [
    ...spec.series.filter((s) => s.label).map((s) => ({ ...s, kind: "series" as const })),
    ...(spec.guides ?? []).filter((g) => g.label).map((g) => ({ ...g, kind: "guide" as const })),
  ];
  entries.forEach((e, i) => {
    const Y = plotTop + 16 + 18 * i;
    const dash = e.dash ? ` stroke-dasharray="${e.dash}"` : "";
    parts.push(
      `<line x1="${px(plotRight - 150)}" y1="${px(Y - 4)}" x2="${px(plotRight - 118)}" ` +
        `y2="${px(Y - 4)}" stroke="${e.stroke}" stroke-width="2"${dash}/>`,
    );
    parts.push(
      `<text x="${px(plotRight - 112)}" y="${px(Y)}" ${FONT} font-size="12">` +
        `${esc(e.label!)}</text>`,
    );
  });

  parts.push(
    `<text x="${px(width / 2)}" y="${px(height - 10)}" text-anchor="middle" ${FONT} ` +
      `font-size="10" fill="#666">${esc(spec.footer)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
