import { describe, expect, it } from "vitest";

import {
  CANVAS,
  ChartSpec,
  linearTicks,
  logTicks,
  makeScale,
  polylinePoints,
  renderChart,
} from "../src/svg";

describe("tick generation", () => {
  it("linear ticks are round values covering the span", () => {
    expect(linearTicks(0, 160)).toEqual([0, 25, 50, 75, 100, 125, 150]);
    expect(linearTicks(-20, 20)).toEqual([-20, -10, 0, 10, 20]);
  });

  it("log ticks are the decades inside the domain", () => {
    expect(logTicks(7.7e6, 7.7e13)).toEqual([1e7, 1e8, 1e9, 1e10, 1e11, 1e12, 1e13]);
    expect(logTicks(1, 100)).toEqual([1, 10, 100]);
  });
});

describe("makeScale", () => {
  it("linear scale maps domain endpoints to range endpoints", () => {
    const s = makeScale("linear", [0, 10], [100, 300]);
    expect(s(0)).toBeCloseTo(100, 10);
    expect(s(10)).toBeCloseTo(300, 10);
    expect(s(5)).toBeCloseTo(200, 10);
  });

  it("log scale maps decades evenly", () => {
    const s = makeScale("log", [1, 100], [0, 200]);
    expect(s(1)).toBeCloseTo(0, 10);
    expect(s(10)).toBeCloseTo(100, 10);
    expect(s(100)).toBeCloseTo(200, 10);
  });

  it("log scale rejects nonpositive domains", () => {
    expect(() => makeScale("log", [0, 10], [0, 1])).toThrow(/positive domain/);
    expect(() => makeScale("log", [-1, 10], [0, 1])).toThrow(/positive domain/);
  });
});

describe("polylinePoints", () => {
  const sx = makeScale("linear", [0, 1], [0, 100]);
  const sy = makeScale("linear", [0, 1], [100, 0]);

  it("renders x,y pixel pairs", () => {
    expect(polylinePoints([0, 1], [0, 1], sx, sy)).toBe("0.00,100.00 100.00,0.00");
  });

  it("skips non-finite samples", () => {
    expect(polylinePoints([0, NaN, 1], [0, 0.5, 1], sx, sy)).toBe("0.00,100.00 100.00,0.00");
  });
});

const spec = (): ChartSpec => ({
  title: "test chart",
  xLabel: "x axis",
  yLabel: "y axis",
  series: [{ x: [0, 1, 2], y: [1, 3, 2], stroke: "red", label: "trace" }],
  guides: [{ axis: "y", value: 2, stroke: "black", dash: "4 4", label: "guide" }],
  footer: "config_sha256 cafebabe",
});

describe("renderChart", () => {
  it("is deterministic: identical spec, identical bytes", () => {
    expect(renderChart(spec())).toBe(renderChart(spec()));
  });

  it("uses the fixed canvas size", () => {
    const svg = renderChart(spec());
    expect(svg).toContain(`width="${CANVAS.width}" height="${CANVAS.height}"`);
    expect(svg).toContain(`viewBox="0 0 ${CANVAS.width} ${CANVAS.height}"`);
  });

  it("carries title, axis labels, legend and footer", () => {
    const svg = renderChart(spec());
    expect(svg).toContain(">test chart</text>");
    expect(svg).toContain(">x axis</text>");
    expect(svg).toContain(">y axis</text>");
    expect(svg).toContain(">trace</text>");
    expect(svg).toContain(">guide</text>");
    expect(svg).toContain(">config_sha256 cafebabe</text>");
  });

  it("escapes markup-significant characters in text", () => {
    const s = spec();
    s.title = "a < b & c > d";
    expect(renderChart(s)).toContain("a &lt; b &amp; c &gt; d");
  });

  it("equal-aspect charts use a square plot frame", () => {
    const s = spec();
    s.equalAspect = true;
    const svg = renderChart(s);
    const frame = svg.match(/<rect x="[\d.]+" y="[\d.]+" width="([\d.]+)" height="([\d.]+)" fill="none"/);
    expect(frame).not.toBeNull();
    expect(frame![1]).toBe(frame![2]);
  });

  it("rejects series with no finite data", () => {
    const s = spec();
    s.series = [{ x: [NaN], y: [NaN], stroke: "red" }];
    expect(() => renderChart(s)).toThrow(/no finite data/);
  });
});
