/**
 * Self-contained SVG chart builder: linear/log scales, decade or nice
 * ticks, one colored series per key, dashed horizontal threshold lines.
 * Output depends only on the inputs, so re-rendering overwrites the file
 * with identical bytes.
 */

import type { Scale } from "./kinds.js";

export interface Point {
  x: number;
  y: number;
}

export interface Series {
  key: string;
  points: Point[];
}

export interface ChartConfig {
  title: string;
  xLabel: string;
  yLabel: string;
  xScale: Scale;
  yScale: Scale;
  thresholds: number[];
  line: boolean;
  symmetricX?: boolean;
  width?: number;
  height?: number;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

const MARGIN = { top: 44, right: 24, bottom: 52, left: 72 };

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) {
    return v.toExponential(0).replace("e+", "e").replace("e-", "e-");
  }
  return String(Number(v.toPrecision(6)));
}

function niceLinearTicks(min: number, max: number, count: number): number[] {
  const span = max - min || 1;
  const rough = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= rough) ?? rough;
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function decadeTicks(min: number, max: number): number[] {
  const lo = Math.ceil(Math.log10(min) - 1e-9);
  const hi = Math.floor(Math.log10(max) + 1e-9);
  const ticks: number[] = [];
  for (let e = lo; e <= hi; e++) ticks.push(Math.pow(10, e));
  return ticks.length >= 2 ? ticks : [min, max];
}

interface Axis {
  scale: (v: number) => number;
  ticks: number[];
}

function makeAxis(kind: Scale, domain: [number, number], range: [number, number]): Axis {
  let [d0, d1] = domain;
  if (kind === "log") {
    const l0 = Math.log10(d0);
    const l1 = Math.log10(d1);
    const span = l1 - l0 || 1;
    return {
      scale: (v) => range[0] + ((Math.log10(v) - l0) / span) * (range[1] - range[0]),
      ticks: decadeTicks(d0, d1),
    };
  }
  if (d0 === d1) {
    d0 -= 1;
    d1 += 1;
  }
  return {
    scale: (v) => range[0] + ((v - d0) / (d1 - d0)) * (range[1] - range[0]),
    ticks: niceLinearTicks(d0, d1, 6),
  };
}

function domainOf(values: number[], scale: Scale, pad: number): [number, number] {
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (scale === "log") {
    // A little headroom in log space keeps points off the frame.
    return [lo / Math.pow(10, pad), hi * Math.pow(10, pad)];
  }
  const span = hi - lo || Math.abs(hi) || 1;
  return [lo - span * pad, hi + span * pad];
}

export function renderChart(series: Series[], cfg: ChartConfig): string {
  const width = cfg.width ?? 760;
  const height = cfg.height ?? 480;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  // Log axes cannot place non-positive values; drop those points.
  const usable = series.map((s) => ({
    key: s.key,
    points: s.points.filter(
      (p) =>
        Number.isFinite(p.x) &&
        Number.isFinite(p.y) &&
        (cfg.xScale !== "log" || p.x > 0) &&
        (cfg.yScale !== "log" || p.y > 0)
    ),
  }));
  const all = usable.flatMap((s) => s.points);
  if (all.length === 0) {
    throw new Error("no plottable data points");
  }

  let xDomain = domainOf(all.map((p) => p.x), cfg.xScale, cfg.xScale === "log" ? 0.05 : 0.04);
  if (cfg.symmetricX && cfg.xScale === "linear") {
    const m = Math.max(Math.abs(xDomain[0]), Math.abs(xDomain[1]));
    xDomain = [-m, m];
  }
  const yValues = all.map((p) => p.y).concat(cfg.thresholds.filter((t) => cfg.yScale !== "log" || t > 0));
  const yDomain = domainOf(yValues, cfg.yScale, cfg.yScale === "log" ? 0.25 : 0.06);

  const xAxis = makeAxis(cfg.xScale, xDomain, [MARGIN.left, MARGIN.left + plotW]);
  const yAxis = makeAxis(cfg.yScale, yDomain, [MARGIN.top + plotH, MARGIN.top]);

  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`
  );
  out.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  out.push(
    `<text x="${width / 2}" y="22" text-anchor="middle" font-size="15">${esc(cfg.title)}</text>`
  );

  // gridlines + ticks
  const x0 = MARGIN.left;
  const x1 = MARGIN.left + plotW;
  const y0 = MARGIN.top + plotH;
  const y1 = MARGIN.top;
  const xLabelEvery = Math.max(1, Math.ceil(xAxis.ticks.length / 10));
  xAxis.ticks.forEach((t, i) => {
    const px = xAxis.scale(t);
    out.push(`<line x1="${px.toFixed(2)}" y1="${y0}" x2="${px.toFixed(2)}" y2="${y1}" stroke="#eee"/>`);
    if (i % xLabelEvery === 0) {
      out.push(
        `<text x="${px.toFixed(2)}" y="${y0 + 18}" text-anchor="middle" font-size="11">${fmt(t)}</text>`
      );
    }
  });
  const yLabelEvery = Math.max(1, Math.ceil(yAxis.ticks.length / 12));
  yAxis.ticks.forEach((t, i) => {
    const py = yAxis.scale(t);
    out.push(`<line x1="${x0}" y1="${py.toFixed(2)}" x2="${x1}" y2="${py.toFixed(2)}" stroke="#eee"/>`);
    if (i % yLabelEvery === 0) {
      out.push(
        `<text x="${x0 - 6}" y="${(py + 4).toFixed(2)}" text-anchor="end" font-size="11">${fmt(t)}</text>`
      );
    }
  });
  out.push(`<rect x="${x0}" y="${y1}" width="${plotW}" height="${plotH}" fill="none" stroke="#444"/>`);
  out.push(
    `<text x="${x0 + plotW / 2}" y="${height - 14}" text-anchor="middle" font-size="13">${esc(cfg.xLabel)}</text>`
  );
  out.push(
    `<text x="18" y="${y1 + plotH / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${y1 + plotH / 2})">${esc(cfg.yLabel)}</text>`
  );

  // threshold lines
  for (const t of cfg.thresholds) {
    if (cfg.yScale === "log" && t <= 0) continue;
    const py = yAxis.scale(t);
    out.push(
      `<line class="threshold" x1="${x0}" y1="${py.toFixed(2)}" x2="${x1}" y2="${py.toFixed(2)}" stroke="#555" stroke-dasharray="7,4" stroke-width="1.2"/>`
    );
    out.push(
      `<text x="${x1 - 4}" y="${(py - 5).toFixed(2)}" text-anchor="end" font-size="11" fill="#555">${fmt(t)}</text>`
    );
  }

  // series
  usable.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const coords = s.points.map((p) => [xAxis.scale(p.x), yAxis.scale(p.y)] as const);
    if (cfg.line && coords.length > 1) {
      const d = coords
        .map(([px, py], j) => `${j === 0 ? "M" : "L"}${px.toFixed(2)} ${py.toFixed(2)}`)
        .join(" ");
      out.push(
        `<path class="series" data-key="${esc(s.key)}" d="${d}" fill="none" stroke="${color}" stroke-width="1.6"/>`
      );
    } else {
      out.push(`<g class="series" data-key="${esc(s.key)}" fill="${color}">`);
      out.push("</g>");
    }
    for (const [px, py] of coords) {
      out.push(
        `<circle cx="${px.toFixed(2)}" cy="${py.toFixed(2)}" r="${cfg.line ? 2.1 : 3.2}" fill="${color}"/>`
      );
    }
  });

  // legend
  usable.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const ly = y1 + 16 + i * 17;
    out.push(`<line x1="${x1 - 130}" y1="${ly - 4}" x2="${x1 - 106}" y2="${ly - 4}" stroke="${color}" stroke-width="2.5"/>`);
    out.push(`<text x="${x1 - 100}" y="${ly}" font-size="12">${esc(s.key)}</text>`);
  });

  out.push("</svg>");
  return out.join("\n") + "\n";
}
