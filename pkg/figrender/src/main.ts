/**
 * figrender <kind> --in <csv> --out <img> [--threshold 1e-4 ...]
 *
 * Reads one experiment CSV and writes one SVG figure.  Column binding is by
 * name so the producer may append columns; a missing required column is a
 * hard error naming the column, and nothing is written in that case.
 */

import * as fs from "node:fs";
import * as path from "node:path";

import { MissingColumnError, num, parseCsv, requireColumns } from "./csv.js";
import { renderChart, type Series } from "./figure.js";
import { KIND_NAMES, KINDS, type Scale } from "./kinds.js";

export interface FigureSpec {
  kind: string;
  input: string;
  output: string;
  thresholds: number[];
  xScale?: Scale;
  yScale?: Scale;
}

const USAGE = `usage: figrender <kind> --in <csv> --out <svg> [options]
  kinds: ${KIND_NAMES.join(", ")}
  options:
    --threshold <value>     horizontal reference line (repeatable)
    --xscale linear|log     override the default x scale
    --yscale linear|log     override the default y scale`;

export function parseArgs(argv: string[]): FigureSpec {
  if (argv.length === 0) {
    throw new UsageError("no figure kind given");
  }
  const kind = argv[0];
  if (!(kind in KINDS)) {
    throw new UsageError(`unknown figure kind '${kind}' (expected one of ${KIND_NAMES.join(", ")})`);
  }
  const spec: FigureSpec = { kind, input: "", output: "", thresholds: [] };
  for (let i = 1; i < argv.length; i++) {
    const flag = argv[i];
    const value = argv[i + 1];
    const need = () => {
      if (value === undefined) throw new UsageError(`${flag} needs a value`);
      i++;
      return value;
    };
    switch (flag) {
      case "--in":
        spec.input = need();
        break;
      case "--out":
        spec.output = need();
        break;
      case "--threshold": {
        const t = Number.parseFloat(need());
        if (!Number.isFinite(t)) throw new UsageError("--threshold needs a number");
        spec.thresholds.push(t);
        break;
      }
      case "--xscale":
      case "--yscale": {
        const s = need();
        if (s !== "linear" && s !== "log") throw new UsageError(`${flag} must be linear or log`);
        if (flag === "--xscale") spec.xScale = s;
        else spec.yScale = s;
        break;
      }
      default:
        throw new UsageError(`unknown option ${flag}`);
    }
  }
  if (!spec.input) throw new UsageError("--in is required");
  if (!spec.output) throw new UsageError("--out is required");
  return spec;
}

export class UsageError extends Error {}

/** Validate, bind, and render; returns the SVG text without writing it. */
export function renderSpec(spec: FigureSpec, csvText: string): string {
  const kind = KINDS[spec.kind];
  const table = parseCsv(csvText);
  if (table.rows.length === 0) {
    throw new Error("CSV has no data rows");
  }
  requireColumns(table, kind.required);

  const grouped = new Map<string, Series>();
  for (const row of table.rows) {
    const key = kind.seriesKey(row);
    let series = grouped.get(key);
    if (!series) {
      series = { key, points: [] };
      grouped.set(key, series);
    }
    series.points.push({ x: num(row, kind.x), y: num(row, kind.y) });
  }
  const series = [...grouped.values()].sort((a, b) => (a.key < b.key ? -1 : 1));

  const thresholds = [...spec.thresholds];
  if (kind.thresholdColumn && table.columns.includes(kind.thresholdColumn)) {
    for (const row of table.rows) {
      const t = num(row, kind.thresholdColumn);
      if (Number.isFinite(t) && !thresholds.includes(t)) thresholds.push(t);
    }
  }

  return renderChart(series, {
    title: kind.title,
    xLabel: kind.xLabel,
    yLabel: kind.yLabel,
    xScale: spec.xScale ?? kind.xScale,
    yScale: spec.yScale ?? kind.yScale,
    thresholds,
    line: kind.line,
    symmetricX: kind.symmetricX,
  });
}

export function run(argv: string[]): number {
  let spec: FigureSpec;
  try {
    spec = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      console.error(`figrender: ${err.message}\n${USAGE}`);
      return 2;
    }
    throw err;
  }
  let csvText: string;
  try {
    csvText = fs.readFileSync(spec.input, "utf-8");
  } catch (err) {
    console.error(`figrender: cannot read ${spec.input}: ${(err as Error).message}`);
    return 1;
  }
  let svg: string;
  try {
    svg = renderSpec(spec, csvText);
  } catch (err) {
    if (err instanceof MissingColumnError) {
      console.error(`figrender: ${spec.input}: missing column: ${err.column}`);
    } else {
      console.error(`figrender: ${spec.input}: ${(err as Error).message}`);
    }
    return 1;
  }
  fs.mkdirSync(path.dirname(path.resolve(spec.output)), { recursive: true });
  fs.writeFileSync(spec.output, svg);
  return 0;
}
