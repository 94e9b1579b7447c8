/**
 * One entry per figure kind, binding the CSV schema of the producing
 * subcommand to axes, scales, and the series grouping.
 */

export type Scale = "linear" | "log";

export interface KindSpec {
  /** Columns the producing subcommand guarantees; extras are ignored. */
  required: string[];
  x: string;
  y: string;
  xScale: Scale;
  yScale: Scale;
  xLabel: string;
  yLabel: string;
  title: string;
  /** Mirror the x domain around zero (error-vs-delta sweeps). */
  symmetricX?: boolean;
  /** Column whose distinct values become threshold lines automatically. */
  thresholdColumn?: string;
  /** Join points with a line (sweeps) or leave markers only (scatter). */
  line: boolean;
  seriesKey(row: Record<string, string>): string;
}

const byLevel = (row: Record<string, string>) => `level ${row["level"]}`;

export const KINDS: Record<string, KindSpec> = {
  "delta-sweep": {
    required: ["delta", "level", "error"],
    x: "delta",
    y: "error",
    xScale: "linear",
    yScale: "log",
    xLabel: "fractional coupling error",
    yLabel: "CNOT error (1 - F)",
    title: "CNOT error vs fractional coupling error",
    symmetricX: true,
    line: true,
    seriesKey: byLevel,
  },
  separation: {
    required: ["separation_nm", "J_ueV", "delta0", "level", "error"],
    x: "separation_nm",
    y: "error",
    xScale: "linear",
    yScale: "log",
    xLabel: "donor separation (nm)",
    yLabel: "CNOT error (1 - F)",
    title: "CNOT error vs donor separation",
    line: false,
    seriesKey: byLevel,
  },
  measurements: {
    required: ["N", "delta_frac", "delta_c", "level", "error"],
    x: "N",
    y: "error",
    xScale: "log",
    yScale: "log",
    xLabel: "characterization measurements",
    yLabel: "CNOT error (1 - F)",
    title: "CNOT error vs characterization measurements",
    thresholdColumn: "threshold",
    line: true,
    seriesKey: byLevel,
  },
  "time-error": {
    required: ["t_total_ns", "level", "separation_nm", "error"],
    x: "t_total_ns",
    y: "error",
    xScale: "log",
    yScale: "log",
    xLabel: "total gate time (ns)",
    yLabel: "CNOT error (1 - F)",
    title: "CNOT error vs total gate time",
    line: false,
    seriesKey: (row) => row["strategy"] ?? `level ${row["level"]}`,
  },
};

export const KIND_NAMES = Object.keys(KINDS);
