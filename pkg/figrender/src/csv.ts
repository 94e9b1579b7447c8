/**
 * Minimal CSV reader for the experiment files: comma separated, one header
 * row, `#` comment lines anywhere, all binding by column name so producers
 * may append columns freely.
 */

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export class MissingColumnError extends Error {
  constructor(public readonly column: string) {
    super(`missing column: ${column}`);
  }
}

export function parseCsv(text: string): Table {
  const lines = text
    .split(/\r?\n/)
    .map((line) => line.trim())
    .filter((line) => line.length > 0 && !line.startsWith("#"));
  if (lines.length === 0) {
    return { columns: [], rows: [] };
  }
  const columns = lines[0].split(",").map((c) => c.trim());
  const rows = lines.slice(1).map((line) => {
    const cells = line.split(",");
    const row: Record<string, string> = {};
    columns.forEach((col, i) => {
      row[col] = (cells[i] ?? "").trim();
    });
    return row;
  });
  return { columns, rows };
}

/** Throws on the first required column the table lacks. */
export function requireColumns(table: Table, required: string[]): void {
  for (const col of required) {
    if (!table.columns.includes(col)) {
      throw new MissingColumnError(col);
    }
  }
}

export function num(row: Record<string, string>, column: string): number {
  return Number.parseFloat(row[column]);
}
