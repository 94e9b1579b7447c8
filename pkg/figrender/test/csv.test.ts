import { describe, expect, it } from "vitest";

import { MissingColumnError, num, parseCsv, requireColumns } from "../src/csv.js";

describe("parseCsv", () => {
  it("skips comment lines and binds by header", () => {
    const table = parseCsv("# params: a=1\ndelta,level,error\n0.1,0,0.003\n0.2,1,0.0001\n");
    expect(table.columns).toEqual(["delta", "level", "error"]);
    expect(table.rows).toHaveLength(2);
    expect(table.rows[0]["delta"]).toBe("0.1");
    expect(num(table.rows[1], "error")).toBeCloseTo(1e-4);
  });

  it("handles empty input", () => {
    expect(parseCsv("").rows).toHaveLength(0);
    expect(parseCsv("# only a comment\n").columns).toHaveLength(0);
  });

  it("tolerates trailing newlines and CRLF", () => {
    const table = parseCsv("a,b\r\n1,2\r\n\r\n");
    expect(table.rows).toEqual([{ a: "1", b: "2" }]);
  });
});

describe("requireColumns", () => {
  it("accepts supersets", () => {
    const table = parseCsv("a,b,extra\n1,2,3\n");
    expect(() => requireColumns(table, ["a", "b"])).not.toThrow();
  });

  it("names the first missing column", () => {
    const table = parseCsv("a,b\n1,2\n");
    try {
      requireColumns(table, ["a", "error", "level"]);
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(MissingColumnError);
      expect((err as MissingColumnError).column).toBe("error");
      expect((err as Error).message).toContain("missing column: error");
    }
  });
});
