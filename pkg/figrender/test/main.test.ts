import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { parseArgs, renderSpec, run } from "../src/main.js";

const FIXTURES = path.join(__dirname, "fixtures");
const FIXTURE_BY_KIND: Record<string, string> = {
  "delta-sweep": "sweep_delta.csv",
  separation: "sweep_separation.csv",
  measurements: "measurements.csv",
  "time-error": "time_error.csv",
};

let tmp: string;
beforeAll(() => {
  tmp = fs.mkdtempSync(path.join(os.tmpdir(), "figrender-"));
});
afterAll(() => {
  fs.rmSync(tmp, { recursive: true, force: true });
});

describe("parseArgs", () => {
  it("parses the full flag set", () => {
    const spec = parseArgs([
      "measurements",
      "--in",
      "m.csv",
      "--out",
      "m.svg",
      "--threshold",
      "1e-4",
      "--threshold",
      "1e-5",
      "--yscale",
      "log",
    ]);
    expect(spec.kind).toBe("measurements");
    expect(spec.thresholds).toEqual([1e-4, 1e-5]);
    expect(spec.yScale).toBe("log");
  });

  it("rejects unknown kinds and missing flags", () => {
    expect(() => parseArgs(["pie-chart"])).toThrow(/unknown figure kind/);
    expect(() => parseArgs(["delta-sweep", "--in", "x.csv"])).toThrow(/--out/);
    expect(() => parseArgs(["delta-sweep", "--in", "x.csv", "--out", "y.svg", "--wat"])).toThrow(
      /unknown option/
    );
  });
});

describe("rendering the real sweep outputs", () => {
  for (const [kind, fixture] of Object.entries(FIXTURE_BY_KIND)) {
    it(`renders ${kind}`, () => {
      const out = path.join(tmp, `${kind}.svg`);
      const rc = run([kind, "--in", path.join(FIXTURES, fixture), "--out", out, "--threshold", "1e-4"]);
      expect(rc).toBe(0);
      const svg = fs.readFileSync(out, "utf-8");
      expect(svg).toContain("<svg");
      expect(svg).toContain('class="threshold"');
      expect((svg.match(/class="series"/g) ?? []).length).toBeGreaterThanOrEqual(3);
    });
  }

  it("delta sweep gets one series per level and a symmetric axis", () => {
    const csv = fs.readFileSync(path.join(FIXTURES, "sweep_delta.csv"), "utf-8");
    const svg = renderSpec(
      { kind: "delta-sweep", input: "", output: "", thresholds: [] },
      csv
    );
    expect(svg.match(/class="series"/g)).toHaveLength(3);
    expect(svg).toContain('data-key="level 2"');
    expect(svg).toContain(">-0.5<");
    expect(svg).toContain(">0.5<");
  });

  it("measurements picks the threshold column up automatically", () => {
    const csv = fs.readFileSync(path.join(FIXTURES, "measurements.csv"), "utf-8");
    const svg = renderSpec(
      { kind: "measurements", input: "", output: "", thresholds: [] },
      csv
    );
    expect(svg.match(/class="threshold"/g)).toHaveLength(1);
  });

  it("time-error groups by strategy", () => {
    const csv = fs.readFileSync(path.join(FIXTURES, "time_error.csv"), "utf-8");
    const svg = renderSpec(
      { kind: "time-error", input: "", output: "", thresholds: [] },
      csv
    );
    expect(svg).toContain('data-key="characterized"');
    expect(svg).toContain('data-key="uncorrected"');
    expect(svg.match(/class="series"/g)).toHaveLength(4);
  });
});

describe("failure modes", () => {
  it("names the missing column and writes nothing", () => {
    const broken = path.join(tmp, "broken.csv");
    fs.writeFileSync(broken, "# params: x\ndelta,level\n0.1,0\n");
    const out = path.join(tmp, "broken.svg");
    const errors: string[] = [];
    const original = console.error;
    console.error = (msg: string) => void errors.push(String(msg));
    try {
      const rc = run(["delta-sweep", "--in", broken, "--out", out]);
      expect(rc).not.toBe(0);
    } finally {
      console.error = original;
    }
    expect(errors.join("\n")).toContain("missing column: error");
    expect(fs.existsSync(out)).toBe(false);
  });

  it("rejects empty CSVs without writing a file", () => {
    const empty = path.join(tmp, "empty.csv");
    fs.writeFileSync(empty, "# params: x\ndelta,level,error\n");
    const out = path.join(tmp, "empty.svg");
    const original = console.error;
    console.error = () => undefined;
    try {
      expect(run(["delta-sweep", "--in", empty, "--out", out])).not.toBe(0);
    } finally {
      console.error = original;
    }
    expect(fs.existsSync(out)).toBe(false);
  });

  it("reports unreadable inputs", () => {
    const original = console.error;
    console.error = () => undefined;
    try {
      expect(run(["delta-sweep", "--in", path.join(tmp, "nope.csv"), "--out", path.join(tmp, "n.svg")])).toBe(1);
    } finally {
      console.error = original;
    }
  });

  it("usage problems exit 2", () => {
    const original = console.error;
    console.error = () => undefined;
    try {
      expect(run([])).toBe(2);
      expect(run(["nonsense", "--in", "a", "--out", "b"])).toBe(2);
    } finally {
      console.error = original;
    }
  });

  it("re-rendering overwrites deterministically", () => {
    const out = path.join(tmp, "again.svg");
    const argv = ["separation", "--in", path.join(FIXTURES, "sweep_separation.csv"), "--out", out];
    expect(run(argv)).toBe(0);
    const first = fs.readFileSync(out, "utf-8");
    expect(run(argv)).toBe(0);
    expect(fs.readFileSync(out, "utf-8")).toBe(first);
  });
});
