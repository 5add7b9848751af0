import { describe, expect, it } from "vitest";

import { CsvError, parseCsv } from "../src/csv.js";
import { extractSeries } from "../src/series.js";

const HEADER =
  "nsta,numapp,stra,saw_code,access,seed,duration_s,pso_pct,psm_pct," +
  "throughput_mbps,pawd_pct,window_count";

function csv(rows: string[]): string {
  return [HEADER, ...rows].join("\n");
}

describe("parseCsv", () => {
  it("rejects empty input", () => {
    expect(() => parseCsv("")).toThrow(CsvError);
  });

  it("rejects a header with no rows", () => {
    expect(() => parseCsv(HEADER)).toThrow(CsvError);
  });

  it("parses numbers and keeps empty cells as nulls", () => {
    const rows = parseCsv(
      csv(["4,4,2x2,127,none,1,100,0.000000,,300.5,,976"]),
    );
    expect(rows).toHaveLength(1);
    expect(rows[0].nsta).toBe(4);
    expect(rows[0].stra).toBe("2x2");
    expect(rows[0].psm_pct).toBeNull();
    expect(rows[0].throughput_mbps).toBeCloseTo(300.5);
  });

  it("rejects ragged rows", () => {
    expect(() => parseCsv(csv(["1,2,3"]))).toThrow(CsvError);
  });
});

describe("extractSeries", () => {
  const sweep = csv([
    "1,4,2x2,10,edca,1,100,0.3,100.0,310.0,40.0,976",
    "2,4,2x2,10,edca,1,100,0.4,100.0,305.0,38.0,976",
    "1,4,2x2,127,edca,1,100,0.5,0.0,312.0,95.0,976",
    "2,4,2x2,127,edca,1,100,0.6,1.0,308.0,94.0,976",
  ]);

  it("groups into one series per grouping value", () => {
    const series = extractSeries(parseCsv(sweep), {
      figure: "psm",
      x: "nsta",
      group: "saw",
    });
    expect(series.map((s) => s.label).sort()).toEqual(["SAW 10", "SAW 127"]);
    const saw10 = series.find((s) => s.label === "SAW 10")!;
    expect(saw10.points).toEqual([
      [1, 100.0],
      [2, 100.0],
    ]);
  });

  it("sorts numeric x values", () => {
    const shuffled = csv([
      "2,4,2x2,10,edca,1,100,0.4,100.0,305.0,38.0,976",
      "1,4,2x2,10,edca,1,100,0.3,100.0,310.0,40.0,976",
    ]);
    const [series] = extractSeries(parseCsv(shuffled), {
      figure: "pso",
      x: "nsta",
      group: "saw",
    });
    expect(series.points.map(([x]) => x)).toEqual([1, 2]);
  });

  it("averages duplicate grid points (multiple seeds)", () => {
    const seeds = csv([
      "1,4,2x2,127,edca,1,100,0.5,2.0,312.0,95.0,976",
      "1,4,2x2,127,edca,2,100,0.5,4.0,312.0,95.0,976",
    ]);
    const [series] = extractSeries(parseCsv(seeds), {
      figure: "psm",
      x: "nsta",
      group: "saw",
    });
    expect(series.points).toEqual([[1, 3.0]]);
  });

  it("skips null metric cells", () => {
    const withNulls = csv([
      "1,4,2x2,127,none,1,100,0.0,,320.0,,976",
      "2,4,2x2,127,edca,1,100,0.6,1.0,308.0,94.0,976",
    ]);
    const series = extractSeries(parseCsv(withNulls), {
      figure: "psm",
      x: "nsta",
      group: "saw",
    });
    expect(series[0].points).toEqual([[2, 1.0]]);
  });

  it("keeps categorical antenna order from the file", () => {
    const antennas = csv([
      "12,4,1x1,127,pifs,1,100,0.5,0.0,300.0,100.0,976",
      "12,4,2x2,127,pifs,1,100,1.1,0.0,295.0,100.0,976",
      "12,4,8x2,127,pifs,1,100,4.0,100.0,280.0,100.0,976",
    ]);
    const [series] = extractSeries(parseCsv(antennas), {
      figure: "pso",
      x: "stra",
      group: "nsta",
    });
    expect(series.points.map(([x]) => x)).toEqual(["1x1", "2x2", "8x2"]);
  });

  it("rejects x equal to group", () => {
    expect(() =>
      extractSeries(parseCsv(sweep), { figure: "pso", x: "nsta", group: "nsta" }),
    ).toThrow(CsvError);
  });

  it("single-row input yields a single-point series", () => {
    const one = csv(["1,4,2x2,127,pifs,1,100,0.5,0.0,312.0,100.0,976"]);
    const series = extractSeries(parseCsv(one), {
      figure: "thrpt",
      x: "nsta",
      group: "saw",
    });
    expect(series).toHaveLength(1);
    expect(series[0].points).toEqual([[1, 312.0]]);
  });
});
