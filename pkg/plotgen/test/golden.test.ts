/**
 * Golden-series acceptance for the standard sweep figure shapes:
 * four curves, the 1 ms-window missed-sensing curve pinned at 100, and
 * contention-access missed-sensing growing with station count.  Compared
 * against frozen series data, not pixels.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { parseCsv } from "../src/csv.js";
import { extractSeries, Series } from "../src/series.js";
import { renderSvg, seriesFromSvg } from "../src/svg.js";

const HERE = dirname(fileURLToPath(import.meta.url));
const FIXTURE = join(HERE, "fixtures", "config1_edca.csv");
const GOLDEN = join(HERE, "fixtures", "config1_edca_golden.json");

function load(): { rows: ReturnType<typeof parseCsv>; golden: Record<string, Series[]> } {
  const rows = parseCsv(readFileSync(FIXTURE, "utf8"));
  const golden = JSON.parse(readFileSync(GOLDEN, "utf8"));
  return { rows, golden };
}

describe("standard sweep figure shapes", () => {
  it("missed-sensing figure matches the golden series", () => {
    const { rows, golden } = load();
    const series = extractSeries(rows, { figure: "psm", x: "nsta", group: "saw" });
    expect(series).toEqual(golden.psm);
  });

  it("overhead and throughput figures match the golden series", () => {
    const { rows, golden } = load();
    for (const figure of ["pso", "thrpt"] as const) {
      const series = extractSeries(rows, { figure, x: "nsta", group: "saw" });
      expect(series).toEqual(golden[figure]);
    }
  });

  it("draws one curve per window-duration code", () => {
    const { rows } = load();
    const series = extractSeries(rows, { figure: "psm", x: "nsta", group: "saw" });
    expect(series).toHaveLength(4);
    expect(series.map((s) => s.label).sort()).toEqual(
      ["SAW 10", "SAW 127", "SAW 50", "SAW 90"],
    );
  });

  it("pins the 1 ms window curve at 100 percent missed", () => {
    const { rows } = load();
    const series = extractSeries(rows, { figure: "psm", x: "nsta", group: "saw" });
    const saw10 = series.find((s) => s.label === "SAW 10")!;
    expect(saw10.points).toHaveLength(16);
    for (const [, y] of saw10.points) {
      expect(y).toBe(100.0);
    }
  });

  it("shows missed sensing growing with station count", () => {
    const { rows } = load();
    const series = extractSeries(rows, { figure: "psm", x: "nsta", group: "saw" });
    for (const s of series) {
      const ys = s.points.map(([, y]) => y);
      for (let i = 0; i + 1 < ys.length; i++) {
        expect(ys[i]).toBeLessThanOrEqual(ys[i + 1] + 1e-9);
      }
    }
  });

  it("renders the figure with the same data that was extracted", () => {
    const { rows } = load();
    const series = extractSeries(rows, { figure: "psm", x: "nsta", group: "saw" });
    const plotted = seriesFromSvg(renderSvg(series, { figure: "psm", x: "nsta", group: "saw" }));
    expect(plotted.map((s) => s.label)).toEqual(series.map((s) => s.label));
    expect(plotted[0].points).toHaveLength(series[0].points.length);
  });
});
