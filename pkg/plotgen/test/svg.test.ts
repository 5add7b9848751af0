import { describe, expect, it } from "vitest";

import { FigureSpec, Series } from "../src/series.js";
import { renderSvg, seriesFromSvg } from "../src/svg.js";

const SPEC: FigureSpec = { figure: "psm", x: "nsta", group: "saw" };

const SERIES: Series[] = [
  { label: "SAW 10", points: [[1, 100], [8, 100], [16, 100]] },
  { label: "SAW 127", points: [[1, 0], [8, 5], [16, 12]] },
];

describe("renderSvg", () => {
  it("emits one polyline per series plus axis labels", () => {
    const svg = renderSvg(SERIES, SPEC);
    expect(svg).toContain("<svg");
    expect((svg.match(/<polyline class="series"/g) ?? []).length).toBe(2);
    expect(svg).toContain("Number of STAs");
    expect(svg).toContain("Missed sensing (%)");
    expect(svg).toContain("SAW 127");
  });

  it("is a pure function of its input", () => {
    expect(renderSvg(SERIES, SPEC)).toBe(renderSvg(SERIES, SPEC));
  });

  it("round-trips the plotted data through coordinates", () => {
    const svg = renderSvg(SERIES, SPEC);
    const plotted = seriesFromSvg(svg);
    expect(plotted.map((s) => s.label)).toEqual(["SAW 10", "SAW 127"]);
    // A constant series renders as a horizontal line.
    const flat = plotted[0].points;
    expect(new Set(flat.map(([, y]) => y)).size).toBe(1);
    // Higher metric values sit higher on the canvas (smaller y).
    const rising = plotted[1].points;
    expect(rising[0][1]).toBeGreaterThan(rising[2][1]);
  });

  it("handles categorical x values", () => {
    const svg = renderSvg(
      [{ label: "nSTA 12", points: [["1x1", 1], ["8x2", 4]] }],
      { figure: "pso", x: "stra", group: "nsta" },
    );
    expect(svg).toContain(">1x1<");
    expect(svg).toContain(">8x2<");
  });
});
