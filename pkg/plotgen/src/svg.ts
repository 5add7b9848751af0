/** Self-contained SVG line charts; no DOM, no canvas. */

import { FigureSpec, FIGURES, Series, X_AXES } from "./series.js";

const WIDTH = 640;
const HEIGHT = 420;
const MARGIN = { top: 24, right: 150, bottom: 48, left: 64 };

const COLORS = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
];

interface Scale {
  (value: number): number;
}

function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function niceTicks(lo: number, hi: number, count = 6): number[] {
  const span = hi - lo || 1;
  const step = 10 ** Math.floor(Math.log10(span / count));
  const scaled = span / count / step;
  const unit = scaled >= 5 ? 10 : scaled >= 2 ? 5 : scaled >= 1 ? 2 : 1;
  const tick = unit * step;
  const start = Math.ceil(lo / tick) * tick;
  const ticks: number[] = [];
  for (let v = start; v <= hi + 1e-9; v += tick) {
    ticks.push(Number(v.toFixed(10)));
  }
  return ticks;
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderSvg(seriesList: Series[], spec: FigureSpec): string {
  // Categorical x positions follow the first series' order.
  const xValues: Array<number | string> = [];
  for (const s of seriesList) {
    for (const [x] of s.points) {
      if (!xValues.includes(x)) xValues.push(x);
    }
  }
  const numericX = xValues.every((v) => typeof v === "number");
  if (numericX) {
    (xValues as number[]).sort((a, b) => a - b);
  }

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const xPos = (x: number | string): number => {
    if (numericX) {
      const lo = xValues[0] as number;
      const hi = xValues[xValues.length - 1] as number;
      return linearScale(lo, hi, MARGIN.left, MARGIN.left + plotW)(x as number);
    }
    const idx = xValues.indexOf(x);
    const step = plotW / Math.max(1, xValues.length - 1);
    return MARGIN.left + idx * step;
  };

  const ys = seriesList.flatMap((s) => s.points.map(([, y]) => y));
  let yLo = Math.min(...ys, 0);
  let yHi = Math.max(...ys);
  if (yHi === yLo) yHi = yLo + 1;
  const yTicks = niceTicks(yLo, yHi);
  yHi = Math.max(yHi, yTicks[yTicks.length - 1] ?? yHi);
  const yPos = linearScale(yLo, yHi, MARGIN.top + plotH, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  // Axes.
  const x0 = MARGIN.left;
  const y0 = MARGIN.top + plotH;
  parts.push(
    `<line x1="${x0}" y1="${y0}" x2="${x0 + plotW}" y2="${y0}" stroke="black"/>`,
    `<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${y0}" stroke="black"/>`,
  );
  for (const t of yTicks) {
    const y = yPos(t);
    parts.push(
      `<line x1="${x0 - 4}" y1="${y}" x2="${x0}" y2="${y}" stroke="black"/>`,
      `<text x="${x0 - 8}" y="${y + 4}" text-anchor="end">${t}</text>`,
      `<line x1="${x0}" y1="${y}" x2="${x0 + plotW}" y2="${y}" stroke="#ddd"/>`,
    );
  }
  for (const xv of xValues) {
    const x = xPos(xv);
    parts.push(
      `<line x1="${x}" y1="${y0}" x2="${x}" y2="${y0 + 4}" stroke="black"/>`,
      `<text x="${x}" y="${y0 + 18}" text-anchor="middle">${esc(String(xv))}</text>`,
    );
  }
  parts.push(
    `<text x="${x0 + plotW / 2}" y="${HEIGHT - 10}" text-anchor="middle">` +
      `${esc(X_AXES[spec.x].label)}</text>`,
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
      `${esc(FIGURES[spec.figure].label)}</text>`,
  );

  // Lines, markers, legend.
  seriesList.forEach((s, i) => {
    const color = COLORS[i % COLORS.length];
    const pts = s.points.map(([x, y]) => `${xPos(x)},${yPos(y)}`).join(" ");
    parts.push(
      `<polyline class="series" data-label="${esc(s.label)}" points="${pts}" ` +
        `fill="none" stroke="${color}" stroke-width="1.5"/>`,
    );
    for (const [x, y] of s.points) {
      parts.push(
        `<circle cx="${xPos(x)}" cy="${yPos(y)}" r="2.5" fill="${color}"/>`,
      );
    }
    const ly = MARGIN.top + 14 + i * 18;
    const lx = MARGIN.left + plotW + 12;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 18}" y2="${ly - 4}" ` +
        `stroke="${color}" stroke-width="1.5"/>`,
      `<text x="${lx + 24}" y="${ly}">${esc(s.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n");
}

/** Pull the plotted series back out of a rendered figure. */
export function seriesFromSvg(svg: string): Array<{ label: string; points: number[][] }> {
  const out: Array<{ label: string; points: number[][] }> = [];
  const re = /<polyline class="series" data-label="([^"]*)" points="([^"]*)"/g;
  for (const match of svg.matchAll(re)) {
    const points = match[2]
      .split(" ")
      .filter((p) => p.length > 0)
      .map((pair) => pair.split(",").map(Number));
    out.push({ label: match[1], points });
  }
  return out;
}
