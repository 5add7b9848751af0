/** Turn sweep rows into the line series a figure plots. */

import { CsvError, CsvRow, requireColumns } from "./csv.js";

export const FIGURES = {
  pso: { column: "pso_pct", label: "Sensing overhead (%)" },
  psm: { column: "psm_pct", label: "Missed sensing (%)" },
  thrpt: { column: "throughput_mbps", label: "Throughput (Mb/s)" },
  pawd: { column: "pawd_pct", label: "Available window duration (%)" },
} as const;

export const X_AXES = {
  nsta: { column: "nsta", label: "Number of STAs" },
  numapp: { column: "numapp", label: "Number of applications" },
  stra: { column: "stra", label: "Antenna configuration" },
} as const;

export const GROUPS = {
  saw: { column: "saw_code", label: "SAW" },
  nsta: { column: "nsta", label: "nSTA" },
} as const;

export type FigureKind = keyof typeof FIGURES;
export type XAxis = keyof typeof X_AXES;
export type GroupBy = keyof typeof GROUPS;

export interface FigureSpec {
  figure: FigureKind;
  x: XAxis;
  group: GroupBy;
}

export interface Series {
  label: string;
  points: Array<[number | string, number]>;
}

/** Categorical x values (antenna configs) keep CSV order; numbers sort. */
function xOrder(values: Array<number | string>): Array<number | string> {
  const unique: Array<number | string> = [];
  for (const v of values) {
    if (!unique.includes(v)) unique.push(v);
  }
  if (unique.every((v) => typeof v === "number")) {
    return (unique as number[]).sort((a, b) => a - b);
  }
  return unique;
}

export function extractSeries(rows: CsvRow[], spec: FigureSpec): Series[] {
  if (rows.length === 0) {
    throw new CsvError("no data rows");
  }
  const yCol = FIGURES[spec.figure].column;
  const xCol = X_AXES[spec.x].column;
  const gCol = GROUPS[spec.group].column;
  requireColumns(rows, [yCol, xCol, gCol]);
  if (xCol === gCol) {
    throw new CsvError("x axis and grouping field must differ");
  }

  const groups = new Map<string, CsvRow[]>();
  for (const row of rows) {
    const key = String(row[gCol]);
    const bucket = groups.get(key);
    if (bucket) {
      bucket.push(row);
    } else {
      groups.set(key, [row]);
    }
  }

  const series: Series[] = [];
  for (const [key, bucket] of groups) {
    const xs = xOrder(bucket.map((r) => r[xCol] as number | string));
    const points: Array<[number | string, number]> = [];
    for (const x of xs) {
      const hits = bucket.filter((r) => r[xCol] === x && r[yCol] !== null);
      if (hits.length === 0) continue;
      const mean =
        hits.reduce((acc, r) => acc + (r[yCol] as number), 0) / hits.length;
      points.push([x, mean]);
    }
    if (points.length > 0) {
      series.push({ label: `${GROUPS[spec.group].label} ${key}`, points });
    }
  }
  if (series.length === 0) {
    throw new CsvError(`figure ${spec.figure} has no plottable values`);
  }
  return series;
}
