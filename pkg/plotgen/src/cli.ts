#!/usr/bin/env node
/** plotgen --csv FILE --figure pso|psm|thrpt|pawd --x nsta|numapp|stra
 *          --group saw|nsta --out FILE.svg
 */

import { readFileSync, writeFileSync } from "node:fs";
import { parseArgs } from "node:util";

import { CsvError, parseCsv } from "./csv.js";
import { extractSeries, FIGURES, FigureSpec, GROUPS, X_AXES } from "./series.js";
import { renderSvg } from "./svg.js";

function usage(): string {
  return (
    "usage: plotgen --csv FILE --figure {pso|psm|thrpt|pawd} " +
    "--x {nsta|numapp|stra} --group {saw|nsta} --out FILE.svg"
  );
}

export function main(argv: string[]): number {
  let values;
  try {
    ({ values } = parseArgs({
      args: argv,
      options: {
        csv: { type: "string" },
        figure: { type: "string" },
        x: { type: "string", default: "nsta" },
        group: { type: "string", default: "saw" },
        out: { type: "string" },
      },
    }));
  } catch (err) {
    console.error(String(err));
    console.error(usage());
    return 2;
  }

  const { csv, figure, x, group, out } = values;
  if (!csv || !figure || !out) {
    console.error(usage());
    return 2;
  }
  if (!(figure in FIGURES) || !(x in X_AXES) || !(group in GROUPS)) {
    console.error(`unknown figure/axis/group: ${figure}/${x}/${group}`);
    console.error(usage());
    return 2;
  }
  const spec: FigureSpec = {
    figure: figure as FigureSpec["figure"],
    x: x as FigureSpec["x"],
    group: group as FigureSpec["group"],
  };

  let text: string;
  try {
    text = readFileSync(csv, "utf8");
  } catch (err) {
    console.error(`cannot read ${csv}: ${String(err)}`);
    return 1;
  }
  try {
    const rows = parseCsv(text);
    const series = extractSeries(rows, spec);
    writeFileSync(out, renderSvg(series, spec));
    console.log(`wrote ${out} (${series.length} series)`);
    return 0;
  } catch (err) {
    if (err instanceof CsvError) {
      console.error(`bad input: ${err.message}`);
      return 2;
    }
    throw err;
  }
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
