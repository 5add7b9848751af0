export { CsvError, parseCsv, requireColumns } from "./csv.js";
export type { CsvRow, CsvValue } from "./csv.js";
export {
  extractSeries,
  FIGURES,
  GROUPS,
  X_AXES,
} from "./series.js";
export type { FigureKind, FigureSpec, GroupBy, Series, XAxis } from "./series.js";
export { renderSvg, seriesFromSvg } from "./svg.js";
export { main } from "./cli.js";
