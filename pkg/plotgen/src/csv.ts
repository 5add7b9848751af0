/** Minimal reader for the simulator's sweep CSVs (no quoting, fixed header). */

export type CsvValue = number | string | null;
export type CsvRow = Record<string, CsvValue>;

export class CsvError extends Error {}

function parseCell(text: string): CsvValue {
  if (text === "") return null;
  const num = Number(text);
  return Number.isNaN(num) ? text : num;
}

export function parseCsv(text: string): CsvRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length === 0) {
    throw new CsvError("empty CSV");
  }
  const header = lines[0].split(",").map((h) => h.trim());
  if (lines.length === 1) {
    throw new CsvError("CSV has a header but no rows");
  }
  const rows: CsvRow[] = [];
  for (const line of lines.slice(1)) {
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new CsvError(`row has ${cells.length} cells, expected ${header.length}`);
    }
    const row: CsvRow = {};
    header.forEach((name, i) => {
      row[name] = parseCell(cells[i]);
    });
    rows.push(row);
  }
  return rows;
}

export function requireColumns(rows: CsvRow[], columns: string[]): void {
  const present = new Set(Object.keys(rows[0] ?? {}));
  const missing = columns.filter((c) => !present.has(c));
  if (missing.length > 0) {
    throw new CsvError(`missing columns: ${missing.join(", ")}`);
  }
}
