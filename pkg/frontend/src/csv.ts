import { readFileSync } from "node:fs";

/** Exact header contract of the sweep CSV files. */
export const SWEEP_HEADER =
  "param,cos_phi,phi_ac_principal,phi_ac_continued,axis_x,axis_y,axis_z";

export interface SweepRow {
  param: number;
  cosPhi: number;
  phiPrincipal: number;
  phiContinued: number;
}

export class CsvFormatError extends Error {
  constructor(public readonly file: string, detail: string) {
    super(`${file}: ${detail}`);
    this.name = "CsvFormatError";
  }
}

/** Read one sweep CSV, enforcing the header and numeric row shape. */
export function readSweepCsv(path: string): SweepRow[] {
  const text = readFileSync(path, "ascii");
  const lines = text.split("\n").filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvFormatError(path, "empty file");
  }
  if (lines[0] !== SWEEP_HEADER) {
    throw new CsvFormatError(path, `unexpected header "${lines[0]}"`);
  }
  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i].split(",");
    if (fields.length !== 7) {
      throw new CsvFormatError(path, `row ${i} has ${fields.length} fields, expected 7`);
    }
    const values = fields.map((field) => Number(field));
    for (let j = 0; j < fields.length; j++) {
      // "nan" is legal only in the continued column (principal-only sweeps)
      if (Number.isNaN(values[j]) && !(j === 3 && fields[j] === "nan")) {
        throw new CsvFormatError(path, `row ${i}, field ${j + 1} is not numeric`);
      }
    }
    rows.push({
      param: values[0],
      cosPhi: values[1],
      phiPrincipal: values[2],
      phiContinued: values[3],
    });
  }
  if (rows.length === 0) {
    throw new CsvFormatError(path, "no data rows");
  }
  return rows;
}
