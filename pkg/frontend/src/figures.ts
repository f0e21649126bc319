import { existsSync } from "node:fs";
import { join } from "node:path";

import { readSweepCsv } from "./csv.js";

export type FigureId = "fig2" | "fig3";
export type YUnit = "radians" | "multiples_of_pi";
export type PhaseBranch = "continued" | "principal";

export interface FigureSpec {
  figureId: FigureId;
  inputDir: string;
  outputPath: string;
  yUnit: YUnit;
  branch: PhaseBranch;
}

export interface Series {
  /** caption letter, "(a)" .. "(i)" */
  label: string;
  /** human-readable fixed-parameter description for the legend */
  legend: string;
  param: number[];
  phi: number[];
}

export interface FigureData {
  figureId: FigureId;
  xLabel: string;
  yLabel: string;
  /** y-axis upper bound: 2*pi in radians mode, 2 in multiples-of-pi mode */
  yMax: number;
  series: Series[];
}

interface SeriesFile {
  name: string;
  legend: string;
}

// Series files in caption order; tags mirror the generator CLI's naming.
const FIG2_FILES: SeriesFile[] = [
  { name: "fig2_theta_0.csv", legend: "θ = 0" },
  { name: "fig2_theta_1pi20.csv", legend: "θ = π/20" },
  { name: "fig2_theta_2pi20.csv", legend: "θ = π/10" },
  { name: "fig2_theta_3pi20.csv", legend: "θ = 3π/20" },
  { name: "fig2_theta_4pi20.csv", legend: "θ = π/5" },
];
const FIG3_FILES: SeriesFile[] = [
  { name: "fig3_lambda_0p1.csv", legend: "λ = 0.1 λ₀" },
  { name: "fig3_lambda_0p2.csv", legend: "λ = 0.2 λ₀" },
  { name: "fig3_lambda_0p3.csv", legend: "λ = 0.3 λ₀" },
  { name: "fig3_lambda_0p4.csv", legend: "λ = 0.4 λ₀" },
  { name: "fig3_lambda_0p6.csv", legend: "λ = 0.6 λ₀" },
  { name: "fig3_lambda_0p7.csv", legend: "λ = 0.7 λ₀" },
  { name: "fig3_lambda_0p8.csv", legend: "λ = 0.8 λ₀" },
  { name: "fig3_lambda_0p9.csv", legend: "λ = 0.9 λ₀" },
  { name: "fig3_lambda_1p0.csv", legend: "λ = λ₀" },
];

const LETTERS = "abcdefghi";

export function expectedFiles(figureId: FigureId): string[] {
  return (figureId === "fig2" ? FIG2_FILES : FIG3_FILES).map((f) => f.name);
}

export class MissingSeriesError extends Error {
  constructor(public readonly files: string[]) {
    super(`missing series files: ${files.join(", ")}`);
    this.name = "MissingSeriesError";
  }
}

/**
 * Load every series of a figure from its input directory.
 *
 * No physics is recomputed here: the phase column is copied as-is, with the
 * only allowed transformation being the radians -> multiples-of-pi unit
 * conversion on the y values.
 */
export function prepareFigure(spec: FigureSpec): FigureData {
  const files = spec.figureId === "fig2" ? FIG2_FILES : FIG3_FILES;
  const missing = files
    .map((f) => f.name)
    .filter((name) => !existsSync(join(spec.inputDir, name)));
  if (missing.length > 0) {
    throw new MissingSeriesError(missing);
  }
  const scale = spec.yUnit === "multiples_of_pi" ? 1.0 / Math.PI : 1.0;
  const series: Series[] = files.map((file, index) => {
    const rows = readSweepCsv(join(spec.inputDir, file.name));
    return {
      label: `(${LETTERS[index]})`,
      legend: file.legend,
      param: rows.map((r) => r.param),
      phi: rows.map(
        (r) => (spec.branch === "principal" ? r.phiPrincipal : r.phiContinued) * scale,
      ),
    };
  });
  return {
    figureId: spec.figureId,
    xLabel: spec.figureId === "fig2" ? "λ / λ₀" : "θ (rad)",
    yLabel:
      spec.yUnit === "multiples_of_pi"
        ? "phase (multiples of π)"
        : "phase (rad)",
    yMax: spec.yUnit === "multiples_of_pi" ? 2.0 : 2.0 * Math.PI,
    series,
  };
}
