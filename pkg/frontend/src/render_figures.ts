#!/usr/bin/env node
/**
 * render_figures <fig2|fig3> <input_dir> <output.svg>
 *   [--units radians|multiples-of-pi] [--branch continued|principal]
 *
 * Reads the generator CLI's sweep CSV set for one figure and writes a
 * deterministic multi-series SVG plot. Exits 1 naming the offending file(s)
 * on missing or malformed input, 2 on usage errors.
 */

import { writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";

import { CsvFormatError } from "./csv.js";
import {
  FigureId,
  FigureSpec,
  MissingSeriesError,
  PhaseBranch,
  YUnit,
  prepareFigure,
} from "./figures.js";
import { renderSvg } from "./svg.js";

const TITLES: Record<FigureId, string> = {
  fig2: "phase vs charge-density ratio, one curve per tilt",
  fig3: "phase vs tilt, one curve per charge-density ratio",
};

function usage(): never {
  process.stderr.write(
    "usage: render_figures <fig2|fig3> <input_dir> <output.svg> " +
      "[--units radians|multiples-of-pi] [--branch continued|principal]\n",
  );
  process.exit(2);
}

export function parseArgs(argv: string[]): FigureSpec {
  const positional: string[] = [];
  let yUnit: YUnit = "radians";
  let branch: PhaseBranch = "continued";
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--units") {
      const value = argv[++i];
      if (value === "radians") yUnit = "radians";
      else if (value === "multiples-of-pi") yUnit = "multiples_of_pi";
      else usage();
    } else if (arg === "--branch") {
      const value = argv[++i];
      if (value === "continued" || value === "principal") branch = value;
      else usage();
    } else if (arg.startsWith("--")) {
      usage();
    } else {
      positional.push(arg);
    }
  }
  if (positional.length !== 3) usage();
  const [figureId, inputDir, outputPath] = positional;
  if (figureId !== "fig2" && figureId !== "fig3") usage();
  return { figureId, inputDir, outputPath, yUnit, branch };
}

export function render(spec: FigureSpec): void {
  const data = prepareFigure(spec);
  writeFileSync(spec.outputPath, renderSvg(data, TITLES[spec.figureId]), "utf8");
}

function main(): void {
  const spec = parseArgs(process.argv.slice(2));
  try {
    render(spec);
  } catch (err) {
    if (err instanceof MissingSeriesError || err instanceof CsvFormatError) {
      process.stderr.write(err.message + "\n");
      process.exit(1);
    }
    throw err;
  }
}

if (process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href) {
  main();
}
