#!/usr/bin/env node
/**
 * render_figures <kind> <input.csv> <output.svg>
 *
 * Exit codes: 0 ok, 2 usage, 3 missing input file, 4 schema mismatch or
 * malformed CSV.
 */

import { existsSync, writeFileSync } from "node:fs";
import { resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { FIGURE_KINDS, FigureKind, renderFigure, SCHEMA_BY_KIND } from "./figures.js";
import { MalformedCsvError, SchemaMismatchError } from "./schema.js";

const USAGE = `usage: render_figures <kind> <input.csv> <output.svg>
kinds: ${FIGURE_KINDS.join(" | ")}`;

export function run(argv: string[]): number {
  if (argv.length !== 3) {
    console.error(USAGE);
    return 2;
  }
  const [kind, input, output] = argv;
  if (!(FIGURE_KINDS as readonly string[]).includes(kind)) {
    console.error(`unknown figure kind ${JSON.stringify(kind)}\n${USAGE}`);
    return 2;
  }
  if (!output.endsWith(".svg")) {
    // deterministic vector output only; no native rasteriser dependency
    console.error(
      `unsupported output ${JSON.stringify(output)}: this build renders .svg only`,
    );
    return 2;
  }
  if (!existsSync(input)) {
    console.error(`input not found: ${input}`);
    return 3;
  }
  let svg: string;
  try {
    svg = renderFigure(kind as FigureKind, input);
  } catch (err) {
    if (err instanceof SchemaMismatchError) {
      console.error(
        `schema mismatch for ${kind}: expected ${err.expected}, found ${err.found}`,
      );
      return 4;
    }
    if (err instanceof MalformedCsvError) {
      console.error(`malformed CSV: ${err.message}`);
      return 4;
    }
    throw err;
  }
  writeFileSync(output, svg, "utf-8");
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  fileURLToPath(import.meta.url) === resolve(process.argv[1]);
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}

export { SCHEMA_BY_KIND };
