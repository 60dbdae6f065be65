/**
 * Versioned-CSV reading. Every marnet dataset starts with a `# schema=<name>`
 * comment line; a renderer refuses anything whose schema line differs from
 * what it was written for, rather than misplotting columns.
 */

import { readFileSync } from "node:fs";
import Papa from "papaparse";

export class SchemaMismatchError extends Error {
  constructor(
    public readonly expected: string,
    public readonly found: string,
  ) {
    super(`schema mismatch: expected ${expected}, found ${found}`);
  }
}

export class MalformedCsvError extends Error {}

export type Row = Record<string, string>;

export function readDataset(path: string, expectedSchema: string): Row[] {
  const text = readFileSync(path, "utf-8");
  const newline = text.indexOf("\n");
  const first = (newline === -1 ? text : text.slice(0, newline)).trim();
  const prefix = "# schema=";
  if (!first.startsWith(prefix)) {
    throw new SchemaMismatchError(expectedSchema, "<missing schema line>");
  }
  const found = first.slice(prefix.length);
  if (found !== expectedSchema) {
    throw new SchemaMismatchError(expectedSchema, found);
  }
  const body = text.slice(newline + 1);
  const parsed = Papa.parse<Row>(body.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new MalformedCsvError(`row ${e.row}: ${e.message}`);
  }
  return parsed.data;
}

export function num(row: Row, column: string): number {
  const raw = row[column];
  const value = Number(raw);
  if (raw === undefined || raw === "" || Number.isNaN(value)) {
    throw new MalformedCsvError(`non-numeric value ${JSON.stringify(raw)} in column ${column}`);
  }
  return value;
}
