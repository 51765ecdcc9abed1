/**
 * Reader for the engine's CSV artifacts.
 *
 * Every file starts with `# key = value` metadata lines, then one header
 * row of column names, then numeric data rows (17-significant-digit
 * scientific notation, '.' decimal separator).
 */

import { readFileSync } from "node:fs";

export interface Table {
  /** metadata from the '#'-prefixed lines */
  meta: Record<string, string>;
  columns: string[];
  /** row-major numeric data, one inner array per CSV row */
  rows: number[][];
  /** where the table came from, used in error messages */
  path: string;
}

export function parseTable(text: string, path = "<memory>"): Table {
  const meta: Record<string, string> = {};
  let header: string[] | null = null;
  const rows: number[][] = [];

  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (line === "") continue;
    if (line.startsWith("#")) {
      const eq = line.indexOf("=");
      if (eq > 0) {
        meta[line.slice(1, eq).trim()] = line.slice(eq + 1).trim();
      }
      continue;
    }
    if (header === null) {
      header = line.split(",").map((c) => c.trim());
      continue;
    }
    const cells = line.split(",");
    if (cells.length !== header.length) {
      throw new Error(
        `${path}: row ${rows.length + 1} has ${cells.length} cells, expected ${header.length}`,
      );
    }
    const row = cells.map(Number);
    const bad = row.findIndex((v) => Number.isNaN(v));
    if (bad >= 0) {
      throw new Error(
        `${path}: non-numeric value "${cells[bad]}" in column "${header[bad]}"`,
      );
    }
    rows.push(row);
  }

  if (header === null) {
    throw new Error(`${path}: no header row (empty file?)`);
  }
  return { meta, columns: header, rows, path };
}

export function readTable(path: string): Table {
  return parseTable(readFileSync(path, "utf8"), path);
}

/** Throw if any of the named columns is absent, naming the offender. */
export function requireColumns(table: Table, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) {
      throw new Error(
        `${table.path}: missing column "${name}" (have: ${table.columns.join(", ")})`,
      );
    }
  }
}

export function column(table: Table, name: string): number[] {
  const idx = table.columns.indexOf(name);
  if (idx < 0) {
    throw new Error(
      `${table.path}: missing column "${name}" (have: ${table.columns.join(", ")})`,
    );
  }
  return table.rows.map((r) => r[idx]);
}

export function metaNumber(table: Table, key: string): number {
  const raw = table.meta[key];
  if (raw === undefined) {
    throw new Error(`${table.path}: missing metadata "# ${key} = ..."`);
  }
  const v = Number(raw);
  if (Number.isNaN(v)) {
    throw new Error(`${table.path}: metadata "${key}" is not numeric: "${raw}"`);
  }
  return v;
}

/**
 * All inputs of one figure must come from the same engine invocation;
 * the shared configuration hash is the witness.
 */
export function assertSameConfig(tables: Table[]): string {
  const hashes = tables.map((t) => {
    const h = t.meta["config_sha256"];
    if (!h) throw new Error(`${t.path}: missing metadata "config_sha256"`);
    return h;
  });
  for (let i = 1; i < tables.length; i++) {
    if (hashes[i] !== hashes[0]) {
      throw new Error(
        `configuration hash mismatch: ${tables[0].path} has ${hashes[0]}, ` +
          `${tables[i].path} has ${hashes[i]}`,
      );
    }
  }
  return hashes[0];
}
