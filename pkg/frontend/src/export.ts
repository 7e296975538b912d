// Suite export builders. Output is byte-compatible with the CLI renderers
// (`--format csv` / `--format json`), which the golden tests pin down.

import type { SuiteWire } from "./types.js";

/** Minimal quoting, matching the CLI's csv writer: quote only fields that
 * contain a delimiter, a quote, or a line break; double embedded quotes. */
function csvField(value: string): string {
  if (/[",\n\r]/.test(value)) {
    return '"' + value.replace(/"/g, '""') + '"';
  }
  return value;
}

function csvRow(fields: string[]): string {
  return fields.map(csvField).join(",");
}

export function suiteToCsv(suite: SuiteWire): string {
  const lines = [csvRow(["ID", ...suite.columns.map((c) => c.variable)])];
  for (const testCase of suite.cases) {
    lines.push(csvRow([testCase.id, ...testCase.cells]));
  }
  return lines.join("\n") + "\n";
}

/** Matches the canonical JSON writer: two-space indent, trailing newline. */
export function suiteToJson(suite: SuiteWire): string {
  return JSON.stringify(suite, null, 2) + "\n";
}

export function exportFilename(format: "csv" | "json"): string {
  return `testsuite.${format}`;
}
