import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { PipelineWire } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export const BUTTON_SENTENCE =
  "When the red button is pushed or the power fails then the system shuts down.";

export function loadPipelineFixture(): PipelineWire {
  return JSON.parse(
    readFileSync(join(here, "fixtures", "pipeline_button.json"), "utf-8"),
  ) as PipelineWire;
}

/** Same sentence with "or" edited to "and", as returned by the service. */
export function loadConjunctionFixture(): PipelineWire {
  return JSON.parse(
    readFileSync(join(here, "fixtures", "pipeline_button_and.json"), "utf-8"),
  ) as PipelineWire;
}

/** Byte-for-byte copy of `cira testsuite ... --format csv`. */
export function loadCliCsv(): string {
  return readFileSync(join(here, "fixtures", "suite_button.csv"), "utf-8");
}

/** Byte-for-byte copy of `cira testsuite ... --format json`. */
export function loadCliJson(): string {
  return readFileSync(join(here, "fixtures", "suite_button.json"), "utf-8");
}
