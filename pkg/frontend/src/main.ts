// DOM wiring: one submit path, three synchronized panels, export buttons.

import { ApiError, runPipeline } from "./api.js";
import { exportFilename, suiteToCsv, suiteToJson } from "./export.js";
import {
  renderGraph,
  renderSentence,
  renderSuiteTable,
  renderVerdict,
} from "./render.js";
import {
  InFlight,
  ViewState,
  applyFailure,
  applyResult,
  beginSubmit,
  canSubmit,
  hasSuite,
  initialState,
  selectEvent,
  setInput,
} from "./state.js";

let state: ViewState = initialState();
const inFlight = new InFlight();

const $ = (id: string): HTMLElement => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
};

const input = $("sentence-input") as HTMLTextAreaElement;
const submitButton = $("submit") as HTMLButtonElement;
const exportCsvButton = $("export-csv") as HTMLButtonElement;
const exportJsonButton = $("export-json") as HTMLButtonElement;

function update(next: ViewState): void {
  state = next;
  render();
}

function render(): void {
  submitButton.disabled = !canSubmit(state);
  submitButton.textContent = state.loading ? "analyzing…" : "analyze";
  exportCsvButton.disabled = !hasSuite(state);
  exportJsonButton.disabled = !hasSuite(state);

  const banner = $("error-banner");
  banner.hidden = state.error === null;
  if (state.error !== null) {
    $("error-text").textContent = state.error;
  }

  const result = state.result;
  const verdict = $("verdict");
  const sentencePanel = $("sentence-panel");
  const graphPanel = $("graph-panel");
  const suitePanel = $("suite-panel");

  if (!result) {
    verdict.innerHTML = "";
    sentencePanel.innerHTML = "";
    graphPanel.innerHTML = "";
    suitePanel.innerHTML = "";
    return;
  }

  verdict.innerHTML = renderVerdict(result.classification, result.error);
  sentencePanel.innerHTML = result.labels
    ? renderSentence(state.input, result.labels, state.selectedEventId)
    : "";
  graphPanel.innerHTML = result.graph
    ? renderGraph(result.graph, state.selectedEventId)
    : "";
  suitePanel.innerHTML = result.suite
    ? renderSuiteTable(result.suite, state.selectedEventId)
    : "";
}

async function submit(): Promise<void> {
  if (!canSubmit(state)) return;
  const text = state.input;
  update(beginSubmit(state));
  try {
    const result = await runPipeline(text, { signal: inFlight.next() });
    inFlight.clear();
    update(applyResult(state, result));
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") {
      return; // superseded by a newer submission
    }
    const message =
      err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : "network failure — the service may be down. Check the API and retry.";
    update(applyFailure(state, message));
  }
}

function download(filename: string, text: string, mime: string): void {
  const blob = new Blob([text], { type: mime });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

input.addEventListener("input", () => {
  update(setInput(state, input.value));
});
input.addEventListener("keydown", (event) => {
  if (event.key === "Enter" && !event.shiftKey) {
    event.preventDefault();
    void submit();
  }
});
submitButton.addEventListener("click", () => void submit());
$("retry").addEventListener("click", () => void submit());

exportCsvButton.addEventListener("click", () => {
  if (state.result?.suite) {
    download(exportFilename("csv"), suiteToCsv(state.result.suite), "text/csv");
  }
});
exportJsonButton.addEventListener("click", () => {
  if (state.result?.suite) {
    download(exportFilename("json"), suiteToJson(state.result.suite), "application/json");
  }
});

// Hover-linking: any element carrying data-event highlights its event across
// all three panels.
for (const panelId of ["sentence-panel", "graph-panel", "suite-panel"]) {
  const panel = $(panelId);
  panel.addEventListener("mouseover", (event) => {
    const target = (event.target as HTMLElement).closest("[data-event]");
    if (target) {
      update(selectEvent(state, target.getAttribute("data-event")));
    }
  });
  panel.addEventListener("mouseout", () => update(selectEvent(state, null)));
}

render();
