// View state and its transitions. Pure data in, pure data out, so the
// transitions are unit-testable without a DOM; main.ts owns the wiring.

import type { PipelineWire } from "./types.js";

export interface ViewState {
  input: string;
  result: PipelineWire | null;
  loading: boolean;
  error: string | null; // banner text for transport failures (retryable)
  selectedEventId: string | null;
}

export function initialState(): ViewState {
  return { input: "", result: null, loading: false, error: null, selectedEventId: null };
}

export function setInput(state: ViewState, input: string): ViewState {
  return { ...state, input };
}

export function canSubmit(state: ViewState): boolean {
  return state.input.trim().length > 0 && !state.loading;
}

export function beginSubmit(state: ViewState): ViewState {
  return { ...state, loading: true, error: null };
}

export function applyResult(state: ViewState, result: PipelineWire): ViewState {
  return { ...state, loading: false, error: null, result, selectedEventId: null };
}

/** Transport failure: keep the previous result so the user can retry. */
export function applyFailure(state: ViewState, message: string): ViewState {
  return { ...state, loading: false, error: message };
}

export function eventIds(result: PipelineWire | null): string[] {
  if (!result?.graph) return [];
  return [
    ...result.graph.causes.map((c) => c.id),
    ...result.graph.effects.map((e) => e.id),
  ];
}

/** Selection must reference an event of the current result; anything else clears it. */
export function selectEvent(state: ViewState, id: string | null): ViewState {
  if (id !== null && !eventIds(state.result).includes(id)) {
    return { ...state, selectedEventId: null };
  }
  return { ...state, selectedEventId: id };
}

export function hasSuite(state: ViewState): boolean {
  return Boolean(state.result?.suite);
}

/** Only one pipeline request may be in flight; a new submission cancels the
 * previous one. */
export class InFlight {
  private controller: AbortController | null = null;

  next(): AbortSignal {
    this.controller?.abort();
    this.controller = new AbortController();
    return this.controller.signal;
  }

  clear(): void {
    this.controller = null;
  }
}
