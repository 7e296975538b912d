// Client for the pipeline endpoint. The UI never computes pipeline logic
// itself; everything it displays comes out of this call.

import type { PipelineWire } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export interface ApiOptions {
  baseUrl?: string;
  fetchFn?: FetchLike;
  signal?: AbortSignal;
}

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
    readonly code: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

declare global {
  // Optional deployment override: <script>window.CIRA_API_BASE = "http://host:8080"</script>
  interface Window {
    CIRA_API_BASE?: string;
  }
}

export function apiBase(): string {
  if (typeof window !== "undefined" && window.CIRA_API_BASE) {
    return window.CIRA_API_BASE.replace(/\/$/, "");
  }
  return "";
}

export async function runPipeline(
  text: string,
  options: ApiOptions = {},
): Promise<PipelineWire> {
  const base = options.baseUrl ?? apiBase();
  const fetchFn = options.fetchFn ?? fetch;
  const response = await fetchFn(`${base}/api/pipeline`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ text }),
    signal: options.signal,
  });
  if (!response.ok) {
    let code = "HTTP_ERROR";
    let detail = `request failed with status ${response.status}`;
    try {
      const body = (await response.json()) as { error?: string; detail?: string };
      if (body.error) code = body.error;
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep defaults
    }
    throw new ApiError(detail, response.status, code);
  }
  return (await response.json()) as PipelineWire;
}
