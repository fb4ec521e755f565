// Thin JSON client for the /api routes with newest-wins cancellation:
// each endpoint keeps at most one request in flight, and a newer call
// aborts the older one.

import type {
  BranchesResponse,
  ClassifyResponse,
  InfinityResponse,
  Lengths,
  ProjValue,
  ReportResponse,
  TraceResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`api error ${status}: ${detail}`);
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    public baseUrl: string = "",
    private fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(key: string, path: string, init?: RequestInit): Promise<T> {
    this.inflight.get(key)?.abort();
    const controller = new AbortController();
    this.inflight.set(key, controller);
    try {
      const resp = await this.fetchImpl(this.baseUrl + path, {
        ...init,
        signal: controller.signal,
      });
      if (!resp.ok) {
        let detail = resp.statusText;
        try {
          const body = (await resp.json()) as { detail?: string };
          if (body.detail) detail = body.detail;
        } catch {
          // non-JSON error body; keep the status text
        }
        throw new ApiError(resp.status, detail);
      }
      return (await resp.json()) as T;
    } finally {
      if (this.inflight.get(key) === controller) this.inflight.delete(key);
    }
  }

  classify(lengths: Lengths): Promise<ClassifyResponse> {
    return this.request("classify", `/api/classify?lengths=${lengths.join(",")}`);
  }

  report(lengths: Lengths): Promise<ReportResponse> {
    return this.request("report", `/api/report?lengths=${lengths.join(",")}`);
  }

  branches(lengths: Lengths): Promise<BranchesResponse> {
    return this.request("branches", `/api/branches?lengths=${lengths.join(",")}`);
  }

  infinity(lengths: Lengths): Promise<InfinityResponse> {
    return this.request("infinity", `/api/infinity?lengths=${lengths.join(",")}`);
  }

  trace(lengths: Lengths, branch: number, samples: number): Promise<TraceResponse> {
    return this.request("trace", "/api/trace", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ lengths, branch, samples, coordinate: "normalized" }),
    });
  }

  solve(lengths: Lengths, x: ProjValue): Promise<{ records: import("./types.js").ConfigRecord[] }> {
    return this.request("solve", "/api/solve", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ lengths, x }),
    });
  }
}
