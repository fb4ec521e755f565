// Test backing: a fetch stub that serves the canned service payloads
// captured from the real API (tests/fixtures.json).

import fixtures from "./fixtures.json";
import type { Lengths } from "../src/types.js";

type Fixture = (typeof fixtures)[keyof typeof fixtures];

const byLengths = new Map<string, Fixture>(
  Object.values(fixtures).map((f) => [f.lengths.join(","), f as Fixture]),
);

export function fixtureFor(lengths: Lengths | number[]): Fixture {
  const fix = byLengths.get(lengths.join(","));
  if (!fix) throw new Error(`no fixture for lengths ${lengths.join(",")}`);
  return fix;
}

export interface FetchLog {
  calls: { url: string; body?: unknown }[];
}

export function fakeFetch(log: FetchLog = { calls: [] }): typeof fetch {
  const impl = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = String(input);
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    log.calls.push({ url, body });
    const respond = (payload: unknown, status = 200) =>
      new Response(JSON.stringify(payload), {
        status,
        headers: { "content-type": "application/json" },
      });

    const query = url.includes("?lengths=") ? url.split("?lengths=")[1]! : "";
    if (url.includes("/api/report")) return respond(fixtureFor(query.split(",").map(Number)).report);
    if (url.includes("/api/branches")) return respond(fixtureFor(query.split(",").map(Number)).branches);
    if (url.includes("/api/infinity")) return respond(fixtureFor(query.split(",").map(Number)).infinity);
    if (url.includes("/api/trace")) {
      const fix = fixtureFor((body as { lengths: number[] }).lengths) as Fixture & {
        trace2?: unknown;
      };
      const branch = (body as { branch: number }).branch;
      if (branch === 2 && fix.trace2) return respond(fix.trace2);
      if (branch === 1) return respond(fix.trace1);
      return respond({ error: "LinkageError", detail: "no such branch in fixtures" }, 422);
    }
    if (url.includes("/api/solve")) {
      const fix = fixtureFor((body as { lengths: number[] }).lengths) as Fixture & {
        solve?: unknown;
      };
      if (fix.solve) return respond(fix.solve);
      return respond({ records: [] });
    }
    return respond({ error: "not_found", detail: url }, 400);
  };
  return impl as typeof fetch;
}

export { fixtures };
