import { describe, expect, it } from "vitest";

import { configCurveSegments, fitTransform, infinityMarkerPoints, toScreen } from "../src/render.js";
import type { ConfigRecord, TraceResponse } from "../src/types.js";
import { fixtureFor } from "./helpers.js";

function records(lengths: number[]): ConfigRecord[] {
  return (fixtureFor(lengths).trace1 as TraceResponse).records;
}

describe("fitTransform", () => {
  it("maps every vertex inside the canvas", () => {
    const recs = records([2, 3, 4, 6]);
    const tf = fitTransform(recs, 560, 420);
    for (const rec of recs) {
      for (const [x, y] of rec.vertices) {
        const [sx, sy] = toScreen(tf, x, y);
        expect(sx).toBeGreaterThanOrEqual(0);
        expect(sx).toBeLessThanOrEqual(560);
        expect(sy).toBeGreaterThanOrEqual(0);
        expect(sy).toBeLessThanOrEqual(420);
      }
    }
  });
});

describe("config-space curve", () => {
  it("splits the polyline at the +-pi seam instead of drawing chords", () => {
    const recs = records([1, 1, 1, 1]); // rho_x sweeps the full circle
    const segments = configCurveSegments(recs);
    expect(segments.length).toBeGreaterThanOrEqual(1);
    for (const seg of segments) {
      for (let i = 1; i < seg.length; i++) {
        expect(Math.abs(seg[i]![0] - seg[i - 1]![0])).toBeLessThanOrEqual(Math.PI);
        expect(Math.abs(seg[i]![1] - seg[i - 1]![1])).toBeLessThanOrEqual(Math.PI);
      }
    }
    const total = segments.reduce((acc, seg) => acc + seg.length, 0);
    expect(total).toBeGreaterThanOrEqual(recs.length - segments.length);
  });

  it("keeps the current sample exactly on the curve", () => {
    const recs = records([2, 3, 4, 6]);
    const segments = configCurveSegments(recs);
    const current = recs[7]!;
    const onCurve = segments.some((seg) =>
      seg.some(([rx, rz]) => rx === current.rho_x && rz === current.rho_z),
    );
    expect(onCurve).toBe(true);
  });
});

describe("infinity markers", () => {
  it("marks isolated folded configurations in angle coordinates", () => {
    const markers = infinityMarkerPoints(fixtureFor([2, 1, 2, 1]).infinity.solutions);
    expect(markers.length).toBe(2);
    // (inf, 0, inf, 0) maps to (pi, pi); (0, inf, 0, inf) to (0, 0)
    const sorted = markers.map(([a, b]) => [Math.round(a * 100) / 100, Math.round(b * 100) / 100]);
    expect(sorted).toContainEqual([3.14, 3.14]);
    expect(sorted).toContainEqual([0, 0]);
  });

  it("skips folded circle references (no isolated tuple to mark)", () => {
    const markers = infinityMarkerPoints(fixtureFor([1, 1, 1, 1]).infinity.solutions);
    expect(markers.length).toBe(0);
  });
});
