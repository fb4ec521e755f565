// Canvas rendering: the linkage drawing and the configuration-space plot.
// Geometry helpers are pure and unit-tested; the ctx calls stay thin.

import type { BranchInfo, ConfigRecord, InfinitySolutionRecord } from "./types.js";
import { projAngle } from "./types.js";

export interface ViewTransform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function fitTransform(
  records: ConfigRecord[],
  width: number,
  height: number,
  margin = 24,
): ViewTransform {
  let minX = -1, maxX = 1, minY = -1, maxY = 1;
  for (const rec of records) {
    for (const [px, py] of rec.vertices) {
      minX = Math.min(minX, px);
      maxX = Math.max(maxX, px);
      minY = Math.min(minY, py);
      maxY = Math.max(maxY, py);
    }
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
  return {
    scale,
    offsetX: width / 2 - scale * (minX + maxX) / 2,
    offsetY: height / 2 + scale * (minY + maxY) / 2,
  };
}

export function toScreen(t: ViewTransform, x: number, y: number): [number, number] {
  return [t.offsetX + t.scale * x, t.offsetY - t.scale * y];
}

/**
 * The configuration-space plot shows the joint angles (rho_x, rho_z), which
 * stay bounded where the tangents do not.  Split the polyline wherever the
 * curve wraps across the +-pi seam so no spurious chords appear.
 */
export function configCurveSegments(records: ConfigRecord[]): [number, number][][] {
  const segments: [number, number][][] = [];
  let current: [number, number][] = [];
  let prev: [number, number] | null = null;
  for (const rec of records) {
    const pt: [number, number] = [rec.rho_x, rec.rho_z];
    if (prev && (Math.abs(pt[0] - prev[0]) > Math.PI || Math.abs(pt[1] - prev[1]) > Math.PI)) {
      if (current.length > 1) segments.push(current);
      current = [];
    }
    current.push(pt);
    prev = pt;
  }
  if (current.length > 1) segments.push(current);
  return segments;
}

export function infinityMarkerPoints(
  solutions: InfinitySolutionRecord[],
): [number, number][] {
  const pts: [number, number][] = [];
  for (const sol of solutions) {
    if (sol.isolated && sol.x && sol.z) {
      pts.push([projAngle(sol.x), projAngle(sol.z)]);
    }
  }
  return pts;
}

const BAR_COLORS = ["#888", "#2b6cb0", "#2f855a", "#b7791f"]; // DA, AB, BC, CD

export function drawLinkage(
  ctx: CanvasRenderingContext2D,
  record: ConfigRecord,
  transform: ViewTransform,
  showDiagonals: boolean,
): void {
  const [a, b, c, d] = record.vertices;
  if (!a || !b || !c || !d) return;
  const bars: [[number, number], [number, number], number][] = [
    [d, a, 0],
    [a, b, 1],
    [b, c, 2],
    [c, d, 3],
  ];
  ctx.lineWidth = record.self_intersected ? 4 : 3;
  for (const [p, q, color] of bars) {
    ctx.strokeStyle = record.self_intersected ? "#c53030" : BAR_COLORS[color]!;
    ctx.beginPath();
    ctx.moveTo(...toScreen(transform, p[0], p[1]));
    ctx.lineTo(...toScreen(transform, q[0], q[1]));
    ctx.stroke();
  }
  if (showDiagonals) {
    ctx.save();
    ctx.setLineDash([6, 6]);
    ctx.lineWidth = 1;
    ctx.strokeStyle = "#718096";
    for (const [p, q] of [
      [c, a],
      [b, d],
    ] as const) {
      ctx.beginPath();
      ctx.moveTo(...toScreen(transform, p[0], p[1]));
      ctx.lineTo(...toScreen(transform, q[0], q[1]));
      ctx.stroke();
    }
    ctx.restore();
  }
  for (const [px, py] of [a, b, c, d]) {
    const [sx, sy] = toScreen(transform, px, py);
    ctx.fillStyle = "#1a202c";
    ctx.beginPath();
    ctx.arc(sx, sy, 5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

export function drawConfigSpace(
  ctx: CanvasRenderingContext2D,
  width: number,
  height: number,
  records: ConfigRecord[],
  current: ConfigRecord | null,
  markers: [number, number][],
  branch: BranchInfo | null,
): void {
  const pad = 18;
  const sx = (v: number) => pad + ((v + Math.PI) / (2 * Math.PI)) * (width - 2 * pad);
  const sy = (v: number) => height - pad - ((v + Math.PI) / (2 * Math.PI)) * (height - 2 * pad);
  ctx.strokeStyle = "#cbd5e0";
  ctx.lineWidth = 1;
  ctx.strokeRect(pad, pad, width - 2 * pad, height - 2 * pad);
  ctx.strokeStyle = "#2b6cb0";
  ctx.lineWidth = 1.5;
  for (const seg of configCurveSegments(records)) {
    ctx.beginPath();
    seg.forEach(([rx, rz], i) => {
      if (i === 0) ctx.moveTo(sx(rx), sy(rz));
      else ctx.lineTo(sx(rx), sy(rz));
    });
    ctx.stroke();
  }
  ctx.fillStyle = "#805ad5";
  for (const [mx, mz] of markers) {
    ctx.beginPath();
    ctx.arc(sx(mx), sy(mz), 4, 0, 2 * Math.PI);
    ctx.fill();
  }
  if (current) {
    ctx.fillStyle = current.self_intersected ? "#c53030" : "#2f855a";
    ctx.beginPath();
    ctx.arc(sx(current.rho_x), sy(current.rho_z), 6, 0, 2 * Math.PI);
    ctx.fill();
  }
  if (branch) {
    ctx.fillStyle = "#4a5568";
    ctx.font = "11px sans-serif";
    ctx.fillText(`rho_x vs rho_z - branch ${branch.branch} (${branch.kind})`, pad, 12);
  }
}
