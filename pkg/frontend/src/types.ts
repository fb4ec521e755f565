// Wire types mirroring the /api JSON payloads.

export interface ProjValue {
  num: number;
  den: number;
}

export interface ConfigRecord {
  s?: number;
  x: ProjValue;
  y: ProjValue;
  z: ProjValue;
  w: ProjValue;
  rho_x: number;
  rho_y: number;
  rho_z: number;
  rho_w: number;
  vertices: [number, number][];
  u: number;
  v: number;
  self_intersected: boolean;
}

export interface BranchInfo {
  branch: number;
  kind: string;
  class: string;
  t_offset_quarters: number;
  quarter: number;
  s_domain: [number | null, number | null]; // nulls mark unbounded line domains
  period: number | null;
  compact: boolean;
  snap_points: number[];
  infinity_pattern: string | null;
}

export interface TraceResponse {
  branch: BranchInfo;
  records: ConfigRecord[];
}

export interface ClassifyResponse {
  class: string;
  orthodiagonal: boolean;
}

export interface ReportResponse {
  lengths: number[];
  sigma: number;
  class: string;
  orthodiagonal: boolean;
  finite_branches: number;
  finite_kinds: string[];
  infinity_circles: number;
  infinity_isolated: number;
  grashof: boolean;
  grashof_margin: number;
  fully_rotating: string[];
  identity_residuals: Record<string, number>;
  max_identity_residual: number;
}

export interface InfinitySolutionRecord {
  isolated: boolean;
  reachable: boolean;
  condition: string;
  x?: ProjValue;
  y?: ProjValue;
  z?: ProjValue;
  w?: ProjValue;
  branch?: number;
}

export interface InfinityResponse {
  lengths: number[];
  solutions: InfinitySolutionRecord[];
}

export interface BranchesResponse {
  branches: BranchInfo[];
}

export type Lengths = [number, number, number, number];

export function projAngle(p: ProjValue): number {
  return 2 * Math.atan2(p.num, p.den);
}

export function projIsInfinite(p: ProjValue): boolean {
  return p.den === 0;
}
