// Session state and transitions. All kinematics come from the service; this
// module only selects, schedules, and transforms what the API returned.

import { ApiClient } from "./api.js";
import type {
  BranchInfo,
  ConfigRecord,
  InfinitySolutionRecord,
  Lengths,
  ProjValue,
  ReportResponse,
  TraceResponse,
} from "./types.js";
import { conjugateLengths, validateLengths, type ValidationResult } from "./validate.js";

export interface Overlays {
  diagonals: boolean;
  configCurve: boolean;
  infinityMarkers: boolean;
}

export interface SessionState {
  lengths: Lengths;
  validation: ValidationResult;
  report: ReportResponse | null;
  branches: BranchInfo[];
  infinity: InfinitySolutionRecord[];
  selectedBranch: number;
  trace: TraceResponse | null;
  param: number; // normalized [0, 1)
  direction: 1 | -1; // ping-pong direction on line branches
  playing: boolean;
  overlays: Overlays;
  offline: boolean;
  status: string;
  pinned: ConfigRecord | null; // strip-switch result shown until the next scrub
}

export interface StoreOptions {
  debounceMs?: number;
  samples?: number;
  stepsPerSecond?: number;
}

// the four strip-switch symmetries: bar sign pattern and tangent maps
const STRIP_SIGNS: Record<number, [number, number, number, number]> = {
  1: [1, 1, -1, -1],
  2: [-1, 1, 1, -1],
  3: [-1, -1, 1, 1],
  4: [1, -1, -1, 1],
};

const ident = (p: ProjValue): ProjValue => p;
const neg = (p: ProjValue): ProjValue => ({ num: -p.num, den: p.den });
const negInv = (p: ProjValue): ProjValue => ({ num: -p.den, den: p.num });

const STRIP_MAPS: Record<number, ((p: ProjValue) => ProjValue)[]> = {
  1: [ident, negInv, neg, negInv],
  2: [negInv, ident, negInv, neg],
  3: [neg, negInv, ident, negInv],
  4: [negInv, neg, negInv, ident],
};

export function recordIndexForParam(count: number, param: number, compact: boolean): number {
  if (count === 0) return -1;
  if (compact) {
    // records sampled at i / count; wraps around
    return Math.round(param * count) % count;
  }
  // records sampled at (i + 0.5) / count
  const idx = Math.round(param * count - 0.5);
  return Math.max(0, Math.min(count - 1, idx));
}

export function advanceParam(
  param: number,
  direction: 1 | -1,
  delta: number,
  compact: boolean,
): { param: number; direction: 1 | -1 } {
  if (compact) {
    let next = (param + delta) % 1;
    if (next < 0) next += 1;
    return { param: next, direction };
  }
  let next = param + direction * delta;
  let dir = direction;
  while (next > 1 || next < 0) {
    next = next > 1 ? 2 - next : -next;
    dir = (dir === 1 ? -1 : 1) as 1 | -1;
  }
  return { param: next, direction: dir };
}

export function nearestSnap(branch: BranchInfo, s: number): number | null {
  let best: number | null = null;
  let bestGap = Infinity;
  for (const snap of branch.snap_points) {
    let gap = Math.abs(s - snap);
    if (branch.period) {
      const r = Math.abs(
        (((s - snap + branch.period / 2) % branch.period) + branch.period) % branch.period -
          branch.period / 2,
      );
      gap = Math.min(gap, r);
    }
    if (gap < bestGap) {
      bestGap = gap;
      best = snap;
    }
  }
  const scale = branch.period ?? 1;
  return best !== null && bestGap <= 0.02 * scale ? best : null;
}

type Listener = (state: SessionState) => void;

export class LinkageStore {
  state: SessionState;
  private listeners: Listener[] = [];
  private debounceHandle: ReturnType<typeof setTimeout> | null = null;
  private readonly debounceMs: number;
  readonly samples: number;
  readonly stepsPerSecond: number;

  constructor(
    private client: ApiClient,
    lengths: Lengths = [1, 1, 1, 1],
    opts: StoreOptions = {},
  ) {
    this.debounceMs = opts.debounceMs ?? 100;
    this.samples = opts.samples ?? 180;
    this.stepsPerSecond = opts.stepsPerSecond ?? 0.25;
    this.state = {
      lengths,
      validation: validateLengths(lengths),
      report: null,
      branches: [],
      infinity: [],
      selectedBranch: 1,
      trace: null,
      param: 0,
      direction: 1,
      playing: false,
      overlays: { diagonals: true, configCurve: true, infinityMarkers: true },
      offline: false,
      status: "",
      pinned: null,
    };
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  private patch(partial: Partial<SessionState>): void {
    this.state = { ...this.state, ...partial };
    this.emit();
  }

  setLength(index: number, value: number): void {
    const lengths = [...this.state.lengths] as Lengths;
    lengths[index] = value;
    this.setLengths(lengths);
  }

  setLengths(lengths: Lengths): void {
    const validation = validateLengths(lengths);
    this.patch({ lengths, validation, pinned: null });
    if (!validation.ok) {
      this.patch({ status: validation.message });
      return; // never fetch for an unrealizable quadrilateral
    }
    if (this.debounceHandle) clearTimeout(this.debounceHandle);
    this.debounceHandle = setTimeout(() => {
      this.debounceHandle = null;
      void this.refresh();
    }, this.debounceMs);
  }

  async refresh(): Promise<void> {
    const { lengths, validation } = this.state;
    if (!validation.ok) return;
    try {
      const [report, branches, infinity] = await Promise.all([
        this.client.report(lengths),
        this.client.branches(lengths),
        this.client.infinity(lengths),
      ]);
      const ids = branches.branches.map((b) => b.branch);
      const selected = ids.includes(this.state.selectedBranch)
        ? this.state.selectedBranch
        : (ids[0] ?? 1);
      this.patch({
        report,
        branches: branches.branches,
        infinity: infinity.solutions,
        selectedBranch: selected,
        offline: false,
        status: "",
      });
      await this.fetchTrace();
    } catch (err) {
      this.handleFetchError(err);
    }
  }

  async selectBranch(branchId: number): Promise<void> {
    this.patch({ selectedBranch: branchId, pinned: null });
    await this.fetchTrace();
  }

  private async fetchTrace(): Promise<void> {
    if (!this.state.validation.ok) return;
    try {
      const trace = await this.client.trace(
        this.state.lengths,
        this.state.selectedBranch,
        this.samples,
      );
      this.patch({ trace, offline: false });
    } catch (err) {
      this.handleFetchError(err);
    }
  }

  private handleFetchError(err: unknown): void {
    if (err instanceof DOMException && err.name === "AbortError") return;
    const isNetwork = err instanceof TypeError;
    this.patch({
      offline: isNetwork,
      status: isNetwork ? "service unreachable" : String(err),
    });
  }

  setParam(param: number): void {
    this.patch({ param: Math.min(0.999999, Math.max(0, param)), pinned: null });
  }

  setPlaying(playing: boolean): void {
    this.patch({ playing, pinned: playing ? null : this.state.pinned });
  }

  toggleOverlay(name: keyof Overlays): void {
    this.patch({
      overlays: { ...this.state.overlays, [name]: !this.state.overlays[name] },
    });
  }

  /** Advance the animation by dt seconds; wraps on circles, ping-pongs on lines. */
  tick(dtSeconds: number): void {
    if (!this.state.playing || !this.state.trace) return;
    const compact = this.state.trace.branch.compact;
    const { param, direction } = advanceParam(
      this.state.param,
      this.state.direction,
      this.stepsPerSecond * dtSeconds,
      compact,
    );
    this.patch({ param, direction, pinned: null });
  }

  currentRecord(): ConfigRecord | null {
    if (this.state.pinned) return this.state.pinned;
    const trace = this.state.trace;
    if (!trace || trace.records.length === 0) return null;
    const idx = recordIndexForParam(trace.records.length, this.state.param, trace.branch.compact);
    return trace.records[idx] ?? null;
  }

  /** The snap point the current sample sits near, if any. */
  currentSnap(): number | null {
    const trace = this.state.trace;
    const rec = this.currentRecord();
    if (!trace || !rec || rec.s === undefined) return null;
    return nearestSnap(trace.branch, rec.s);
  }

  applyConjugate(): void {
    this.setLengths(conjugateLengths(this.state.lengths));
  }

  stripSwitchSigns(variant: number): number[] {
    const signs = STRIP_SIGNS[variant];
    if (!signs) throw new Error(`variant must be 1..4, got ${variant}`);
    return this.state.lengths.map((v, i) => signs[i]! * v);
  }

  /**
   * Jump to the configuration related by a strip-switch symmetry: the bar
   * signs flip pairwise (same trajectory) and the tangents transform
   * projectively; the matching configuration is re-fetched from the solver.
   */
  async applyStripSwitch(variant: number): Promise<void> {
    const rec = this.currentRecord();
    const maps = STRIP_MAPS[variant];
    if (!rec || !maps) return;
    const mapped = [maps[0]!(rec.x), maps[1]!(rec.y), maps[2]!(rec.z), maps[3]!(rec.w)];
    try {
      const { records } = await this.client.solve(this.state.lengths, mapped[0]!);
      if (records.length === 0) {
        this.patch({ status: `strip switch ${variant}: no matching configuration` });
        return;
      }
      const gap = (r: ConfigRecord): number => {
        const coords = [r.x, r.y, r.z, r.w];
        let worst = 0;
        for (let i = 0; i < 4; i++) {
          const p = mapped[i]!;
          const q = coords[i]!;
          const cross = Math.abs(p.num * q.den - p.den * q.num);
          worst = Math.max(worst, cross / (Math.hypot(p.num, p.den) * Math.hypot(q.num, q.den)));
        }
        return worst;
      };
      const best = records.reduce((acc, r) => (gap(r) < gap(acc) ? r : acc));
      this.patch({
        pinned: best,
        status: `strip switch ${variant}: signed bars (${this.stripSwitchSigns(variant)
          .map((v) => v.toPrecision(3))
          .join(", ")}) trace the same path`,
      });
    } catch (err) {
      this.handleFetchError(err);
    }
  }
}
