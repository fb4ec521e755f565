// Client-side pre-validation mirroring the service's length checks, so the
// UI can disable fetches and name the violated inequality before any
// request goes out.

import type { Lengths } from "./types.js";

export const BAR_NAMES = ["alpha", "beta", "gamma", "delta"] as const;

export type ValidationResult =
  | { ok: true }
  | { ok: false; bar: string; message: string };

export function validateLengths(lengths: Lengths): ValidationResult {
  for (let i = 0; i < 4; i++) {
    const v = lengths[i]!;
    if (!Number.isFinite(v) || v <= 0) {
      const bar = BAR_NAMES[i]!;
      return { ok: false, bar, message: `${bar} must be positive` };
    }
  }
  const total = lengths.reduce((acc, v) => acc + v, 0);
  for (let i = 0; i < 4; i++) {
    const v = lengths[i]!;
    if (v >= total - v) {
      const bar = BAR_NAMES[i]!;
      const others = BAR_NAMES.filter((_, j) => j !== i).join(" + ");
      return {
        ok: false,
        bar,
        message: `${bar} = ${v} violates ${bar} < ${others} = ${(total - v).toPrecision(6)}`,
      };
    }
  }
  return { ok: true };
}

export function conjugateLengths(lengths: Lengths): Lengths {
  const sigma = lengths.reduce((acc, v) => acc + v, 0) / 2;
  return [sigma - lengths[0]!, sigma - lengths[1]!, sigma - lengths[2]!, sigma - lengths[3]!];
}
