/** Hint overlay data. The displayed probability strings are cut straight out
 * of the server's JSON bytes, never re-serialized, so what the user reads is
 * exactly what the solver sent. */

import type { HintPayload } from "./types.js";

export interface HintDisplay {
  /** Literal number substrings of the payload, one per move. */
  valueTexts: string[];
  values: number[];
  optimal: number[];
  moves: string[];
}

/** Slice the literal elements out of the `"move_values": [...]` array. */
export function extractMoveValueTexts(raw: string): string[] {
  const key = '"move_values"';
  const keyAt = raw.indexOf(key);
  if (keyAt < 0) throw new Error("payload has no move_values field");
  const open = raw.indexOf("[", keyAt);
  const close = raw.indexOf("]", open);
  if (open < 0 || close < 0) throw new Error("malformed move_values array");
  const inner = raw.slice(open + 1, close).trim();
  if (inner === "") return [];
  return inner.split(",").map((piece) => piece.trim());
}

export function buildHintDisplay(raw: string, data?: HintPayload): HintDisplay {
  const payload = data ?? (JSON.parse(raw) as HintPayload);
  const valueTexts = extractMoveValueTexts(raw);
  if (valueTexts.length !== payload.move_values.length) {
    throw new Error("hint text extraction out of sync with parsed payload");
  }
  return {
    valueTexts,
    values: payload.move_values,
    optimal: payload.optimal_moves,
    moves: payload.moves,
  };
}
