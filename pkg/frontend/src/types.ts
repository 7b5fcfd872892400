/** Payload shapes of the /api/v1 service. The UI renders these verbatim and
 * never computes probabilities on its own. */

export type Player = "human" | "engine";

export interface MoveInfo {
  index: number;
  label: string;
}

export interface HalfMove {
  player: Player;
  sent: number;
  landed: number;
  position: number;
}

export interface BoardNim1 {
  kind: "nim1";
  chips: number;
}

export interface BoardNim {
  kind: "nim";
  piles: number[];
}

export interface BoardChomp {
  kind: "chomp";
  rows: number;
  cols: number;
  heights: number[];
}

export interface BoardGraph {
  kind: "graph";
  label: string;
}

export type Board = BoardNim1 | BoardNim | BoardChomp | BoardGraph;

export type Nim1Spec = { family: "nim1"; chips: number; p: number };
export type NimSpec = { family: "nim"; piles: number[] };
export type ChompSpec = {
  family: "chomp";
  rows: number;
  cols: number;
  variant: "n8" | "n4" | "lower_left" | "uniform";
  p?: number;
};
export type GameSpec = Nim1Spec | NimSpec | ChompSpec;

export interface SessionState {
  id: string;
  status: "live" | "finished";
  winner: Player | null;
  to_move: Player | null;
  seed: number;
  spec: GameSpec;
  current: { index: number; label: string; board: Board };
  moves: MoveInfo[];
  history: HalfMove[];
}

export interface MoveResponse {
  human: { sent: number; landed: number };
  engine?: { sent: number; landed: number };
  state: SessionState;
}

export interface HintPayload {
  move_values: number[];
  optimal_moves: number[];
  moves: string[];
}

export interface SweepRow {
  p: number;
  value: number;
  optimal_moves: number[];
}

export interface ErrorBody {
  error: { code: string; message: string };
}
