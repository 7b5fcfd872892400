/** View models for the boards. Click targets come exclusively from the move
 * list the API sent: a cell or chip with no matching server move is inert,
 * the client never fabricates a move index. */

import type { Board, BoardChomp, MoveInfo } from "./types.js";

export interface ChompCellView {
  c: number;
  r: number;
  poisoned: boolean;
  present: boolean;
  moveIndex: number | null;
}

export function chompMoveLabel(c: number, r: number): string {
  return `chomp at (${c}, ${r})`;
}

/** Grid of cells, bottom row first; present cells map to server moves. */
export function chompCells(board: BoardChomp, moves: MoveInfo[]): ChompCellView[] {
  const byLabel = new Map(moves.map((m) => [m.label, m.index]));
  const cells: ChompCellView[] = [];
  for (let r = 0; r < board.rows; r++) {
    for (let c = 0; c < board.cols; c++) {
      const present = r < (board.heights[c] ?? 0);
      const poisoned = c === 0 && r === 0;
      const moveIndex = byLabel.get(chompMoveLabel(c, r));
      cells.push({
        c,
        r,
        poisoned,
        present,
        moveIndex: present && !poisoned && moveIndex !== undefined ? moveIndex : null,
      });
    }
  }
  return cells;
}

export interface NimChipView {
  /** chips left after this move lands, i.e. the move's meaning */
  leaves: number;
  moveIndex: number;
  label: string;
}

export function nim1MoveLabel(leaves: number): string {
  return leaves === 1 ? "leave 1 chip" : `leave ${leaves} chips`;
}

/** One button per legal "leave j chips" move, straight from the API list. */
export function nim1Moves(moves: MoveInfo[]): NimChipView[] {
  return moves.map((m) => {
    const match = /^leave (\d+) chip/.exec(m.label);
    return {
      leaves: match ? Number(match[1]) : m.index,
      moveIndex: m.index,
      label: m.label,
    };
  });
}

export function describeBoard(board: Board): string {
  switch (board.kind) {
    case "nim1":
      return board.chips === 1 ? "1 chip" : `${board.chips} chips`;
    case "nim":
      return `piles (${board.piles.join(", ")})`;
    case "chomp":
      return `bar heights (${board.heights.join(", ")})`;
    case "graph":
      return board.label;
  }
}
