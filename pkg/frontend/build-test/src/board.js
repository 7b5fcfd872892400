/** View models for the boards. Click targets come exclusively from the move
 * list the API sent: a cell or chip with no matching server move is inert,
 * the client never fabricates a move index. */
export function chompMoveLabel(c, r) {
    return `chomp at (${c}, ${r})`;
}
/** Grid of cells, bottom row first; present cells map to server moves. */
export function chompCells(board, moves) {
    const byLabel = new Map(moves.map((m) => [m.label, m.index]));
    const cells = [];
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
export function nim1MoveLabel(leaves) {
    return leaves === 1 ? "leave 1 chip" : `leave ${leaves} chips`;
}
/** One button per legal "leave j chips" move, straight from the API list. */
export function nim1Moves(moves) {
    return moves.map((m) => {
        const match = /^leave (\d+) chip/.exec(m.label);
        return {
            leaves: match ? Number(match[1]) : m.index,
            moveIndex: m.index,
            label: m.label,
        };
    });
}
export function describeBoard(board) {
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
