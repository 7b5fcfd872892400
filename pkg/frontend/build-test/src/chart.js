/** Geometry for the value-vs-p chart: the win probability curve, shaded
 * bands of constant optimal move, and the boundaries between them. Pure
 * functions; canvas painting lives in the DOM layer. */
export function bandKey(moves) {
    return moves.join(";");
}
/** Group consecutive grid points that share an optimal-move set. */
export function computeMoveBands(rows) {
    const bands = [];
    for (let i = 0; i < rows.length; i++) {
        const row = rows[i];
        const key = bandKey(row.optimal_moves);
        const last = bands[bands.length - 1];
        if (last && last.key === key) {
            last.toIndex = i;
            last.pTo = row.p;
        }
        else {
            bands.push({
                fromIndex: i,
                toIndex: i,
                pFrom: row.p,
                pTo: row.p,
                key,
                moves: [...row.optimal_moves],
            });
        }
    }
    return bands;
}
/** Midpoints between adjacent bands: where the optimal move switches. */
export function bandBoundaries(bands, rows) {
    const boundaries = [];
    for (let i = 1; i < bands.length; i++) {
        const before = rows[bands[i - 1].toIndex].p;
        const after = rows[bands[i].fromIndex].p;
        boundaries.push((before + after) / 2);
    }
    return boundaries;
}
export const DEFAULT_GEOMETRY = {
    width: 640,
    height: 240,
    padLeft: 44,
    padRight: 12,
    padTop: 10,
    padBottom: 26,
};
export function pToX(p, geo) {
    return geo.padLeft + p * (geo.width - geo.padLeft - geo.padRight);
}
export function valueToY(value, geo) {
    const usable = geo.height - geo.padTop - geo.padBottom;
    return geo.padTop + (1 - value) * usable;
}
export function xToP(x, geo) {
    const span = geo.width - geo.padLeft - geo.padRight;
    const p = (x - geo.padLeft) / span;
    return Math.min(1, Math.max(0, p));
}
export function curvePoints(rows, geo) {
    return rows.map((row) => [pToX(row.p, geo), valueToY(row.value, geo)]);
}
