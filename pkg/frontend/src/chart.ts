/** Geometry for the value-vs-p chart: the win probability curve, shaded
 * bands of constant optimal move, and the boundaries between them. Pure
 * functions; canvas painting lives in the DOM layer. */

import type { SweepRow } from "./types.js";

export interface Band {
  fromIndex: number;
  toIndex: number;
  pFrom: number;
  pTo: number;
  key: string;
  moves: number[];
}

export function bandKey(moves: number[]): string {
  return moves.join(";");
}

/** Group consecutive grid points that share an optimal-move set. */
export function computeMoveBands(rows: SweepRow[]): Band[] {
  const bands: Band[] = [];
  for (let i = 0; i < rows.length; i++) {
    const row = rows[i]!;
    const key = bandKey(row.optimal_moves);
    const last = bands[bands.length - 1];
    if (last && last.key === key) {
      last.toIndex = i;
      last.pTo = row.p;
    } else {
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
export function bandBoundaries(bands: Band[], rows: SweepRow[]): number[] {
  const boundaries: number[] = [];
  for (let i = 1; i < bands.length; i++) {
    const before = rows[bands[i - 1]!.toIndex]!.p;
    const after = rows[bands[i]!.fromIndex]!.p;
    boundaries.push((before + after) / 2);
  }
  return boundaries;
}

export interface ChartGeometry {
  width: number;
  height: number;
  padLeft: number;
  padRight: number;
  padTop: number;
  padBottom: number;
}

export const DEFAULT_GEOMETRY: ChartGeometry = {
  width: 640,
  height: 240,
  padLeft: 44,
  padRight: 12,
  padTop: 10,
  padBottom: 26,
};

export function pToX(p: number, geo: ChartGeometry): number {
  return geo.padLeft + p * (geo.width - geo.padLeft - geo.padRight);
}

export function valueToY(value: number, geo: ChartGeometry): number {
  const usable = geo.height - geo.padTop - geo.padBottom;
  return geo.padTop + (1 - value) * usable;
}

export function xToP(x: number, geo: ChartGeometry): number {
  const span = geo.width - geo.padLeft - geo.padRight;
  const p = (x - geo.padLeft) / span;
  return Math.min(1, Math.max(0, p));
}

export function curvePoints(
  rows: SweepRow[],
  geo: ChartGeometry,
): Array<[number, number]> {
  return rows.map((row) => [pToX(row.p, geo), valueToY(row.value, geo)]);
}
