// Client-side mirror of the move rule: pick a directed edge, remove
// 1 <= take <= source tokens from its source and put back 0 <= give < take
// on its target. The server stays authoritative; this module exists so the
// form can reject bad input before a round trip and so the what-if panel can
// enumerate moves locally.

import { EdgeName, MoveSpec, Position } from './types.js';

export const EDGES: ReadonlyArray<{ name: EdgeName; source: number; target: number }> = [
  { name: 'XY', source: 0, target: 1 },
  { name: 'YZ', source: 1, target: 2 },
  { name: 'ZX', source: 2, target: 0 },
];

export const VERTEX_NAMES = ['X', 'Y', 'Z'] as const;

export function isTerminal(p: Position): boolean {
  return p[0] === 0 && p[1] === 0 && p[2] === 0;
}

export function totalTokens(p: Position): number {
  return p[0] + p[1] + p[2];
}

function edgeByName(name: EdgeName) {
  const edge = EDGES.find((e) => e.name === name);
  if (!edge) {
    throw new Error(`unknown edge ${name}`);
  }
  return edge;
}

/**
 * Why a move is invalid from p, or null when it is fine. Mirrors the server's
 * checks so the form can explain problems inline.
 */
export function moveProblem(p: Position, move: MoveSpec): string | null {
  if (!Number.isInteger(move.take) || !Number.isInteger(move.give)) {
    return 'take and give must be whole numbers';
  }
  if (move.take < 1) {
    return 'take must be at least 1';
  }
  if (move.give < 0) {
    return 'give cannot be negative';
  }
  if (move.give >= move.take) {
    return `give (${move.give}) must be smaller than take (${move.take})`;
  }
  const edge = edgeByName(move.edge);
  if (move.take > p[edge.source]) {
    return `cannot take ${move.take} from ${VERTEX_NAMES[edge.source]} holding ${p[edge.source]}`;
  }
  return null;
}

export function isLegalMove(p: Position, move: MoveSpec): boolean {
  return moveProblem(p, move) === null;
}

export function applyMove(p: Position, move: MoveSpec): Position {
  const problem = moveProblem(p, move);
  if (problem !== null) {
    throw new Error(problem);
  }
  const edge = edgeByName(move.edge);
  const next: Position = [...p];
  next[edge.source] -= move.take;
  next[edge.target] += move.give;
  return next;
}

/** All legal moves, edge XY, YZ, ZX then take then give ascending (server order). */
export function legalMoves(p: Position): MoveSpec[] {
  const moves: MoveSpec[] = [];
  for (const edge of EDGES) {
    for (let take = 1; take <= p[edge.source]; take++) {
      for (let give = 0; give < take; give++) {
        moves.push({ edge: edge.name, take, give });
      }
    }
  }
  return moves;
}

export function moveCount(p: Position): number {
  return p.reduce((acc, n) => acc + (n * (n + 1)) / 2, 0);
}

export function samePosition(a: Position, b: Position): boolean {
  return a[0] === b[0] && a[1] === b[1] && a[2] === b[2];
}

export function sameMove(a: MoveSpec, b: MoveSpec): boolean {
  return a.edge === b.edge && a.take === b.take && a.give === b.give;
}

export function formatPosition(p: Position): string {
  return `${p[0]},${p[1]},${p[2]}`;
}

export function formatMove(m: MoveSpec): string {
  return `${m.edge} ${m.take} ${m.give}`;
}
