// What-if panel rows: every legal move from the current position together
// with the P/N status of its landing. Statuses come from the classify
// response for the current position, whose winning_moves list is exhaustive
// at panel-sized totals; rows not in the list are N. Without a response (API
// unreachable, or an incomplete move list) statuses degrade to null rather
// than guessing.

import { applyMove, legalMoves, sameMove } from './rules.js';
import { ClassifyResponse, MoveSpec, OutcomeLabel, Position } from './types.js';

export interface WhatIfRow {
  move: MoveSpec;
  result: Position;
  landing: OutcomeLabel | null;
}

export function buildWhatIfRows(
  position: Position,
  status: ClassifyResponse | null,
): WhatIfRow[] {
  return legalMoves(position).map((move) => {
    const result = applyMove(position, move);
    let landing: OutcomeLabel | null = null;
    if (status !== null) {
      const listed = status.winning_moves.some((w) => sameMove(w, move));
      if (listed) {
        landing = 'P';
      } else if (status.winning_moves_complete) {
        landing = 'N';
      }
    }
    return { move, result, landing };
  });
}

export function winningRows(rows: WhatIfRow[]): WhatIfRow[] {
  return rows.filter((row) => row.landing === 'P');
}
