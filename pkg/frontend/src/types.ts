// Wire types for the JSON API. Field names match the server responses
// exactly; everything the client stores beyond these lives in state.ts.

export type Convention = 'normal' | 'misere';
export type OutcomeLabel = 'P' | 'N';
export type EdgeName = 'XY' | 'YZ' | 'ZX';
export type Position = [number, number, number];

export interface MoveSpec {
  edge: EdgeName;
  take: number;
  give: number;
}

export interface WinningMove extends MoveSpec {
  result: Position;
}

export interface ClassifyResponse {
  position: Position;
  convention: Convention;
  outcome: OutcomeLabel;
  matched_set: 'S' | 'S1+' | 'S1-' | 'S2-' | null;
  witness_rotation: 0 | 1 | 2 | null;
  winning_moves: WinningMove[];
  winning_moves_complete: boolean;
  grundy: number | null;
}

export interface MoveResponse {
  valid: true;
  next: Position;
  next_outcome: OutcomeLabel;
  engine_move: MoveSpec | null;
  engine_next: Position | null;
  terminal_after: 'none' | 'human' | 'engine';
  winner: 'human' | 'engine' | null;
}

export interface MoveRejected {
  valid: false;
  reason: string;
}

export interface HistoryEntry {
  mover: 'human' | 'engine';
  move: MoveSpec;
  result: Position;
}
