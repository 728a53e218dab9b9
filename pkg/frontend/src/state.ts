// The client owns all game state: the server is stateless, so the position,
// history and undo live here. Functions return fresh state objects; the DOM
// layer re-renders from whatever it is handed.

import { applyMove, samePosition } from './rules.js';
import {
  ClassifyResponse,
  Convention,
  HistoryEntry,
  MoveResponse,
  MoveSpec,
  Position,
} from './types.js';

export interface GameState {
  initial: Position;
  position: Position;
  convention: Convention;
  turn: 'human' | 'over';
  winner: 'human' | 'engine' | null;
  history: HistoryEntry[];
  /** Latest classify response for position; null until fetched or when offline. */
  status: ClassifyResponse | null;
}

export function newGame(start: Position, convention: Convention): GameState {
  return {
    initial: start,
    position: start,
    convention,
    turn: 'human',
    winner: null,
    history: [],
    status: null,
  };
}

/**
 * Fold a move response into the state: the human entry, the engine entry when
 * the engine replied, and the winner when the game ended.
 */
export function recordExchange(state: GameState, move: MoveSpec, response: MoveResponse): GameState {
  const history = [...state.history, { mover: 'human' as const, move, result: response.next }];
  let position = response.next;
  if (response.engine_move !== null && response.engine_next !== null) {
    history.push({ mover: 'engine', move: response.engine_move, result: response.engine_next });
    position = response.engine_next;
  }
  return {
    ...state,
    position,
    history,
    turn: response.winner === null ? 'human' : 'over',
    winner: response.winner,
    status: null,
  };
}

export function withStatus(state: GameState, status: ClassifyResponse | null): GameState {
  return { ...state, status };
}

/**
 * Replay the recorded moves from the initial position, checking each stored
 * result on the way. Throws when the history does not reproduce itself; the
 * return value is the final position.
 */
export function replayHistory(initial: Position, history: HistoryEntry[]): Position {
  let position = initial;
  for (const entry of history) {
    position = applyMove(position, entry.move);
    if (!samePosition(position, entry.result)) {
      throw new Error(
        `history diverged at ${entry.mover} move ${entry.move.edge} ` +
          `${entry.move.take} ${entry.move.give}`,
      );
    }
  }
  return position;
}

/** Drop the last human move and the engine reply that followed it, if any. */
export function undoExchange(state: GameState): GameState {
  if (state.history.length === 0) {
    return state;
  }
  const history = [...state.history];
  if (history[history.length - 1]?.mover === 'engine') {
    history.pop();
  }
  if (history[history.length - 1]?.mover === 'human') {
    history.pop();
  }
  return {
    ...state,
    history,
    position: replayHistory(state.initial, history),
    turn: 'human',
    winner: null,
    status: null,
  };
}
