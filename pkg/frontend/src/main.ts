// Entry point: wires the forms, board and panels together. All game state
// lives in a single GameState value; every change goes through refresh(),
// which re-renders everything from scratch. One move request is in flight at
// a time; the form stays disabled until the engine reply lands.

import { ApiClient, MoveRejectedError } from './api.js';
import { boardView, renderBoard, renderStatus } from './board.js';
import { buildWhatIfRows } from './panel.js';
import { formatMove, formatPosition, isTerminal, moveProblem } from './rules.js';
import { GameState, newGame, recordExchange, undoExchange, withStatus } from './state.js';
import { Convention, EdgeName, MoveSpec, Position } from './types.js';

const api = new ApiClient('');

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing element #${id}`);
  }
  return found as T;
}

const boardBox = el<HTMLDivElement>('board');
const statusBox = el<HTMLDivElement>('status');
const historyBox = el<HTMLOListElement>('history');
const whatIfBox = el<HTMLTableSectionElement>('what-if-rows');
const errorBox = el<HTMLDivElement>('error-banner');

const startInput = el<HTMLInputElement>('start-position');
const conventionSelect = el<HTMLSelectElement>('convention');
const newGameButton = el<HTMLButtonElement>('new-game');
const undoButton = el<HTMLButtonElement>('undo');

const edgeSelect = el<HTMLSelectElement>('move-edge');
const takeInput = el<HTMLInputElement>('move-take');
const giveInput = el<HTMLInputElement>('move-give');
const moveForm = el<HTMLFormElement>('move-form');
const moveButton = el<HTMLButtonElement>('move-submit');
const moveError = el<HTMLDivElement>('move-error');

let state: GameState = newGame([5, 3, 2], 'normal');
let busy = false;

function parseStart(text: string): Position | null {
  const parts = text.trim().split(',');
  if (parts.length !== 3) {
    return null;
  }
  const coords = parts.map((part) => Number(part));
  if (coords.some((n) => !Number.isInteger(n) || n < 0)) {
    return null;
  }
  return [coords[0], coords[1], coords[2]];
}

function setBusy(value: boolean): void {
  busy = value;
  const locked = value || state.turn === 'over' || isTerminal(state.position);
  moveButton.disabled = locked;
  edgeSelect.disabled = locked;
  takeInput.disabled = locked;
  giveInput.disabled = locked;
  undoButton.disabled = value || state.history.length === 0;
}

function showError(message: string | null): void {
  errorBox.textContent = message ?? '';
  errorBox.hidden = message === null;
}

function renderHistory(): void {
  historyBox.textContent = '';
  for (const entry of state.history) {
    const item = document.createElement('li');
    const who = entry.mover === 'human' ? 'you' : 'engine';
    item.textContent = `${who}: ${formatMove(entry.move)} → ${formatPosition(entry.result)}`;
    historyBox.appendChild(item);
  }
}

function renderWhatIf(): void {
  whatIfBox.textContent = '';
  const rows = buildWhatIfRows(state.position, state.status);
  for (const row of rows) {
    const tr = document.createElement('tr');
    tr.className = row.landing === 'P' ? 'what-if-winning' : '';
    const cells = [
      formatMove(row.move),
      formatPosition(row.result),
      row.landing === null ? '' : `→ ${row.landing}`,
    ];
    for (const text of cells) {
      const td = document.createElement('td');
      td.textContent = text;
      tr.appendChild(td);
    }
    // clicking a row pre-fills the move form
    tr.addEventListener('click', () => {
      edgeSelect.value = row.move.edge;
      takeInput.value = String(row.move.take);
      giveInput.value = String(row.move.give);
      moveError.textContent = '';
    });
    whatIfBox.appendChild(tr);
  }
}

function render(): void {
  const view = boardView(state);
  renderBoard(boardBox, view);
  renderStatus(statusBox, view);
  renderHistory();
  renderWhatIf();
  setBusy(busy);
}

async function refreshStatus(): Promise<void> {
  try {
    const status = await api.classify(state.position, state.convention);
    state = withStatus(state, status);
    showError(null);
  } catch {
    // degraded mode: board and move list still work without statuses
    state = withStatus(state, null);
    showError('engine unreachable; retry by submitting again');
  }
  render();
}

function readMove(): MoveSpec {
  return {
    edge: edgeSelect.value as EdgeName,
    take: Number(takeInput.value),
    give: Number(giveInput.value),
  };
}

async function submitMove(move: MoveSpec): Promise<void> {
  const problem = moveProblem(state.position, move);
  if (problem !== null) {
    moveError.textContent = problem;
    return;
  }
  moveError.textContent = '';
  setBusy(true);
  try {
    const response = await api.move(state.position, move, state.convention);
    state = recordExchange(state, move, response);
    render();
    await refreshStatus();
  } catch (err) {
    if (err instanceof MoveRejectedError) {
      // server is authoritative: turn retained, reason shown inline
      moveError.textContent = err.reason;
    } else {
      showError('move failed to send; check the connection and retry');
    }
  } finally {
    setBusy(false);
    render();
  }
}

async function startGame(): Promise<void> {
  const start = parseStart(startInput.value);
  if (start === null) {
    moveError.textContent = "start must be 'x,y,z' with non-negative integers";
    return;
  }
  moveError.textContent = '';
  state = newGame(start, conventionSelect.value as Convention);
  render();
  await refreshStatus();
}

moveForm.addEventListener('submit', (event) => {
  event.preventDefault();
  if (!busy && state.turn !== 'over') {
    void submitMove(readMove());
  }
});

newGameButton.addEventListener('click', () => {
  if (!busy) {
    void startGame();
  }
});

// changing the winning condition mid-game would silently flip outcomes,
// so a convention change starts over
conventionSelect.addEventListener('change', () => {
  if (!busy) {
    void startGame();
  }
});

undoButton.addEventListener('click', () => {
  if (!busy && state.history.length > 0) {
    state = undoExchange(state);
    render();
    void refreshStatus();
  }
});

render();
void refreshStatus();
