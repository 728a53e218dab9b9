// Board rendering: the directed triangle with token counts, plus the status
// strip (P/N badge, matched set, grundy, and the exact golden-ratio
// condition). The view model is computed by pure functions so it can be
// tested without a DOM; render() just projects it into SVG and text nodes.

import { isTerminal } from './rules.js';
import { GameState } from './state.js';
import { OutcomeLabel, Position } from './types.js';

export interface BoardView {
  counts: Position;
  badge: OutcomeLabel | null;
  matchedSet: string | null;
  grundy: number | null;
  terminal: boolean;
  banner: string | null;
  goldenLine: string | null;
  moveLine: string;
}

/**
 * The exact condition behind a P classification, rendered as integers:
 * which rotation gives a = b + c, and b >= phi*c as b*b > b*c + c*c.
 */
export function goldenConditionText(position: Position, witness: 0 | 1 | 2 | null): string | null {
  if (witness === null) {
    return 'no rotation satisfies a = b + c with b ≥ φc';
  }
  const a = position[witness];
  const b = position[(witness + 1) % 3];
  const c = position[(witness + 2) % 3];
  const split = `a = b + c: ${a} = ${b} + ${c}`;
  if (c === 0) {
    return `${split}; b ≥ φc holds with c = 0`;
  }
  const lhs = b * b;
  const rhs = b * c + c * c;
  return `${split}; b ≥ φc exactly: b² = ${lhs} > bc + c² = ${rhs}`;
}

export function boardView(state: GameState): BoardView {
  const terminal = isTerminal(state.position);
  let banner: string | null = null;
  if (state.winner === 'human') {
    banner = 'you win';
  } else if (state.winner === 'engine') {
    banner = 'engine wins';
  } else if (terminal) {
    banner = 'terminal position';
  }
  const status = state.status;
  return {
    counts: state.position,
    badge: status ? status.outcome : null,
    matchedSet: status ? status.matched_set : null,
    grundy: status ? status.grundy : null,
    terminal,
    banner,
    goldenLine: status ? goldenConditionText(state.position, status.witness_rotation) : null,
    moveLine: state.turn === 'over' ? 'game over' : 'your move',
  };
}

const SVG_NS = 'http://www.w3.org/2000/svg';

// vertex layout matching the engine's orientation: X on top, Y lower left,
// Z lower right, edges X->Y->Z->X
const VERTICES = [
  { name: 'X', cx: 150, cy: 50 },
  { name: 'Y', cx: 60, cy: 200 },
  { name: 'Z', cx: 240, cy: 200 },
];

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

/** Shorten the segment between two circles so the arrowhead sits on the rim. */
function edgeLine(from: { cx: number; cy: number }, to: { cx: number; cy: number }) {
  const radius = 26;
  const dx = to.cx - from.cx;
  const dy = to.cy - from.cy;
  const len = Math.hypot(dx, dy);
  const ux = dx / len;
  const uy = dy / len;
  return {
    x1: from.cx + ux * radius,
    y1: from.cy + uy * radius,
    x2: to.cx - ux * (radius + 6),
    y2: to.cy - uy * (radius + 6),
  };
}

export function renderBoard(container: HTMLElement, view: BoardView): void {
  container.textContent = '';
  const svg = svgEl('svg', { viewBox: '0 0 300 250', class: 'board-svg' });

  const defs = svgEl('defs', {});
  const marker = svgEl('marker', {
    id: 'arrow',
    viewBox: '0 0 10 10',
    refX: '9',
    refY: '5',
    markerWidth: '7',
    markerHeight: '7',
    orient: 'auto-start-reverse',
  });
  marker.appendChild(svgEl('path', { d: 'M 0 0 L 10 5 L 0 10 z', class: 'edge-arrow' }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (let i = 0; i < 3; i++) {
    const line = edgeLine(VERTICES[i], VERTICES[(i + 1) % 3]);
    svg.appendChild(
      svgEl('line', {
        x1: String(line.x1),
        y1: String(line.y1),
        x2: String(line.x2),
        y2: String(line.y2),
        class: 'edge-line',
        'marker-end': 'url(#arrow)',
      }),
    );
  }

  VERTICES.forEach((vertex, i) => {
    const group = svgEl('g', { class: 'vertex' });
    group.appendChild(
      svgEl('circle', { cx: String(vertex.cx), cy: String(vertex.cy), r: '26', class: 'vertex-circle' }),
    );
    const label = svgEl('text', {
      x: String(vertex.cx),
      y: String(vertex.cy - 4),
      class: 'vertex-label',
      'text-anchor': 'middle',
    });
    label.textContent = vertex.name;
    const count = svgEl('text', {
      x: String(vertex.cx),
      y: String(vertex.cy + 14),
      class: 'vertex-count',
      'text-anchor': 'middle',
    });
    count.textContent = String(view.counts[i]);
    group.appendChild(label);
    group.appendChild(count);
    svg.appendChild(group);
  });

  container.appendChild(svg);
}

export function renderStatus(panel: HTMLElement, view: BoardView): void {
  panel.textContent = '';

  const badge = document.createElement('span');
  badge.className = view.badge === 'P' ? 'badge badge-p' : 'badge badge-n';
  badge.textContent = view.badge ?? '?';
  panel.appendChild(badge);

  const lines = document.createElement('div');
  lines.className = 'status-lines';
  const add = (text: string) => {
    const div = document.createElement('div');
    div.textContent = text;
    lines.appendChild(div);
  };

  add(view.banner ?? view.moveLine);
  if (view.matchedSet !== null) {
    add(`matched set ${view.matchedSet}`);
  }
  if (view.grundy !== null) {
    add(`grundy value ${view.grundy}`);
  }
  if (view.goldenLine !== null) {
    add(view.goldenLine);
  }
  panel.appendChild(lines);
}
