// DOM rendering: one pure function of the view state. The whole board is
// rebuilt on every state change; at this scale that is plenty fast and
// keeps rendering trivially consistent with the state.

import { adviceLines, phase, recommendedEnd, whatIf, type ViewState } from './model.js';
import type { PlacementEnd } from './api.js';

export interface Handlers {
  onNewGame(n: number, seed: number | null, deal: string): void;
  onReveal(): void;
  onPlace(end: PlacementEnd): void;
  onPreview(end: PlacementEnd | null): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function cardRow(values: number[], className: string): HTMLElement {
  const row = el('div', `card-row ${className}`);
  if (values.length === 0) {
    row.appendChild(el('span', 'empty-note', '(empty)'));
  }
  for (const v of values) {
    row.appendChild(el('span', 'card', String(v)));
  }
  return row;
}

export function render(root: HTMLElement, view: ViewState, handlers: Handlers): void {
  const current = phase(view);
  root.textContent = '';

  root.appendChild(renderNewGameForm(view, handlers));
  if (view.error) {
    root.appendChild(el('div', 'error-banner', `server error: ${view.error}`));
  }
  if (!view.summary) {
    root.appendChild(el('p', 'hint', 'start a game to deal a hidden deck'));
    return;
  }

  const s = view.summary;
  const board = el('section', 'board');

  const outputs = el('div', 'zone output-zone');
  outputs.appendChild(el('h2', undefined, 'output pile'));
  outputs.appendChild(
    el('div', 'pile-height', s.output_height ? `1 .. ${s.output_height}` : '(empty)'),
  );
  board.appendChild(outputs);

  const dequeZone = el('div', 'zone deque-zone');
  dequeZone.appendChild(el('h2', undefined, 'deque'));
  dequeZone.appendChild(cardRow(s.deque, 'deque-cards'));
  if (view.preview && s.revealed !== null) {
    const previewRow = cardRow(whatIf(s.deque, s.revealed, view.preview), 'preview-cards');
    previewRow.appendChild(el('span', 'empty-note', `if placed ${view.preview}`));
    dequeZone.appendChild(previewRow);
  }
  board.appendChild(dequeZone);

  const deck = el('div', 'zone deck-zone');
  deck.appendChild(el('h2', undefined, 'deck'));
  deck.appendChild(el('div', 'deck-count', `${s.deck_remaining} face down`));
  if (s.revealed !== null) {
    const held = el('div', 'revealed');
    held.appendChild(el('span', 'card revealed-card', String(s.revealed)));
    held.appendChild(el('span', undefined, ' in hand'));
    deck.appendChild(held);
  }
  board.appendChild(deck);
  root.appendChild(board);

  if (current === 'over') {
    root.appendChild(
      el('div', s.won ? 'result won' : 'result lost', s.won ? 'sorted: you won' : 'stuck: you lost'),
    );
  }

  const reveal = view.lastReveal;
  if (current === 'deciding' && reveal && reveal.substantive) {
    root.appendChild(el('div', 'substantive-flag', 'this choice matters'));
  }
  const advice = el('div', 'advice-panel');
  for (const line of adviceLines(reveal)) {
    advice.appendChild(el('div', 'advice-line', line));
  }
  root.appendChild(advice);

  root.appendChild(renderControls(view, handlers));

  const log = el('ol', 'history-log');
  for (const entry of view.log) {
    log.appendChild(el('li', undefined, entry));
  }
  root.appendChild(log);
}

function renderNewGameForm(view: ViewState, handlers: Handlers): HTMLElement {
  const form = el('form', 'new-game');
  const nInput = el('input');
  nInput.id = 'n-input';
  nInput.value = '13';
  const seedInput = el('input');
  seedInput.id = 'seed-input';
  seedInput.placeholder = 'seed (optional)';
  const dealInput = el('input');
  dealInput.id = 'deal-input';
  dealInput.placeholder = 'fixed deal (optional)';
  const button = el('button', undefined, 'new game');
  button.id = 'new-game';
  button.type = 'submit';
  button.disabled = view.pending;
  form.append('deck size ', nInput, ' ', seedInput, ' ', dealInput, ' ', button);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const seed = seedInput.value.trim();
    handlers.onNewGame(Number(nInput.value), seed ? Number(seed) : null, dealInput.value);
  });
  return form;
}

function renderControls(view: ViewState, handlers: Handlers): HTMLElement {
  const current = phase(view);
  const controls = el('div', 'controls');

  const revealButton = el('button', undefined, 'reveal');
  revealButton.id = 'reveal';
  revealButton.disabled = current !== 'ready';
  revealButton.addEventListener('click', () => handlers.onReveal());
  controls.appendChild(revealButton);

  const recommendation = recommendedEnd(view.lastReveal);
  for (const end of ['left', 'right'] as const) {
    const button = el(
      'button',
      recommendation === end && current === 'deciding' ? 'recommended' : undefined,
      `place ${end}`,
    );
    button.id = `place-${end}`;
    button.disabled = current !== 'deciding';
    button.addEventListener('click', () => handlers.onPlace(end));
    controls.appendChild(button);

    const peek = el('button', 'what-if', `what if ${end}?`);
    peek.id = `what-if-${end}`;
    peek.disabled = current !== 'deciding';
    peek.addEventListener('click', () =>
      handlers.onPreview(view.preview === end ? null : end),
    );
    controls.appendChild(peek);
  }
  return controls;
}
