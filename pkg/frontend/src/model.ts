// View state and the few pure helpers the board needs. Everything the
// player sees mirrors the last server response; the only game logic that
// lives in the client is the what-if preview, which is a plain
// concatenation of the card onto the deque.

import type { PlacementEnd, RevealResponse, StateSummary } from './api.js';

export type Phase =
  | 'idle' // no game yet
  | 'ready' // may reveal
  | 'deciding' // card in hand, must place
  | 'busy' // request in flight
  | 'over'; // game finished

export interface ViewState {
  gameId: string | null;
  summary: StateSummary | null;
  lastReveal: RevealResponse | null;
  preview: PlacementEnd | null;
  log: string[];
  error: string | null;
  pending: boolean;
}

export function emptyView(): ViewState {
  return {
    gameId: null,
    summary: null,
    lastReveal: null,
    preview: null,
    log: [],
    error: null,
    pending: false,
  };
}

export function phase(view: ViewState): Phase {
  if (view.pending) return 'busy';
  if (!view.gameId || !view.summary) return 'idle';
  if (view.summary.finished) return 'over';
  return view.summary.revealed === null ? 'ready' : 'deciding';
}

// Local preview only: the server still owns forced pops and everything else.
export function whatIf(deque: number[], card: number, end: PlacementEnd): number[] {
  return end === 'left' ? [card, ...deque] : [...deque, card];
}

export function adviceLines(reveal: RevealResponse | null): string[] {
  if (!reveal || reveal.auto_output || reveal.advice === undefined) return [];
  if (reveal.advice === 'unavailable') {
    return ['advice unavailable (too many hidden orderings)'];
  }
  const { s1, s2 } = reveal.advice;
  return [
    `strategy 1: left wins ${s1.winnable_left}, right wins ${s1.winnable_right} -> ${s1.recommended}`,
    `strategy 2: left wins ${s2.winnable_left}, right wins ${s2.winnable_right} -> ${s2.recommended}`,
  ];
}

export function recommendedEnd(reveal: RevealResponse | null): PlacementEnd | null {
  if (!reveal || reveal.advice === undefined || reveal.advice === 'unavailable') {
    return null;
  }
  return reveal.advice.s1.recommended;
}

export function describePlacement(card: number, end: PlacementEnd, pops: number): string {
  const popped = pops > 0 ? `, ${pops} card${pops === 1 ? '' : 's'} popped` : '';
  return `placed ${card} ${end}${popped}`;
}
