// App wiring: one view state, one in-flight request at a time, rerender
// after every change. The server is the single source of truth; this file
// only moves responses into the view.

import { ApiClient, ApiError, type PlacementEnd } from './api.js';
import { describePlacement, emptyView, type ViewState } from './model.js';
import { render, type Handlers } from './render.js';

export class App {
  readonly view: ViewState = emptyView();
  private readonly api: ApiClient;

  constructor(private readonly root: HTMLElement, apiBase = '') {
    this.api = new ApiClient(apiBase);
    this.rerender();
  }

  private rerender(): void {
    render(this.root, this.view, this.handlers);
  }

  // Serialized actions: while a request is pending every other action is a
  // no-op (the buttons are disabled too; this guards keyboard mashing).
  private async act(run: () => Promise<void>): Promise<void> {
    if (this.view.pending) return;
    this.view.pending = true;
    this.view.error = null;
    this.rerender();
    try {
      await run();
    } catch (error) {
      // a 409 here means the UI let an out-of-phase action through: surface it
      this.view.error = error instanceof ApiError ? `${error.status} ${error.message}` : String(error);
    } finally {
      this.view.pending = false;
      this.rerender();
    }
  }

  newGame(n: number, seed: number | null, dealText = ''): Promise<void> {
    return this.act(async () => {
      const deal = dealText.trim()
        ? dealText.trim().split(/[\s,]+/).map(Number)
        : undefined;
      const body = deal ? { deal } : seed === null ? { n } : { n, seed };
      const game = await this.api.newGame(body);
      this.view.gameId = game.id;
      this.view.summary = game.state;
      this.view.lastReveal = null;
      this.view.preview = null;
      this.view.log = [`game ${game.id}: ${game.state.n} cards face down`];
    });
  }

  reveal(): Promise<void> {
    return this.act(async () => {
      if (!this.view.gameId) return;
      const response = await this.api.reveal(this.view.gameId);
      this.view.summary = response.state;
      this.view.lastReveal = response;
      this.view.preview = null;
      if (response.auto_output) {
        this.view.log.push(`revealed ${response.revealed}: straight to the output`);
      } else {
        const mark = response.substantive ? ' — this choice matters' : '';
        this.view.log.push(`revealed ${response.revealed}${mark}`);
      }
    });
  }

  place(end: PlacementEnd): Promise<void> {
    return this.act(async () => {
      if (!this.view.gameId || this.view.summary?.revealed == null) return;
      const card = this.view.summary.revealed;
      const response = await this.api.place(this.view.gameId, end);
      this.view.summary = response.state;
      this.view.lastReveal = null;
      this.view.preview = null;
      this.view.log.push(describePlacement(card, end, response.pops));
      if (response.finished) {
        this.view.log.push(response.won ? 'deck sorted — won' : 'deque stuck — lost');
      }
    });
  }

  preview(end: PlacementEnd | null): void {
    this.view.preview = end;
    this.rerender();
  }

  private readonly handlers: Handlers = {
    onNewGame: (n, seed, deal) => void this.newGame(n, seed, deal),
    onReveal: () => void this.reveal(),
    onPlace: (end) => void this.place(end),
    onPreview: (end) => this.preview(end),
  };
}

export function createApp(root: HTMLElement, apiBase = ''): App {
  return new App(root, apiBase);
}
