// Typed client for the dequesort game service. Thin: every shape here
// mirrors the server JSON one to one.

export interface StateSummary {
  n: number;
  output_next: number;
  output_height: number;
  deque: number[];
  deck_remaining: number;
  revealed: number | null;
  finished: boolean;
  won: boolean;
}

export type PlacementEnd = 'left' | 'right';

export interface AdviceInfo {
  strategy: string;
  substantive: boolean;
  winnable_left: number;
  winnable_right: number;
  recommended: PlacementEnd;
}

export type AdviceBundle = { s1: AdviceInfo; s2: AdviceInfo } | 'unavailable';

export interface RevealResponse {
  revealed: number;
  auto_output?: boolean;
  substantive?: boolean;
  substantive_oracle?: boolean;
  advice?: AdviceBundle;
  state: StateSummary;
}

export interface PlaceResponse {
  state: StateSummary;
  pops: number;
  finished: boolean;
  won: boolean;
}

export interface GameSummary {
  id: string;
  state: StateSummary;
  history: Record<string, unknown>[];
  finished: boolean;
  won: boolean;
}

export interface NewGameRequest {
  n?: number;
  seed?: number;
  deal?: number[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function request<T>(method: string, url: string, body?: unknown): Promise<T> {
  const response = await fetch(url, {
    method,
    headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = await response.json().catch(() => ({}));
  if (!response.ok) {
    const message = (payload as { error?: string }).error ?? response.statusText;
    throw new ApiError(response.status, message);
  }
  return payload as T;
}

export class ApiClient {
  constructor(private readonly base: string = '') {}

  newGame(req: NewGameRequest): Promise<{ id: string; state: StateSummary }> {
    return request('POST', `${this.base}/api/games`, req);
  }

  reveal(id: string): Promise<RevealResponse> {
    return request('POST', `${this.base}/api/games/${id}/reveal`, {});
  }

  place(id: string, end: PlacementEnd): Promise<PlaceResponse> {
    return request('POST', `${this.base}/api/games/${id}/place`, { end });
  }

  fetchGame(id: string): Promise<GameSummary> {
    return request('GET', `${this.base}/api/games/${id}`);
  }

  analyze(body: {
    deque: number[];
    output_next: number;
    input_rest: number[];
  }): Promise<{ sortable: boolean }> {
    return request('POST', `${this.base}/api/analyze`, body);
  }
}
