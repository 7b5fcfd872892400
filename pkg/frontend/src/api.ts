/** Thin typed client for /api/v1. The transport is injectable so component
 * tests can intercept it; the hint call keeps the raw response text so the
 * overlay can show the server's numbers byte for byte. */

import type {
  ErrorBody,
  GameSpec,
  HintPayload,
  MoveResponse,
  SessionState,
  SweepRow,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

export type SweepParams =
  | { game: "nim1"; k: number; points?: number }
  | { game: "chomp"; rows: number; cols: number; variant: string; points?: number };

async function raise(response: Response): Promise<never> {
  let code = "http_error";
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = (await response.json()) as ErrorBody;
    if (body.error) {
      code = body.error.code;
      message = body.error.message;
    }
  } catch {
    // non-JSON error body: keep the HTTP status text
  }
  throw new ApiError(code, message, response.status);
}

export class ApiClient {
  private readonly fetchImpl: FetchLike;

  constructor(fetchImpl?: FetchLike, private readonly base: string = "") {
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.base + path);
    if (!response.ok) await raise(response);
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) await raise(response);
    return (await response.json()) as T;
  }

  solve(spec: GameSpec): Promise<unknown> {
    return this.postJson("/api/v1/solve", spec);
  }

  sweep(params: SweepParams): Promise<SweepRow[]> {
    const query = new URLSearchParams();
    query.set("game", params.game);
    if (params.game === "nim1") {
      query.set("k", String(params.k));
    } else {
      query.set("rows", String(params.rows));
      query.set("cols", String(params.cols));
      query.set("variant", params.variant);
    }
    query.set("points", String(params.points ?? 101));
    return this.getJson(`/api/v1/sweep?${query.toString()}`);
  }

  createSession(spec: GameSpec, seed: number, humanFirst: boolean): Promise<SessionState> {
    return this.postJson("/api/v1/sessions", {
      spec,
      seed,
      human_first: humanFirst,
    });
  }

  getSession(id: string): Promise<SessionState> {
    return this.getJson(`/api/v1/sessions/${id}`);
  }

  postMove(id: string, sent: number): Promise<MoveResponse> {
    return this.postJson(`/api/v1/sessions/${id}/moves`, { sent });
  }

  /** Returns the parsed hint plus the raw bytes it was parsed from. */
  async hint(id: string): Promise<{ raw: string; data: HintPayload }> {
    const response = await this.fetchImpl(`${this.base}/api/v1/sessions/${id}/hint`);
    if (!response.ok) await raise(response);
    const raw = await response.text();
    return { raw, data: JSON.parse(raw) as HintPayload };
  }
}
