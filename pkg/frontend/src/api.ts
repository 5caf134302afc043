// Typed client for the chipfire HTTP API. All game state lives on the
// server; the browser talks to it through this module and nothing else.

export interface GraphJson {
  vertices: string[];
  // parallel edges appear once per copy; loops are rejected server-side
  edges: [string, string][];
}

// Sparse vertex -> dollars map, zeros omitted (the server's convention).
export type DivisorJson = Record<string, number>;

export type MoveKind = "lend" | "borrow";
export type Move = [string, MoveKind];

export interface SessionState {
  id: string;
  graph: GraphJson;
  config: DivisorJson;
  log: Move[];
  total: number;
  won: boolean;
  genus: number;
}

export interface HintResponse {
  winnable: boolean;
  suggested_move: Move | null;
  rank: number;
}

export interface AnalyzeResponse {
  graph: GraphJson;
  genus: number;
  spanning_tree_count: string; // decimal string, may exceed 2^53
  invariant_factors: number[];
  edge_connectivity: number | null;
  vertex_degrees: Record<string, number>;
}

export interface RankResponse {
  rank: number;
  degree: number;
  certificate: DivisorJson | null;
}

// The server answered with an error payload (bad move, unknown session, ...).
export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

// fetch itself failed: the server is unreachable or the connection dropped.
// The caller cannot know whether the request was applied.
export class NetworkError extends Error {
  constructor(cause: unknown) {
    super("network failure: " + String(cause));
    this.name = "NetworkError";
  }
}

// The slice of the client that the board store needs. Tests substitute
// a scripted fake for this.
export interface SessionApi {
  createSession(graph: GraphJson, divisor: DivisorJson): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  move(id: string, vertex: string, kind: MoveKind): Promise<SessionState>;
  hint(id: string): Promise<HintResponse>;
}

export class ApiClient implements SessionApi {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let res: Response;
    try {
      res = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new NetworkError(err);
    }
    if (!res.ok) {
      let detail = `${res.status} ${res.statusText}`;
      try {
        const payload = (await res.json()) as { detail?: string };
        if (payload && typeof payload.detail === "string") detail = payload.detail;
      } catch {
        // non-JSON error body, keep the status line
      }
      throw new ApiError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  createSession(graph: GraphJson, divisor: DivisorJson): Promise<SessionState> {
    return this.request("POST", "/session", { graph, divisor });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request("GET", `/session/${id}`);
  }

  move(id: string, vertex: string, kind: MoveKind): Promise<SessionState> {
    return this.request("POST", `/session/${id}/move`, { vertex, kind });
  }

  hint(id: string): Promise<HintResponse> {
    return this.request("GET", `/session/${id}/hint`);
  }

  analyze(graph: GraphJson): Promise<AnalyzeResponse> {
    return this.request("POST", "/graph/analyze", { graph });
  }

  rank(graph: GraphJson, divisor: DivisorJson): Promise<RankResponse> {
    return this.request("POST", "/rank", { graph, divisor });
  }

  health(): Promise<{ status: string; sessions: number }> {
    return this.request("GET", "/health");
  }
}
