// Board store: mirrors one server session and runs the optimistic-move
// dance. No DOM here; main.ts subscribes and redraws on every change.
//
// The engine is the single source of truth. The only local arithmetic is
// the optimistic badge preview while a move is in flight, and the server
// payload replaces it wholesale on acknowledgment.

import {
  ApiError,
  NetworkError,
  type DivisorJson,
  type GraphJson,
  type HintResponse,
  type Move,
  type MoveKind,
  type SessionApi,
  type SessionState,
} from "./api.js";

export interface BoardState {
  session: SessionState | null;
  // move sent to the server and not yet acknowledged
  pending: Move | null;
  // lost contact mid-move, so the display may be behind the server
  stale: boolean;
  lastError: string | null;
  lastHint: HintResponse | null;
  loading: boolean;
}

export function coeff(config: DivisorJson, vertex: string): number {
  return config[vertex] ?? 0;
}

export function edgeMultiplicity(graph: GraphJson, u: string, v: string): number {
  let count = 0;
  for (const [a, b] of graph.edges) {
    if ((a === u && b === v) || (a === v && b === u)) count += 1;
  }
  return count;
}

export function vertexDegree(graph: GraphJson, vertex: string): number {
  let deg = 0;
  for (const [a, b] of graph.edges) {
    if (a === vertex) deg += 1;
    if (b === vertex) deg += 1;
  }
  return deg;
}

// Preview of one move, used only while the request is in flight.
// Borrowing at v raises v by deg(v) and lowers each neighbor once per
// shared edge; lending is the mirror image. Output stays sparse so it
// compares cleanly against server payloads.
export function applyMoveLocally(
  graph: GraphJson,
  config: DivisorJson,
  move: Move,
): DivisorJson {
  const [vertex, kind] = move;
  const sign = kind === "borrow" ? 1 : -1;
  const next: DivisorJson = { ...config };
  const bump = (v: string, delta: number) => {
    const value = coeff(next, v) + delta;
    if (value === 0) delete next[v];
    else next[v] = value;
  };
  for (const [a, b] of graph.edges) {
    if (a === vertex) {
      bump(vertex, sign);
      bump(b, -sign);
    } else if (b === vertex) {
      bump(vertex, sign);
      bump(a, -sign);
    }
  }
  return next;
}

// Exact banner text for a hint that comes back unwinnable. Unwinnable
// positions only occur with N <= g-1 dollars on the board.
export function unwinnableBanner(): string {
  return "no winning strategy exists (N ≤ g−1 case possible)";
}

type Listener = () => void;

export class BoardStore {
  private state: BoardState = {
    session: null,
    pending: null,
    stale: false,
    lastError: null,
    lastHint: null,
    loading: false,
  };
  private listeners: Listener[] = [];

  constructor(private readonly api: SessionApi) {}

  get current(): BoardState {
    return this.state;
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private patch(changes: Partial<BoardState>): void {
    this.state = { ...this.state, ...changes };
    for (const fn of this.listeners) fn();
  }

  async newGame(graph: GraphJson, divisor: DivisorJson): Promise<void> {
    this.patch({ loading: true, lastError: null, lastHint: null, stale: false, pending: null });
    try {
      const session = await this.api.createSession(graph, divisor);
      this.patch({ session, loading: false });
    } catch (err) {
      this.patch({ loading: false, lastError: describe(err) });
      throw err;
    }
  }

  // One move at a time: a click that lands while another move is in
  // flight is dropped rather than queued.
  async playMove(vertex: string, kind: MoveKind): Promise<void> {
    const acknowledged = this.state.session;
    if (acknowledged === null || this.state.pending !== null || this.state.stale) return;
    const move: Move = [vertex, kind];
    this.patch({
      pending: move,
      lastError: null,
      lastHint: null,
      session: {
        ...acknowledged,
        config: applyMoveLocally(acknowledged.graph, acknowledged.config, move),
        log: [...acknowledged.log, move],
      },
    });
    try {
      const session = await this.api.move(acknowledged.id, vertex, kind);
      this.patch({ session, pending: null });
    } catch (err) {
      if (err instanceof ApiError) {
        // server rejected the move; the last acknowledged state is still good
        this.patch({ session: acknowledged, pending: null, lastError: err.message });
      } else if (err instanceof NetworkError) {
        // the move may or may not have been applied; hold the board until a resync
        this.patch({ session: acknowledged, pending: null, stale: true, lastError: err.message });
      } else {
        this.patch({ session: acknowledged, pending: null, lastError: describe(err) });
        throw err;
      }
    }
  }

  async resync(): Promise<void> {
    const session = this.state.session;
    if (session === null) return;
    try {
      const fresh = await this.api.getSession(session.id);
      this.patch({ session: fresh, stale: false, lastError: null, pending: null });
    } catch (err) {
      this.patch({ lastError: describe(err) });
    }
  }

  // Read-only by contract: asking for a hint never changes the board.
  async requestHint(): Promise<HintResponse | null> {
    const session = this.state.session;
    if (session === null || this.state.pending !== null) return null;
    try {
      const hint = await this.api.hint(session.id);
      this.patch({ lastHint: hint, lastError: null });
      return hint;
    } catch (err) {
      this.patch({ lastError: describe(err) });
      return null;
    }
  }
}

function describe(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}
