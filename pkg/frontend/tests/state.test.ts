import { describe, expect, it } from "vitest";

import {
  ApiError,
  NetworkError,
  type DivisorJson,
  type GraphJson,
  type HintResponse,
  type MoveKind,
  type SessionApi,
  type SessionState,
} from "../src/api.js";
import {
  applyMoveLocally,
  BoardStore,
  coeff,
  edgeMultiplicity,
  unwinnableBanner,
  vertexDegree,
} from "../src/state.js";

const triangle: GraphJson = {
  vertices: ["a", "b", "c"],
  edges: [
    ["a", "b"],
    ["b", "c"],
    ["a", "c"],
  ],
};

const banana2: GraphJson = {
  vertices: ["p", "q"],
  edges: [
    ["p", "q"],
    ["p", "q"],
  ],
};

function session(partial: Partial<SessionState> = {}): SessionState {
  return {
    id: "s1",
    graph: triangle,
    config: { a: -1, b: 2, c: -1 },
    log: [],
    total: 0,
    won: false,
    genus: 1,
    ...partial,
  };
}

// Scripted stand-in for the HTTP client. Each call shifts the next
// canned response; the store never sees a real socket in these tests.
class FakeApi implements SessionApi {
  created: SessionState | null = null;
  moveResults: (SessionState | Error)[] = [];
  moveCalls: [string, string, MoveKind][] = [];
  hintCalls = 0;
  getResult: SessionState | null = null;

  async createSession(): Promise<SessionState> {
    if (!this.created) throw new Error("no canned session");
    return structuredClone(this.created);
  }

  async getSession(): Promise<SessionState> {
    if (!this.getResult) throw new Error("no canned get");
    return structuredClone(this.getResult);
  }

  async move(id: string, vertex: string, kind: MoveKind): Promise<SessionState> {
    this.moveCalls.push([id, vertex, kind]);
    const next = this.moveResults.shift();
    if (!next) throw new Error("no canned move result");
    if (next instanceof Error) throw next;
    return structuredClone(next);
  }

  async hint(): Promise<HintResponse> {
    this.hintCalls += 1;
    return { winnable: false, suggested_move: null, rank: -1 };
  }
}

describe("sparse divisor helpers", () => {
  it("reads missing vertices as zero", () => {
    expect(coeff({ a: 3 }, "a")).toBe(3);
    expect(coeff({ a: 3 }, "b")).toBe(0);
  });

  it("counts parallel edges and degrees", () => {
    expect(edgeMultiplicity(banana2, "p", "q")).toBe(2);
    expect(edgeMultiplicity(banana2, "q", "p")).toBe(2);
    expect(edgeMultiplicity(triangle, "a", "b")).toBe(1);
    expect(vertexDegree(banana2, "p")).toBe(2);
    expect(vertexDegree(triangle, "b")).toBe(2);
  });
});

describe("applyMoveLocally", () => {
  it("borrow pulls one dollar per edge", () => {
    const next = applyMoveLocally(triangle, { a: -1, b: 2, c: -1 }, ["a", "borrow"]);
    expect(next).toEqual({ a: 1, b: 1, c: -2 });
  });

  it("lend is the mirror image and respects multiplicity", () => {
    const next = applyMoveLocally(banana2, { p: 2 }, ["p", "lend"]);
    expect(next).toEqual({ q: 2 });
  });

  it("drops zeros so results compare against server payloads", () => {
    const next = applyMoveLocally(triangle, { a: -2, b: 1, c: 1 }, ["a", "borrow"]);
    expect(next).toEqual({});
    expect(Object.keys(next)).toHaveLength(0);
  });

  it("does not touch the input", () => {
    const before: DivisorJson = { a: -1, b: 2, c: -1 };
    applyMoveLocally(triangle, before, ["b", "lend"]);
    expect(before).toEqual({ a: -1, b: 2, c: -1 });
  });
});

describe("BoardStore", () => {
  it("stores the server session verbatim on newGame", async () => {
    const api = new FakeApi();
    api.created = session();
    const store = new BoardStore(api);
    await store.newGame(triangle, { a: -1, b: 2, c: -1 });
    expect(store.current.session).toEqual(session());
    expect(store.current.loading).toBe(false);
  });

  it("shows the optimistic preview while a move is in flight", async () => {
    const api = new FakeApi();
    api.created = session();
    const store = new BoardStore(api);
    await store.newGame(triangle, {});

    let release!: (s: SessionState) => void;
    const gate = new Promise<SessionState>((resolve) => {
      release = resolve;
    });
    api.move = async () => gate;

    const acknowledged = session({
      config: { a: 1, b: 1, c: -2 },
      log: [["a", "borrow"]],
    });
    const inFlight = store.playMove("a", "borrow");

    expect(store.current.pending).toEqual(["a", "borrow"]);
    expect(store.current.session?.config).toEqual({ a: 1, b: 1, c: -2 });
    expect(store.current.session?.log).toEqual([["a", "borrow"]]);

    release(acknowledged);
    await inFlight;
    expect(store.current.pending).toBeNull();
    expect(store.current.session).toEqual(acknowledged);
  });

  it("reverts to the acknowledged state when the server rejects", async () => {
    const api = new FakeApi();
    api.created = session();
    api.moveResults = [new ApiError(400, "unknown vertex: 'z'")];
    const store = new BoardStore(api);
    await store.newGame(triangle, {});

    await store.playMove("a", "borrow");
    expect(store.current.session).toEqual(session());
    expect(store.current.pending).toBeNull();
    expect(store.current.stale).toBe(false);
    expect(store.current.lastError).toContain("unknown vertex");
  });

  it("marks the board stale on network failure and resyncs from GET", async () => {
    const api = new FakeApi();
    api.created = session();
    api.moveResults = [new NetworkError("connection refused")];
    const store = new BoardStore(api);
    await store.newGame(triangle, {});

    await store.playMove("a", "borrow");
    expect(store.current.stale).toBe(true);
    expect(store.current.session).toEqual(session());

    // while stale, further moves are refused outright
    await store.playMove("b", "lend");
    expect(api.moveCalls.filter(([, v]) => v === "b")).toHaveLength(0);

    api.getResult = session({ config: { a: 1, b: 1, c: -2 }, log: [["a", "borrow"]] });
    await store.resync();
    expect(store.current.stale).toBe(false);
    expect(store.current.session).toEqual(api.getResult);
  });

  it("drops a click that lands while another move is pending", async () => {
    const api = new FakeApi();
    api.created = session();
    const store = new BoardStore(api);
    await store.newGame(triangle, {});

    let release!: (s: SessionState) => void;
    api.move = async (id, vertex, kind) => {
      api.moveCalls.push([id, vertex, kind]);
      return new Promise<SessionState>((resolve) => {
        release = resolve;
      });
    };

    const first = store.playMove("a", "borrow");
    await store.playMove("b", "lend");
    expect(api.moveCalls).toHaveLength(1);

    release(session({ log: [["a", "borrow"]] }));
    await first;
    expect(store.current.session?.log).toEqual([["a", "borrow"]]);
  });

  it("hint never mutates the board", async () => {
    const api = new FakeApi();
    api.created = session();
    const store = new BoardStore(api);
    await store.newGame(triangle, {});

    const before = JSON.stringify(store.current.session);
    const hint = await store.requestHint();
    expect(hint).toEqual({ winnable: false, suggested_move: null, rank: -1 });
    expect(JSON.stringify(store.current.session)).toBe(before);
    expect(store.current.lastHint?.winnable).toBe(false);
    expect(api.hintCalls).toBe(1);
  });

  it("a fresh move clears the previous hint", async () => {
    const api = new FakeApi();
    api.created = session();
    api.moveResults = [session({ log: [["a", "borrow"]] })];
    const store = new BoardStore(api);
    await store.newGame(triangle, {});
    await store.requestHint();
    expect(store.current.lastHint).not.toBeNull();
    await store.playMove("a", "borrow");
    expect(store.current.lastHint).toBeNull();
  });
});

describe("unwinnableBanner", () => {
  it("matches the agreed wording", () => {
    expect(unwinnableBanner()).toBe(
      "no winning strategy exists (N ≤ g−1 case possible)",
    );
  });
});
