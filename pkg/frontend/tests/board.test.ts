// Board behavior against a scripted fake server: rendering classes, the
// legality mirror, what-if badges, and error toasts.

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { PlayClient } from "../src/api";
import { Board } from "../src/board";
import type { GameState } from "../src/types";

const P3 = { n: 3, edges: [[0, 1], [1, 2]] as [number, number][] };

function state(partial: Partial<GameState>): GameState {
  return {
    round: 1,
    arena: [0, 1, 2],
    phase: "awaiting_connector",
    pending_connector: null,
    ball: null,
    history: [],
    finished: false,
    winner_round: null,
    initial_rank: 2,
    ...partial,
  };
}

type Handler = (url: string, init?: RequestInit) => { status: number; body: unknown };

function fakeFetch(handler: Handler): typeof fetch {
  return vi.fn(async (input: RequestInfo | URL, init?: RequestInit) => {
    const { status, body } = handler(String(input), init);
    return new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  }) as unknown as typeof fetch;
}

describe("board", () => {
  let container: HTMLElement;

  beforeEach(() => {
    container = document.createElement("div");
    document.body.appendChild(container);
  });

  afterEach(() => {
    container.remove();
    vi.restoreAllMocks();
    vi.unstubAllGlobals();
  });

  it("renders arena, ball highlight, dominated and removed vertices", async () => {
    const splitterState = state({
      phase: "awaiting_splitter",
      pending_connector: 0,
      ball: [0, 1],
    });
    vi.stubGlobal(
      "fetch",
      fakeFetch(() => ({ status: 201, body: { game_id: "g1", state: splitterState } })),
    );
    const board = new Board(container, new PlayClient(), P3, 1, "splitter");
    await board.start();

    expect(board.vertexClasses(0)).toContain("ball");
    expect(board.vertexClasses(0)).toContain("pending");
    expect(board.vertexClasses(1)).toContain("ball");
    expect(board.vertexClasses(2)).toContain("dominated");
    expect([...board.highlightedBall()].sort()).toEqual([0, 1]);

    board.applyState(state({ arena: [0, 2], round: 2, history: [{ c: 1, s: 1 }] }));
    expect(board.vertexClasses(1)).toContain("removed");
    expect(board.vertexClasses(0)).not.toContain("removed");
    // board = arena plus faded removed vertices, never fewer
    expect(board.removedSet()).toEqual(new Set([1]));
  });

  it("blocks illegal clicks client-side without calling the server", async () => {
    const moves: string[] = [];
    vi.stubGlobal(
      "fetch",
      fakeFetch((url) => {
        moves.push(url);
        return { status: 201, body: { game_id: "g1", state: state({}) } };
      }),
    );
    const board = new Board(container, new PlayClient(), P3, 1, "connector");
    await board.start();
    const before = moves.length;

    board.applyState(state({ arena: [0, 2] }));
    await board.clickVertex(1); // not in the arena
    expect(moves.length).toBe(before);

    board.applyState(state({ phase: "awaiting_splitter", pending_connector: 0, ball: [0, 1] }));
    await board.clickVertex(0); // engine's seat for a connector human
    expect(moves.length).toBe(before);
  });

  it("plays a legal move and flashes the engine reply", async () => {
    const after = state({
      round: 2,
      arena: [0, 2],
      history: [{ c: 1, s: 1 }],
    });
    vi.stubGlobal(
      "fetch",
      fakeFetch((url) => {
        if (url.endsWith("/move")) return { status: 200, body: { state: after, engine_reply: 1 } };
        return { status: 201, body: { game_id: "g1", state: state({}) } };
      }),
    );
    const board = new Board(container, new PlayClient(), P3, 1, "connector");
    await board.start();
    await board.clickVertex(1);
    expect(board.state.round).toBe(2);
    expect(board.vertexClasses(1)).toContain("removed");
    expect(board.statusText()).toContain("round 2");
  });

  it("shows the what-if badge with a progressing marker", async () => {
    vi.stubGlobal(
      "fetch",
      fakeFetch((url) => {
        if (url.includes("/whatif")) {
          const vertex = Number(new URL(url, "http://x").searchParams.get("vertex"));
          return {
            status: 200,
            body: { resulting_rank: vertex === 1 ? 1 : 2, progressing: vertex === 1 },
          };
        }
        return {
          status: 201,
          body: {
            game_id: "g1",
            state: state({ phase: "awaiting_splitter", pending_connector: 1, ball: [0, 1, 2] }),
          },
        };
      }),
    );
    const board = new Board(container, new PlayClient(), P3, 1, "splitter");
    await board.start();

    const hint = await board.hoverVertex(1);
    expect(hint).toEqual({ resulting_rank: 1, progressing: true });
    expect(board.badgeState()).toMatchObject({ progressing: true, hidden: false });
    expect(board.badgeState().text).toContain("progressing");

    await board.hoverVertex(0);
    expect(board.badgeState().progressing).toBe(false);
    expect(board.badgeState().text).toBe("rank 2");

    board.leaveVertex();
    expect(board.badgeState().hidden).toBe(true);
  });

  it("renders n/a when analysis is disabled", async () => {
    vi.stubGlobal(
      "fetch",
      fakeFetch((url) => {
        if (url.includes("/whatif")) return { status: 409, body: { error: "analysis_disabled" } };
        return {
          status: 201,
          body: {
            game_id: "g1",
            state: state({ phase: "awaiting_splitter", pending_connector: 0, ball: [0, 1] }),
          },
        };
      }),
    );
    const board = new Board(container, new PlayClient(), P3, 1, "splitter");
    await board.start();
    const hint = await board.hoverVertex(0);
    expect(hint).toBeNull();
    expect(board.badgeState().text).toBe("n/a");
  });

  it("surfaces server rejections as a toast and keeps the board unchanged", async () => {
    vi.stubGlobal(
      "fetch",
      fakeFetch((url) => {
        if (url.endsWith("/move")) return { status: 400, body: { error: "illegal_move" } };
        return { status: 201, body: { game_id: "g1", state: state({}) } };
      }),
    );
    const board = new Board(container, new PlayClient(), P3, 1, "connector");
    await board.start();
    const before = board.state;
    await board.clickVertex(0);
    expect(board.state).toEqual(before);
    expect(container.querySelector(".banner")!.textContent).toContain("illegal_move");
  });

  it("shows the victory panel when the game finishes", async () => {
    const finished = state({
      round: 1,
      arena: [],
      phase: "finished",
      history: [{ c: 0, s: 0 }],
      finished: true,
      winner_round: 1,
      initial_rank: 1,
    });
    vi.stubGlobal(
      "fetch",
      fakeFetch((url) => {
        if (url.endsWith("/move")) return { status: 200, body: { state: finished, engine_reply: null } };
        return {
          status: 201,
          body: { game_id: "g1", state: state({ arena: [0], initial_rank: 1 }) },
        };
      }),
    );
    const board = new Board(container, new PlayClient(), { n: 1, edges: [] }, 1, "connector");
    await board.start();
    await board.clickVertex(0);
    expect(board.statusText()).toContain("splitter wins after round 1");
  });
});
