// Thin typed client for the play service; one in-flight request at a time
// is the caller's responsibility (the board disables input while waiting).

import type {
  CreateResponse,
  GameState,
  GraphJson,
  MoveResponse,
  Role,
  WhatIfResponse,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
  ) {
    super(`${status}: ${code}`);
  }
}

async function decodeError(resp: Response): Promise<never> {
  let code = "unknown";
  try {
    const body = (await resp.json()) as { error?: string };
    if (body.error) code = body.error;
  } catch {
    // non-JSON error body; keep the generic code
  }
  throw new ApiError(resp.status, code);
}

export class PlayClient {
  constructor(readonly baseUrl: string = "") {}

  async createGame(
    graph: GraphJson,
    radius: number,
    humanRole: Role,
    analysis = true,
  ): Promise<CreateResponse> {
    const resp = await fetch(`${this.baseUrl}/api/games`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        graph,
        radius,
        human_role: humanRole,
        analysis,
      }),
    });
    if (resp.status !== 201) return decodeError(resp);
    return (await resp.json()) as CreateResponse;
  }

  async getState(gameId: string): Promise<GameState> {
    const resp = await fetch(`${this.baseUrl}/api/games/${gameId}`);
    if (!resp.ok) return decodeError(resp);
    const body = (await resp.json()) as { state: GameState };
    return body.state;
  }

  async move(gameId: string, vertex: number): Promise<MoveResponse> {
    const resp = await fetch(`${this.baseUrl}/api/games/${gameId}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
    if (!resp.ok) return decodeError(resp);
    return (await resp.json()) as MoveResponse;
  }

  async whatIf(gameId: string, vertex: number): Promise<WhatIfResponse> {
    const resp = await fetch(
      `${this.baseUrl}/api/games/${gameId}/whatif?vertex=${vertex}`,
    );
    if (!resp.ok) return decodeError(resp);
    return (await resp.json()) as WhatIfResponse;
  }

  async deleteGame(gameId: string): Promise<void> {
    const resp = await fetch(`${this.baseUrl}/api/games/${gameId}`, {
      method: "DELETE",
    });
    if (resp.status !== 204) return decodeError(resp);
  }
}
