// Wire types mirroring the play service's JSON shapes.

export type Phase = "awaiting_connector" | "awaiting_splitter" | "finished";

export type Role = "connector" | "splitter";

export interface GraphJson {
  n: number;
  edges: [number, number][];
}

export interface HistoryEntry {
  c: number;
  s: number;
}

export interface GameState {
  round: number;
  arena: number[];
  phase: Phase;
  pending_connector: number | null;
  ball: number[] | null;
  history: HistoryEntry[];
  finished: boolean;
  winner_round: number | null;
  initial_rank: number;
}

export interface CreateResponse {
  game_id: string;
  state: GameState;
}

export interface MoveResponse {
  state: GameState;
  engine_reply: number | null;
}

export interface WhatIfResponse {
  resulting_rank: number;
  progressing: boolean;
}

export interface ApiErrorBody {
  error: string;
}
