// Built-in graph choices and the client-side mirror of game legality:
// adjacency, balls, and dominated-move detection, so the UI never offers a
// move the server would reject.

import type { GraphJson } from "./types";

export interface GraphChoice {
  id: string;
  label: string;
  graph: GraphJson;
}

function path(n: number): GraphJson {
  const edges: [number, number][] = [];
  for (let i = 0; i + 1 < n; i++) edges.push([i, i + 1]);
  return { n, edges };
}

function cycle(n: number): GraphJson {
  const edges: [number, number][] = [];
  for (let i = 0; i < n; i++) edges.push([i, (i + 1) % n]);
  return { n, edges };
}

function complete(n: number): GraphJson {
  const edges: [number, number][] = [];
  for (let u = 0; u < n; u++) for (let v = u + 1; v < n; v++) edges.push([u, v]);
  return { n, edges };
}

function star(leaves: number): GraphJson {
  const edges: [number, number][] = [];
  for (let i = 1; i <= leaves; i++) edges.push([0, i]);
  return { n: leaves + 1, edges };
}

function grid(rows: number, cols: number): GraphJson {
  const edges: [number, number][] = [];
  for (let i = 0; i < rows; i++) {
    for (let j = 0; j < cols; j++) {
      const v = i * cols + j;
      if (j + 1 < cols) edges.push([v, v + 1]);
      if (i + 1 < rows) edges.push([v, v + cols]);
    }
  }
  return { n: rows * cols, edges };
}

export const GRAPH_CHOICES: GraphChoice[] = [
  { id: "k1", label: "single vertex K1", graph: complete(1) },
  { id: "p5", label: "path P5", graph: path(5) },
  { id: "c6", label: "cycle C6", graph: cycle(6) },
  { id: "k4", label: "complete K4", graph: complete(4) },
  { id: "star6", label: "star, 6 leaves", graph: star(6) },
  { id: "grid33", label: "3x3 grid", graph: grid(3, 3) },
];

export function adjacency(graph: GraphJson): number[][] {
  const adj: number[][] = Array.from({ length: graph.n }, () => []);
  for (const [u, v] of graph.edges) {
    adj[u].push(v);
    adj[v].push(u);
  }
  return adj;
}

/** Closed radius-r ball around v inside the given arena subset. */
export function ballWithin(
  graph: GraphJson,
  arena: Set<number>,
  v: number,
  radius: number,
): Set<number> {
  const adj = adjacency(graph);
  const seen = new Set<number>([v]);
  let frontier = [v];
  for (let step = 0; step < radius && frontier.length > 0; step++) {
    const next: number[] = [];
    for (const x of frontier) {
      for (const y of adj[x]) {
        if (arena.has(y) && !seen.has(y)) {
          seen.add(y);
          next.push(y);
        }
      }
    }
    frontier = next;
  }
  return seen;
}
