// Deterministic force-directed layout, computed once per game and frozen so
// vertex positions stay put while the arena shrinks.

import type { GraphJson } from "./types";
import { adjacency } from "./graphs";

export interface Point {
  x: number;
  y: number;
}

/** mulberry32: tiny seeded PRNG, good enough for layout jitter. */
export function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function computeLayout(
  graph: GraphJson,
  width: number,
  height: number,
  seed = 1,
): Point[] {
  const n = graph.n;
  if (n === 0) return [];
  const rand = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const spread = Math.min(width, height) / 2 - 40;

  // Start on a circle with a little jitter so symmetric graphs still relax.
  const pos: Point[] = Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n;
    return {
      x: cx + spread * 0.8 * Math.cos(angle) + (rand() - 0.5) * 10,
      y: cy + spread * 0.8 * Math.sin(angle) + (rand() - 0.5) * 10,
    };
  });
  if (n === 1) return [{ x: cx, y: cy }];

  const adj = adjacency(graph);
  const ideal = spread / Math.sqrt(n);
  for (let iter = 0; iter < 250; iter++) {
    const cooling = 1 - iter / 250;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let u = 0; u < n; u++) {
      for (let v = u + 1; v < n; v++) {
        let dx = pos[u].x - pos[v].x;
        let dy = pos[u].y - pos[v].y;
        let dist = Math.hypot(dx, dy);
        if (dist < 1e-3) {
          dx = 1e-3 * (u - v);
          dy = 1e-3;
          dist = Math.hypot(dx, dy);
        }
        const repulse = (ideal * ideal) / dist;
        fx[u] += (dx / dist) * repulse;
        fy[u] += (dy / dist) * repulse;
        fx[v] -= (dx / dist) * repulse;
        fy[v] -= (dy / dist) * repulse;
      }
    }
    for (let u = 0; u < n; u++) {
      for (const v of adj[u]) {
        if (v <= u) continue;
        const dx = pos[u].x - pos[v].x;
        const dy = pos[u].y - pos[v].y;
        const dist = Math.max(Math.hypot(dx, dy), 1e-3);
        const attract = (dist * dist) / ideal / 8;
        fx[u] -= (dx / dist) * attract;
        fy[u] -= (dy / dist) * attract;
        fx[v] += (dx / dist) * attract;
        fy[v] += (dy / dist) * attract;
      }
    }
    for (let u = 0; u < n; u++) {
      const scale = Math.min(1, (8 * cooling) / Math.max(Math.hypot(fx[u], fy[u]), 1e-9));
      pos[u].x += fx[u] * scale;
      pos[u].y += fy[u] * scale;
      pos[u].x = Math.min(width - 30, Math.max(30, pos[u].x));
      pos[u].y = Math.min(height - 30, Math.max(30, pos[u].y));
    }
  }
  return pos;
}
