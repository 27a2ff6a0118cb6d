"""Deterministic graph-family and seeded random-graph generation.

Every spec (family name, parameters, seed) maps to exactly one graph, and
random families draw from SplitMix64 so corpora reproduce bit-for-bit across
runs and implementations.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graphs import Graph


class GeneratorError(ValueError):
    """Invalid family name or parameters."""


class SplitMix64:
    """SplitMix64 pseudo-random generator over a 64-bit state.

    Each step adds the golden-ratio increment 0x9E3779B97F4A7C15 and applies
    the standard two xor-multiply finalizer rounds. Floats take the top 53
    bits; bounded ints reduce modulo the bound (documented, reproducible).
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound


FAMILIES = (
    "path",
    "cycle",
    "star",
    "complete",
    "grid",
    "balanced_tree",
    "subdivided_clique",
    "gnp",
    "random_tree",
)


@dataclass(frozen=True)
class FamilySpec:
    """One generator invocation: family name, parameters, optional seed."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def label(self) -> str:
        parts = [f"{k}={self.params[k]}" for k in sorted(self.params)]
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return f"{self.family}({','.join(parts)})"

    def to_json(self) -> str:
        payload: dict = {"family": self.family, "params": dict(self.params)}
        if self.seed is not None:
            payload["seed"] = self.seed
        return json.dumps(payload, separators=(",", ":"))


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a spec from JSON or from inline ``family=gnp,n=9,p=0.3,seed=7``."""
    text = text.strip()
    if text.startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GeneratorError(f"invalid JSON spec: {exc}") from None
        if not isinstance(payload, dict) or "family" not in payload:
            raise GeneratorError('JSON spec needs a "family" key')
        params = payload.get("params", {})
        if not isinstance(params, dict):
            raise GeneratorError('"params" must be an object')
        return FamilySpec(str(payload["family"]), dict(params), payload.get("seed"))
    family = None
    params: dict = {}
    seed = None
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise GeneratorError(f"expected key=value, got {item!r}")
        key, value = item.split("=", 1)
        key = key.strip()
        value = value.strip()
        if key == "family":
            family = value
        elif key == "seed":
            seed = int(value)
        else:
            try:
                params[key] = int(value)
            except ValueError:
                try:
                    params[key] = float(value)
                except ValueError:
                    raise GeneratorError(f"parameter {key}={value!r} is not numeric") from None
    if family is None:
        raise GeneratorError("spec must name a family, e.g. family=path,n=5")
    return FamilySpec(family, params, seed)


def _require_int(spec: FamilySpec, key: str, minimum: int) -> int:
    if key not in spec.params:
        raise GeneratorError(f"{spec.family} requires parameter {key!r}")
    value = spec.params[key]
    if not isinstance(value, int) or value < minimum:
        raise GeneratorError(f"{spec.family}: {key} must be an integer >= {minimum}")
    return value


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``; same spec, same graph."""
    fam = spec.family
    if fam == "path":
        n = _require_int(spec, "n", 0)
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if fam == "cycle":
        n = _require_int(spec, "n", 3)
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if fam == "star":
        leaves = _require_int(spec, "leaves", 0)
        return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
    if fam == "complete":
        n = _require_int(spec, "n", 0)
        return Graph(n, list(combinations(range(n), 2)))
    if fam == "grid":
        rows = _require_int(spec, "rows", 1)
        cols = _require_int(spec, "cols", 1)
        edges = []
        for i in range(rows):
            for j in range(cols):
                v = i * cols + j
                if j + 1 < cols:
                    edges.append((v, v + 1))
                if i + 1 < rows:
                    edges.append((v, v + cols))
        return Graph(rows * cols, edges)
    if fam == "balanced_tree":
        branching = _require_int(spec, "branching", 1)
        height = _require_int(spec, "height", 0)
        edges = []
        next_id = 1
        frontier = [0]
        for _ in range(height):
            new_frontier = []
            for parent in frontier:
                for _ in range(branching):
                    edges.append((parent, next_id))
                    new_frontier.append(next_id)
                    next_id += 1
            frontier = new_frontier
        return Graph(next_id, edges)
    if fam == "subdivided_clique":
        t = _require_int(spec, "t", 1)
        sub = _require_int(spec, "subdivision", 0)
        edges = []
        next_id = t
        for u, v in combinations(range(t), 2):
            chain = [u] + list(range(next_id, next_id + sub)) + [v]
            next_id += sub
            edges.extend((chain[i], chain[i + 1]) for i in range(len(chain) - 1))
        return Graph(next_id, edges)
    if fam == "gnp":
        n = _require_int(spec, "n", 0)
        p = spec.params.get("p")
        if not isinstance(p, (int, float)) or not 0.0 <= p <= 1.0:
            raise GeneratorError("gnp: p must be a probability in [0,1]")
        rng = SplitMix64(spec.seed or 0)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.next_float() < p]
        return Graph(n, edges)
    if fam == "random_tree":
        n = _require_int(spec, "n", 1)
        if n <= 2:
            return Graph(n, [(0, 1)] if n == 2 else [])
        rng = SplitMix64(spec.seed or 0)
        pruefer = [rng.next_below(n) for _ in range(n - 2)]
        return Graph(n, _tree_from_pruefer(pruefer))
    raise GeneratorError(f"unknown family {fam!r}; known: {', '.join(FAMILIES)}")


def _tree_from_pruefer(seq: list[int]) -> list[tuple[int, int]]:
    """Standard Pruefer decoding; n = len(seq) + 2 labeled vertices."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaf_heap: list[int] = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaf_heap)
    for x in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaf_heap, x)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((u, v))
    return edges


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Enumerate all 2^(n(n-1)/2) labeled graphs on n vertices.

    Bit i of the edge mask toggles the i-th pair in lexicographic order
    ((0,1),(0,2),...), and masks run from 0 upward, so the order is fixed.
    """
    if n > 6:
        raise GeneratorError("all_labeled_graphs is capped at n <= 6")
    if n < 0:
        raise GeneratorError("n must be >= 0")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Graph(n, edges)
