"""Simple undirected graphs and induced-subgraph arenas.

Vertices are integer ids ``0..n-1``. An :class:`Arena` is a vertex subset of
a shared, immutable root :class:`Graph`, stored as an arbitrary-width bit
mask. The game recursion creates very many arenas over one root, so member
masks double as cheap, canonical memo keys. Both classes are immutable
after construction and safe to share across workers.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Sequence


class GraphError(Exception):
    """Invalid graph data, or an operation on a vertex outside the arena."""


class EdgeListError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bit mask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def ball_mask(adj: Sequence[int], members: int, v: int, radius: int) -> int:
    """Closed radius-``radius`` neighborhood of ``v`` inside ``members``.

    ``adj[u]`` is the neighbor mask of ``u`` in the root graph. Breadth-first
    over masks; the result always contains ``v`` and never leaves ``members``.
    """
    seen = 1 << v
    frontier = seen
    for _ in range(radius):
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= adj[low.bit_length() - 1]
            m ^= low
        frontier = reach & members & ~seen
        if not frontier:
            break
        seen |= frontier
    return seen


class Graph:
    """Finite simple undirected graph on vertex ids ``0..n-1``.

    Adjacency is stored as one neighbor bit mask per vertex. Construction
    rejects self-loops and out-of-range endpoints; duplicate edges collapse
    silently (strictness belongs to the parsers).
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def neighbor_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for off in bits(rest):
                out.append((u, u + 1 + off))
        return out

    def edge_count(self) -> int:
        return sum(d.bit_count() for d in self._adj) // 2

    def full_arena(self) -> Arena:
        return Arena(self, (1 << self.n) - 1)

    def arena(self, vertices: Iterable[int]) -> Arena:
        return Arena(self, mask_of(vertices))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class Arena:
    """A vertex subset of a root graph, viewed as the induced subgraph.

    Every game position is an arena; an arena with no members is the empty
    graph (the game-over state).
    """

    __slots__ = ("root", "members")

    def __init__(self, root: Graph, members: int):
        if members < 0 or members >> root.n:
            raise GraphError("member mask has bits outside the root vertex range")
        self.root = root
        self.members = members

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v and bool(self.members >> v & 1)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Arena)
            and self.root == other.root
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((id(self.root), self.members))

    def __repr__(self) -> str:
        return f"Arena({sorted(self.vertices())})"

    @property
    def is_empty(self) -> bool:
        return self.members == 0

    def vertices(self) -> list[int]:
        return list(bits(self.members))

    def _require(self, v: int) -> None:
        if v not in self:
            raise GraphError(f"vertex {v} is not in the arena")

    def neighbor_mask(self, v: int) -> int:
        """Neighbors of ``v`` inside the arena, as a mask."""
        self._require(v)
        return self.root._adj[v] & self.members

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in bits(self.members):
            rest = (self.root._adj[u] & self.members) >> (u + 1)
            for off in bits(rest):
                out.append((u, u + 1 + off))
        return out

    def ball(self, v: int, radius: int) -> int:
        """Member mask of the closed radius-``radius`` neighborhood of ``v``."""
        self._require(v)
        return ball_mask(self.root._adj, self.members, v, radius)

    def delete(self, v: int) -> Arena:
        """Arena with ``v`` removed; the root graph is untouched."""
        self._require(v)
        return Arena(self.root, self.members & ~(1 << v))

    def subset(self, members: int) -> Arena:
        if members & ~self.members:
            raise GraphError("subset mask leaves the arena")
        return Arena(self.root, members)

    def components(self) -> list[int]:
        """Connected-component masks, ordered by smallest member id."""
        out = []
        rest = self.members
        adj = self.root._adj
        while rest:
            low = rest & -rest
            seen = low
            frontier = low
            while frontier:
                reach = 0
                m = frontier
                while m:
                    b = m & -m
                    reach |= adj[b.bit_length() - 1]
                    m ^= b
                frontier = reach & rest & ~seen
                seen |= frontier
            out.append(seen)
            rest &= ~seen
        return out

    def eccentricity(self, v: int) -> int | None:
        """Max distance from ``v`` to any member, or None if one is unreachable."""
        self._require(v)
        adj = self.root._adj
        seen = 1 << v
        frontier = seen
        dist = 0
        while True:
            reach = 0
            m = frontier
            while m:
                b = m & -m
                reach |= adj[b.bit_length() - 1]
                m ^= b
            frontier = reach & self.members & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        return dist if seen == self.members else None

    def shortest_path(self, u: int, v: int) -> tuple[int, ...]:
        """A shortest u-v path inside the arena, as a vertex tuple.

        Deterministic: each newly discovered vertex takes the smallest-id
        parent in the previous layer, so ties always break toward smaller ids.
        """
        self._require(u)
        self._require(v)
        if u == v:
            return (u,)
        adj = self.root._adj
        parent: dict[int, int] = {u: -1}
        seen = 1 << u
        frontier = seen
        while frontier and not (seen >> v & 1):
            reach = 0
            m = frontier
            while m:
                b = m & -m
                reach |= adj[b.bit_length() - 1]
                m ^= b
            nxt = reach & self.members & ~seen
            for x in bits(nxt):
                first = adj[x] & frontier
                parent[x] = (first & -first).bit_length() - 1
            seen |= nxt
            frontier = nxt
        if not (seen >> v & 1):
            raise GraphError(f"vertex {v} is unreachable from {u} in the arena")
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return tuple(path)


def parse_edge_list(text: str, *, allow_duplicate_edges: bool = False) -> Graph:
    """Parse the plain edge-list format.

    Lines starting with ``#`` are comments and blank lines are skipped. The
    first data line is ``n m``, followed by exactly ``m`` lines ``u v`` with
    ``0 <= u,v < n`` and ``u != v``. Duplicate edges are an error unless
    ``allow_duplicate_edges`` is set.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    edge_lines = 0
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise EdgeListError("header must be 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise EdgeListError("header must contain two integers", lineno) from None
            if n < 0 or m < 0:
                raise EdgeListError("header counts must be non-negative", lineno)
            header = (n, m)
            continue
        if len(parts) != 2:
            raise EdgeListError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError("edge endpoints must be integers", lineno) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"endpoint outside 0..{n - 1}", lineno)
        if u == v:
            raise EdgeListError(f"self-loop at vertex {u}", lineno)
        if edge_lines >= header[1]:
            raise EdgeListError("more edges than declared in the header", lineno)
        edge_lines += 1
        key = (min(u, v), max(u, v))
        if key in seen:
            if not allow_duplicate_edges:
                raise EdgeListError(f"duplicate edge ({u},{v})", lineno)
            continue
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListError("missing 'n m' header", max(last_line, 1))
    if edge_lines != header[1]:
        raise EdgeListError(
            f"expected {header[1]} edges, found {edge_lines}", max(last_line, 1)
        )
    return Graph(header[0], edges)


def graph_to_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format, edges in lexicographic order."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    """Serialize as ``{"n": ..., "edges": [[u,v], ...]}`` (sorted, compact)."""
    payload = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    return json.dumps(payload, separators=(",", ":"))


def graph_from_json(text: str, *, allow_duplicate_edges: bool = False) -> Graph:
    """Inverse of :func:`graph_to_json`; round-trips exactly.

    Rejects schema violations, self-loops, out-of-range endpoints, and
    duplicate edges (``[0,1]`` and ``[1,0]`` count as the same edge) unless
    ``allow_duplicate_edges`` is set.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return graph_from_obj(payload, allow_duplicate_edges=allow_duplicate_edges)


def graph_from_obj(payload: object, *, allow_duplicate_edges: bool = False) -> Graph:
    """Build a Graph from an already-decoded ``{"n", "edges"}`` object."""
    if not isinstance(payload, dict) or set(payload) != {"n", "edges"}:
        raise GraphError('graph object must have exactly the keys "n" and "edges"')
    n = payload["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphError('"n" must be a non-negative integer')
    raw_edges = payload["edges"]
    if not isinstance(raw_edges, list):
        raise GraphError('"edges" must be a list of [u,v] pairs')
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for e in raw_edges:
        if (
            not isinstance(e, (list, tuple))
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphError(f"edge {e!r} is not an [u,v] integer pair")
        u, v = e
        key = (min(u, v), max(u, v))
        if key in seen:
            if not allow_duplicate_edges:
                raise GraphError(f"duplicate edge ({u},{v})")
            continue
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)
