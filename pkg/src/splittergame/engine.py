"""Exact splitter-rank computation with memoized search, plus a naive oracle.

The splitter game on arena G: each round the connector picks a vertex c, the
arena shrinks to the closed radius-r ball around c, and the splitter deletes
one vertex. The splitter wins when the arena is empty. The rank of G is the
least number of rounds the splitter can force, i.e. the value of

    rank(empty) = 0
    rank(G)     = 1 + max over c of min over s of rank(ball(c) minus s)

where the splitter's minimum may be taken over ball(c) only: deleting a
vertex outside the ball leaves the ball intact, and by monotonicity that is
never better than the best in-ball deletion.

:class:`RankEngine` evaluates the recursion over member bit masks with a
shared memo per root graph. The optional reductions (sandwich early exit,
dominance pruning, component decomposition) never change results; the suite
checks every flag combination against :func:`naive_rank`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Arena, Graph, ball_mask, bits


class EngineLimitError(Exception):
    """The arena is larger than the configured vertex limit allows."""


@dataclass(frozen=True)
class ConnectorAnalysis:
    """Game value of one connector move and the splitter's best answers.

    ``value`` is the rank the splitter can force after this connector move;
    ``argmin_replies`` are all splitter deletions attaining it; the
    ``progressing`` set equals the argmin set exactly when the value drops
    below the ball's own rank, and is empty otherwise.
    """

    value: int
    argmin_replies: tuple[int, ...]
    progressing: tuple[int, ...]


@dataclass(frozen=True)
class RankAnalysis:
    """Rank of an arena together with the full per-connector breakdown."""

    rank: int
    per_connector: dict[int, ConnectorAnalysis]
    optimal_connectors: tuple[int, ...]


@dataclass(frozen=True)
class EngineConfig:
    """Search settings; every flag preserves exact results.

    ``memo_capacity_hint`` is advisory only (dict-backed memos need no
    preallocation). ``dominance_pruning`` skips connector moves whose ball is
    strictly contained in another move's ball; it is off by default because
    plain memoization already carries desk-scale workloads.
    """

    radius: int
    dominance_pruning: bool = False
    sandwich_exit: bool = True
    component_split: bool = True
    memo_capacity_hint: int | None = None
    vertex_limit: int = 64

    def __post_init__(self) -> None:
        if self.radius < 1:
            raise ValueError("radius must be >= 1")
        if self.vertex_limit < 1:
            raise ValueError("vertex_limit must be >= 1")


class RankEngine:
    """Memoized exact solver bound to one root graph and one config.

    The memo key is the member bit mask (radius is fixed per engine), so all
    public operations share work: rank queries, per-connector values, witness
    extraction, and game play all hit the same table.
    """

    def __init__(self, graph: Graph, config: EngineConfig):
        self.graph = graph
        self.config = config
        self._adj = graph.adjacency_masks
        self._rank_memo: dict[int, int] = {0: 0}
        self._value_memo: dict[int, int] = {}

    # -- public operations --------------------------------------------------

    def rank(self, arena: Arena | None = None) -> int:
        """Exact splitter rank of the arena (default: the full root graph)."""
        members = self._members_of(arena)
        self._check_limit(members)
        return self._rank(members)

    def rank_of_mask(self, members: int) -> int:
        """Rank of an explicit member mask; same memo as :meth:`rank`."""
        self._check_limit(members)
        return self._rank(members)

    def connector_value(self, arena: Arena, c: int) -> tuple[int, tuple[int, ...]]:
        """Value of connector move ``c`` and every argmin splitter reply.

        The value is min over s in ball(c) of rank(ball minus s); replies are
        scanned fully (no early exit) so the argmin set is complete.
        """
        members = self._members_of(arena)
        self._check_limit(members)
        self._require_member(members, c)
        ball = ball_mask(self._adj, members, c, self.config.radius)
        best = None
        argmin: list[int] = []
        for s in bits(ball):
            v = self._rank(ball & ~(1 << s))
            if best is None or v < best:
                best = v
                argmin = [s]
            elif v == best:
                argmin.append(s)
        assert best is not None
        return best, tuple(argmin)

    def progressing_moves(self, arena: Arena, c: int) -> tuple[int, ...]:
        """All splitter replies to ``c`` that strictly lower the ball's rank.

        The ball is taken closed (it contains ``c``). Deleting a vertex
        outside the ball leaves the ball intact, so such moves are never
        progressing and are never returned.
        """
        members = self._members_of(arena)
        self._check_limit(members)
        self._require_member(members, c)
        ball = ball_mask(self._adj, members, c, self.config.radius)
        ball_rank = self._rank(ball)
        value, argmin = self.connector_value(arena, c)
        return argmin if value < ball_rank else ()

    def analyze(self, arena: Arena | None = None) -> RankAnalysis:
        """Full per-connector breakdown of a nonempty arena."""
        members = self._members_of(arena)
        if members == 0:
            raise ValueError("analyze requires a nonempty arena")
        self._check_limit(members)
        work = Arena(self.graph, members)
        per: dict[int, ConnectorAnalysis] = {}
        best = -1
        for c in bits(members):
            ball = ball_mask(self._adj, members, c, self.config.radius)
            value, argmin = self.connector_value(work, c)
            progressing = argmin if value < self._rank(ball) else ()
            per[c] = ConnectorAnalysis(value, argmin, progressing)
            best = max(best, value)
        optimal = tuple(c for c, a in per.items() if a.value == best)
        return RankAnalysis(rank=1 + best, per_connector=per, optimal_connectors=optimal)

    # -- recursion ----------------------------------------------------------

    def _members_of(self, arena: Arena | None) -> int:
        if arena is None:
            return (1 << self.graph.n) - 1
        if arena.root is not self.graph and arena.root != self.graph:
            raise ValueError("arena belongs to a different root graph")
        return arena.members

    def _check_limit(self, members: int) -> None:
        count = members.bit_count()
        if count > self.config.vertex_limit:
            raise EngineLimitError(
                f"arena has {count} vertices, limit is {self.config.vertex_limit}"
            )

    def _require_member(self, members: int, v: int) -> None:
        if v < 0 or not members >> v & 1:
            raise ValueError(f"vertex {v} is not in the arena")

    def _rank(self, members: int) -> int:
        memo = self._rank_memo
        cached = memo.get(members)
        if cached is not None:
            return cached
        if self.config.component_split:
            comps = self._components(members)
            if len(comps) > 1:
                value = max(self._rank(comp) for comp in comps)
                memo[members] = value
                return value
        adj = self._adj
        radius = self.config.radius
        ball_list: list[int] = []
        seen_balls: set[int] = set()
        for c in bits(members):
            ball = ball_mask(adj, members, c, radius)
            if ball not in seen_balls:
                seen_balls.add(ball)
                ball_list.append(ball)
        if self.config.dominance_pruning and len(ball_list) > 1:
            ball_list = [
                b
                for b in ball_list
                if not any(b != other and b | other == other for other in ball_list)
            ]
        best = 0
        for ball in ball_list:
            v = self._ball_value(ball)
            if v > best:
                best = v
        value = 1 + best
        memo[members] = value
        return value

    def _ball_value(self, ball: int) -> int:
        """min over s in ball of rank(ball minus s), cached by ball mask.

        Every single-vertex deletion changes the rank by 0 or 1, so at most
        two distinct values occur; with the sandwich exit enabled the scan
        stops as soon as both have been seen.
        """
        cached = self._value_memo.get(ball)
        if cached is not None:
            return cached
        best = None
        for s in bits(ball):
            v = self._rank(ball & ~(1 << s))
            if best is None:
                best = v
            elif v != best:
                if v < best:
                    best = v
                if self.config.sandwich_exit:
                    break
        assert best is not None
        self._value_memo[ball] = best
        return best

    def _components(self, members: int) -> list[int]:
        adj = self._adj
        out = []
        rest = members
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


# -- module-level conveniences ----------------------------------------------


def splitter_rank(arena: Arena, config: EngineConfig) -> int:
    """One-shot rank of an arena; builds a throwaway engine.

    Hold a :class:`RankEngine` instead when making repeated queries against
    the same root graph, so the memo is shared.
    """
    return RankEngine(arena.root, config).rank(arena)


def connector_value(arena: Arena, c: int, config: EngineConfig) -> tuple[int, tuple[int, ...]]:
    return RankEngine(arena.root, config).connector_value(arena, c)


def progressing_moves(arena: Arena, c: int, config: EngineConfig) -> tuple[int, ...]:
    return RankEngine(arena.root, config).progressing_moves(arena, c)


def analyze(arena: Arena, config: EngineConfig) -> RankAnalysis:
    return RankEngine(arena.root, config).analyze(arena)


NAIVE_LIMIT = 12


def naive_rank(arena: Arena, radius: int) -> int:
    """Independent oracle: evaluate the defining recursion directly.

    Works over explicit vertex sets (never the engine's bit masks), takes
    the splitter's minimum over every arena vertex rather than just the
    ball, and applies none of the engine's reductions. Repeated sub-arenas
    within one call are cached so the oracle stays usable up to the
    ``NAIVE_LIMIT`` guard of 12 vertices.
    """
    if len(arena) > NAIVE_LIMIT:
        raise EngineLimitError(f"naive oracle is guarded at {NAIVE_LIMIT} vertices")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    root = arena.root
    neighbor_sets = {v: set(root.neighbors(v)) for v in arena.vertices()}

    def ball_set(sub: frozenset[int], c: int) -> set[int]:
        seen = {c}
        frontier = {c}
        for _ in range(radius):
            reach: set[int] = set()
            for x in frontier:
                reach |= neighbor_sets[x] & sub
            frontier = reach - seen
            if not frontier:
                break
            seen |= frontier
        return seen

    memo: dict[frozenset[int], int] = {}

    def rank_of(sub: frozenset[int]) -> int:
        if not sub:
            return 0
        cached = memo.get(sub)
        if cached is not None:
            return cached
        best = 0
        for c in sub:
            ball = ball_set(sub, c)
            inner = min(rank_of(frozenset(ball - {s})) for s in sub)
            if inner > best:
                best = inner
        value = 1 + best
        memo[sub] = value
        return value

    return rank_of(frozenset(arena.vertices()))
