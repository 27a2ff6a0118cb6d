"""Constructive extraction of small rank-preserving witness subgraphs.

Every graph of splitter rank k contains an induced subgraph H of rank
exactly k with at most f(k) vertices, where

    f(1) = 1,    f(k+1) = r*f(k)^2 + r*f(k) + 1,

and f(k) <= g(k) = (2r+1)^(2^(k-1)-1). The extraction follows the inductive
construction behind that bound:

1. Shrink the arena to a minimal subgraph B of full rank (every deletion
   drops the rank, necessarily by exactly 1).
2. B has a central vertex c1 whose radius-r ball covers all of B.
3. Pick any s in B; recursively take a witness H_s of B-s (rank k-1), then
   a witness H_v of B-v for each v in H_s.
4. H = H_s, all H_v, and shortest paths in B from c1 to each of their
   vertices. Playing c1 keeps all of H in the ball, and whichever vertex the
   splitter deletes, one rank-(k-1) witness survives.

Because any rank-preserving induced subgraph H of G satisfies
rank(G - s) = rank(G) for every s outside H, all progressing splitter moves
lie inside H; the witness therefore also certifies the progressing-move
bound g(k).

The construction's postconditions always hold mathematically, so a
violation indicates an implementation bug and raises
:class:`WitnessInvariantError` loudly instead of being repaired.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .engine import RankEngine
from .graphs import Arena, bits, mask_of


class WitnessInvariantError(AssertionError):
    """A construction invariant failed; carries a diagnostic payload."""

    def __init__(self, message: str, dump: dict | None = None):
        super().__init__(message if dump is None else f"{message}; dump={dump!r}")
        self.dump = dump or {}


@dataclass(frozen=True)
class WitnessLevel:
    """One step of the recursive construction (rank k level, k >= 2)."""

    b_vertices: tuple[int, ...]
    center: int
    split_vertex: int
    hs: tuple[int, ...]
    hv: dict[int, tuple[int, ...]]
    path_vertices: tuple[int, ...]
    inner_path_vertices: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    """A rank-preserving vertex set plus its recursion certificate.

    ``levels`` walks the H_s chain from the top rank down to rank 2; the
    rank-1 base contributes no level.
    """

    vertices: tuple[int, ...]
    rank: int
    levels: tuple[WitnessLevel, ...]

    def to_obj(self) -> dict:
        return {
            "rank": self.rank,
            "h": list(self.vertices),
            "levels": [
                {
                    "B": list(level.b_vertices),
                    "c1": level.center,
                    "s": level.split_vertex,
                    "Hs": list(level.hs),
                    "Hv": {str(v): list(ids) for v, ids in sorted(level.hv.items())},
                    "P": list(level.path_vertices),
                    "Q": list(level.inner_path_vertices),
                }
                for level in self.levels
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))


def witness_size_bound(k: int, radius: int) -> int:
    """Size bound f(k) for extracted witnesses (exact integer recurrence)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    f = 1
    for _ in range(k - 1):
        f = radius * f * f + radius * f + 1
    return f


def progressing_move_bound(k: int, radius: int) -> int:
    """Closed-form bound g(k) = (2r+1)^(2^(k-1)-1); dominates f(k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if radius < 1:
        raise ValueError("radius must be >= 1")
    return (2 * radius + 1) ** (2 ** (k - 1) - 1)


def bound_table(radius: int, max_k: int) -> list[tuple[int, int, int]]:
    """Rows (k, f(k), g(k)) for k = 1..max_k, exact integers."""
    return [
        (k, witness_size_bound(k, radius), progressing_move_bound(k, radius))
        for k in range(1, max_k + 1)
    ]


def minimal_rank_subgraph(arena: Arena, engine: RankEngine) -> Arena:
    """Greedy rank-preserving shrink to a deletion-minimal subgraph B.

    Scans vertices in increasing id order, deletes any vertex whose removal
    keeps the rank, and restarts the scan after each deletion; at the
    fixpoint every single deletion drops the rank (by exactly 1).
    """
    if arena.is_empty:
        raise ValueError("minimal_rank_subgraph requires a nonempty arena")
    target = engine.rank_of_mask(arena.members)
    members = arena.members
    changed = True
    while changed:
        changed = False
        for v in bits(members):
            candidate = members & ~(1 << v)
            if engine.rank_of_mask(candidate) == target:
                members = candidate
                changed = True
                break
    return Arena(arena.root, members)


def find_center(b: Arena, radius: int) -> int:
    """Smallest vertex whose radius-r ball covers all of ``b``.

    Deletion-minimal subgraphs always have one; absence signals an internal
    bug, reported with a dump of ``b``.
    """
    for v in b.vertices():
        ecc = b.eccentricity(v)
        if ecc is not None and ecc <= radius:
            return v
    raise WitnessInvariantError(
        "no central vertex found in a supposedly minimal subgraph",
        {"vertices": b.vertices(), "edges": b.edges(), "radius": radius},
    )


def extract_witness(arena: Arena, engine: RankEngine) -> Witness:
    """Extract a witness subgraph of the same rank, with certificate.

    Size is bounded by f(rank). Sub-extractions are memoized per call since
    the B-v subproblems overlap heavily.
    """
    if arena.is_empty:
        raise ValueError("extract_witness requires a nonempty arena")
    radius = engine.config.radius
    root = arena.root
    memo: dict[int, Witness] = {}

    def extract(members: int) -> Witness:
        cached = memo.get(members)
        if cached is not None:
            return cached
        k = engine.rank_of_mask(members)
        if k == 1:
            lowest = (members & -members).bit_length() - 1
            witness = Witness((lowest,), 1, ())
            memo[members] = witness
            return witness
        b = minimal_rank_subgraph(Arena(root, members), engine)
        center = find_center(b, radius)
        split = (b.members & -b.members).bit_length() - 1
        hs = extract(b.members & ~(1 << split))
        if hs.rank != k - 1:
            raise WitnessInvariantError(
                f"deleting {split} from a minimal subgraph gave rank {hs.rank}, expected {k - 1}",
                {"B": b.vertices(), "s": split},
            )
        hv: dict[int, tuple[int, ...]] = {}
        targets = set(hs.vertices)
        for v in hs.vertices:
            wv = extract(b.members & ~(1 << v))
            if wv.rank != k - 1:
                raise WitnessInvariantError(
                    f"deleting {v} from a minimal subgraph gave rank {wv.rank}, expected {k - 1}",
                    {"B": b.vertices(), "v": v},
                )
            hv[v] = wv.vertices
            targets.update(wv.vertices)
        path_vertices: set[int] = {center}
        inner_vertices: set[int] = set()
        for x in sorted(targets):
            path = b.shortest_path(center, x)
            if len(path) - 1 > radius:
                raise WitnessInvariantError(
                    f"path from center {center} to {x} has length {len(path) - 1} > {radius}",
                    {"B": b.vertices(), "path": list(path)},
                )
            path_vertices.update(path)
            inner_vertices.update(path[1:-1])
        h = targets | path_vertices
        h_mask = mask_of(h)
        h_rank = engine.rank_of_mask(h_mask)
        if h_rank != k:
            raise WitnessInvariantError(
                f"assembled witness has rank {h_rank}, expected {k}",
                {"h": sorted(h), "B": b.vertices()},
            )
        bound = witness_size_bound(k, radius)
        if len(h) > bound:
            raise WitnessInvariantError(
                f"witness has {len(h)} vertices, exceeding the bound {bound}",
                {"h": sorted(h)},
            )
        level = WitnessLevel(
            b_vertices=tuple(b.vertices()),
            center=center,
            split_vertex=split,
            hs=hs.vertices,
            hv=hv,
            path_vertices=tuple(sorted(path_vertices)),
            inner_path_vertices=tuple(sorted(inner_vertices)),
        )
        witness = Witness(tuple(sorted(h)), k, (level,) + hs.levels)
        memo[members] = witness
        return witness

    return extract(arena.members)


def check_certificate(witness: Witness, arena: Arena, radius: int) -> list[str]:
    """Structural validation of a certificate; returns human-readable faults.

    Checks set algebra only (membership, unions, paths recorded at each
    level); rank equalities are the extractor's own loud assertions and are
    re-verified separately by the corpus checks.
    """
    faults: list[str] = []
    if witness.rank >= 2 and len(witness.levels) != witness.rank - 1:
        faults.append(
            f"expected {witness.rank - 1} levels for rank {witness.rank}, got {len(witness.levels)}"
        )
    members = set(arena.vertices())
    if not set(witness.vertices) <= members:
        faults.append("witness vertices leave the input arena")
    expected_h = set(witness.vertices)
    enclosing = members
    for depth, level in enumerate(witness.levels):
        b = set(level.b_vertices)
        if not b <= enclosing:
            faults.append(f"level {depth}: B leaves the enclosing arena")
        if level.center not in b:
            faults.append(f"level {depth}: center not in B")
        if level.split_vertex not in b:
            faults.append(f"level {depth}: split vertex not in B")
        hs = set(level.hs)
        if level.split_vertex in hs:
            faults.append(f"level {depth}: H_s contains the deleted vertex")
        if not hs <= b:
            faults.append(f"level {depth}: H_s leaves B")
        if set(level.hv) != hs:
            faults.append(f"level {depth}: H_v family not indexed exactly by H_s")
        union = set(hs)
        for v, ids in level.hv.items():
            if v in ids:
                faults.append(f"level {depth}: H_{v} contains its own deleted vertex")
            union.update(ids)
        p = set(level.path_vertices)
        q = set(level.inner_path_vertices)
        if not q <= p:
            faults.append(f"level {depth}: inner path vertices leave P")
        if level.center not in p:
            faults.append(f"level {depth}: center not recorded in P")
        if not union <= p:
            faults.append(f"level {depth}: some witness vertex has no recorded path")
        if union | p != expected_h:
            faults.append(f"level {depth}: H_s + H_v + P does not reassemble the witness")
        expected_h = hs
        enclosing = b - {level.split_vertex}
    return faults
