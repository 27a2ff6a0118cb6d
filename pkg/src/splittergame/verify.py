"""Certification runs over graph corpora with machine-readable reports.

Each check takes one graph and radius and returns a record dict whose
``violations`` list is empty on success. :func:`run_corpus` sweeps a corpus,
assembles the records sorted by graph id, and emits the report schema
``{"spec": ..., "results": ..., "violations": ..., "pass": ...}``.
Violation entries embed the offending graph's JSON so every failure is
replayable in isolation. Graphs beyond the engine's vertex limit are
skipped and recorded, never silently dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import __version__
from .engine import EngineConfig, EngineLimitError, RankEngine, naive_rank, NAIVE_LIMIT
from .generators import FamilySpec, SplitMix64, all_labeled_graphs, generate
from .graphs import Arena, Graph, bits, graph_to_json, mask_of
from .witness import (
    check_certificate,
    extract_witness,
    progressing_move_bound,
    witness_size_bound,
)

CHECK_NAMES = ("progressing_bound", "witness", "containment", "invariants")


@dataclass
class CheckReport:
    """Aggregated corpus results; ``passed`` iff no violations anywhere."""

    spec: dict
    results: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_obj(self) -> dict:
        return {
            "spec": self.spec,
            "results": self.results,
            "violations": self.violations,
            "pass": self.passed,
        }

    def to_json(self, *, indent: int | None = None) -> str:
        if indent is None:
            return json.dumps(self.to_obj(), separators=(",", ":"))
        return json.dumps(self.to_obj(), indent=indent)


def _violation(gid: str, check: str, r: int, detail: str, g: Graph, **extra) -> dict:
    entry = {"graph": gid, "check": check, "r": r, "detail": detail}
    entry.update(extra)
    entry["graph_json"] = graph_to_json(g)
    return entry


def _engine(g: Graph, radius: int, config: EngineConfig | None) -> RankEngine:
    if config is None:
        config = EngineConfig(radius=radius)
    elif config.radius != radius:
        config = EngineConfig(
            radius=radius,
            dominance_pruning=config.dominance_pruning,
            sandwich_exit=config.sandwich_exit,
            component_split=config.component_split,
            memo_capacity_hint=config.memo_capacity_hint,
            vertex_limit=config.vertex_limit,
        )
    return RankEngine(g, config)


def check_progressing_bound(
    g: Graph,
    radius: int,
    *,
    gid: str = "graph",
    config: EngineConfig | None = None,
    bound_fn: Callable[[int, int], int] = progressing_move_bound,
) -> dict:
    """Progressing-move counts against every connector move stay within g(k).

    ``bound_fn`` is injectable so the harness can prove to itself that a
    mutated (too small) bound is caught.
    """
    engine = _engine(g, radius, config)
    arena = g.full_arena()
    rank = engine.rank(arena)
    bound = bound_fn(rank, radius) if rank >= 1 else 0
    counts = []
    violations = []
    for c in range(g.n):
        count = len(engine.progressing_moves(arena, c))
        counts.append(count)
        if count > bound:
            violations.append(
                _violation(
                    gid,
                    "progressing_bound",
                    radius,
                    f"connector {c} admits {count} progressing moves, bound {bound}",
                    g,
                    connector=c,
                )
            )
    return {
        "graph": gid,
        "check": "progressing_bound",
        "n": g.n,
        "r": radius,
        "rank": rank,
        "progressing_counts": counts,
        "max_progressing": max(counts, default=0),
        "move_bound": bound,
        "violations": violations,
    }


def check_witness(
    g: Graph,
    radius: int,
    *,
    gid: str = "graph",
    config: EngineConfig | None = None,
) -> dict:
    """Witness extraction preserves the rank within the size bound f(k)."""
    engine = _engine(g, radius, config)
    arena = g.full_arena()
    rank = engine.rank(arena)
    violations = []
    witness_size = 0
    if rank >= 1:
        witness = extract_witness(arena, engine)
        witness_size = len(witness.vertices)
        bound = witness_size_bound(rank, radius)
        if witness.rank != rank:
            violations.append(
                _violation(
                    gid, "witness", radius,
                    f"witness rank {witness.rank} != graph rank {rank}", g,
                )
            )
        witness_rank = engine.rank_of_mask(mask_of(witness.vertices))
        if witness_rank != rank:
            violations.append(
                _violation(
                    gid, "witness", radius,
                    f"witness induces rank {witness_rank} != graph rank {rank}", g,
                )
            )
        if witness_size > bound:
            violations.append(
                _violation(
                    gid, "witness", radius,
                    f"witness size {witness_size} exceeds bound {bound}", g,
                )
            )
        for fault in check_certificate(witness, arena, radius):
            violations.append(_violation(gid, "witness", radius, f"certificate: {fault}", g))
    return {
        "graph": gid,
        "check": "witness",
        "n": g.n,
        "r": radius,
        "rank": rank,
        "witness_size": witness_size,
        "size_bound": witness_size_bound(rank, radius) if rank >= 1 else 0,
        "violations": violations,
    }


def check_containment(
    g: Graph,
    radius: int,
    *,
    gid: str = "graph",
    config: EngineConfig | None = None,
) -> dict:
    """Progressing moves against each c lie inside a witness of c's ball."""
    engine = _engine(g, radius, config)
    arena = g.full_arena()
    rank = engine.rank(arena)
    violations = []
    for c in range(g.n):
        progressing = set(engine.progressing_moves(arena, c))
        ball = arena.ball(c, radius)
        witness = extract_witness(Arena(g, ball), engine)
        if not progressing <= set(witness.vertices):
            stray = sorted(progressing - set(witness.vertices))
            violations.append(
                _violation(
                    gid, "containment", radius,
                    f"progressing moves {stray} against connector {c} escape the ball witness",
                    g, connector=c,
                )
            )
    return {
        "graph": gid,
        "check": "containment",
        "n": g.n,
        "r": radius,
        "rank": rank,
        "violations": violations,
    }


def check_rank_invariants(
    g: Graph,
    radius: int,
    *,
    gid: str = "graph",
    config: EngineConfig | None = None,
    samples: int = 20,
    seed: int = 0,
) -> dict:
    """Sampled structural invariants of the rank function on one graph.

    Monotonicity under random induced subgraphs, the 0-or-1 drop under random
    single deletions, the two-value dichotomy at every (connector, reply)
    pair, rank==1 iff nonempty and edgeless, and agreement of the component
    decomposition with the naive oracle where the oracle's guard allows.
    """
    engine = _engine(g, radius, config)
    arena = g.full_arena()
    full = arena.members
    rank = engine.rank(arena)
    violations = []
    rng = SplitMix64(seed)

    for _ in range(samples):
        sub = rng.next_u64() & full
        sub_rank = engine.rank_of_mask(sub)
        if sub_rank > rank:
            violations.append(
                _violation(
                    gid, "invariants", radius,
                    f"monotonicity: induced subgraph {sorted(bits(sub))} has rank "
                    f"{sub_rank} > {rank}", g,
                )
            )
        if sub:
            members = list(bits(sub))
            v = members[rng.next_below(len(members))]
            drop = sub_rank - engine.rank_of_mask(sub & ~(1 << v))
            if drop not in (0, 1):
                violations.append(
                    _violation(
                        gid, "invariants", radius,
                        f"sandwich: deleting {v} from {members} changed rank by {drop}", g,
                    )
                )

    for c in range(g.n):
        ball = arena.ball(c, radius)
        ball_rank = engine.rank_of_mask(ball)
        for s in bits(ball):
            after = engine.rank_of_mask(ball & ~(1 << s))
            if after not in (ball_rank - 1, ball_rank):
                violations.append(
                    _violation(
                        gid, "invariants", radius,
                        f"dichotomy: rank {after} after deleting {s} from the "
                        f"ball of {c} (ball rank {ball_rank})", g,
                        connector=c,
                    )
                )

    edgeless = g.edge_count() == 0
    if g.n > 0 and (rank == 1) != edgeless:
        violations.append(
            _violation(
                gid, "invariants", radius,
                f"rank-1 criterion: rank={rank}, edgeless={edgeless}", g,
            )
        )

    comps = arena.components()
    if comps:
        comp_max = max(engine.rank_of_mask(comp) for comp in comps)
        if comp_max != rank:
            violations.append(
                _violation(
                    gid, "invariants", radius,
                    f"component decomposition: max component rank {comp_max} != {rank}", g,
                )
            )
    if g.n <= NAIVE_LIMIT:
        oracle = naive_rank(arena, radius)
        if oracle != rank:
            violations.append(
                _violation(
                    gid, "invariants", radius,
                    f"oracle disagreement: naive {oracle} != engine {rank}", g,
                )
            )

    return {
        "graph": gid,
        "check": "invariants",
        "n": g.n,
        "r": radius,
        "rank": rank,
        "samples": samples,
        "violations": violations,
    }


_CHECK_FNS = {
    "progressing_bound": check_progressing_bound,
    "witness": check_witness,
    "containment": check_containment,
    "invariants": check_rank_invariants,
}


@dataclass(frozen=True)
class CorpusSpec:
    """A named, fully seeded corpus: graphs, radii, and check knobs."""

    name: str
    entries: tuple[tuple[str, Graph], ...]
    radii: tuple[int, ...]
    seed: int = 0
    samples: int = 20
    descriptor: dict = field(default_factory=dict)


def run_corpus(
    corpus: CorpusSpec,
    checks: Iterable[str] = CHECK_NAMES,
    *,
    config: EngineConfig | None = None,
) -> CheckReport:
    """Run the selected checks over every corpus graph.

    Per-graph failures are recorded and the run continues; oversized graphs
    are skipped with a record. Deterministic given the corpus spec.
    """
    checks = tuple(checks)
    for name in checks:
        if name not in _CHECK_FNS:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    spec_obj = {
        "corpus": corpus.name,
        "radii": list(corpus.radii),
        "seed": corpus.seed,
        "samples": corpus.samples,
        "checks": list(checks),
        "graphs": len(corpus.entries),
        "version": __version__,
    }
    spec_obj.update(corpus.descriptor)
    report = CheckReport(spec=spec_obj)
    for gid, g in corpus.entries:
        for r in corpus.radii:
            for name in checks:
                fn = _CHECK_FNS[name]
                kwargs: dict = {"gid": gid, "config": config}
                if name == "invariants":
                    kwargs.update(samples=corpus.samples, seed=corpus.seed)
                try:
                    record = fn(g, r, **kwargs)
                except EngineLimitError as exc:
                    record = {
                        "graph": gid,
                        "check": name,
                        "n": g.n,
                        "r": r,
                        "skipped": str(exc),
                        "violations": [],
                    }
                report.results.append(record)
                report.violations.extend(record["violations"])
    report.results.sort(key=lambda rec: (rec["graph"], rec["r"], rec["check"]))
    report.violations.sort(key=lambda v: (v["graph"], v["r"], v["check"], v["detail"]))
    return report


# -- corpus builders ---------------------------------------------------------


def corpus_all_labeled(max_n: int, radii: Iterable[int], *, seed: int = 0) -> CorpusSpec:
    """Every labeled graph on 1..max_n vertices (max_n <= 6)."""
    entries = []
    for n in range(1, max_n + 1):
        for idx, g in enumerate(all_labeled_graphs(n)):
            entries.append((f"all{n}:{idx:04d}", g))
    return CorpusSpec(
        name="all-labeled",
        entries=tuple(entries),
        radii=tuple(radii),
        seed=seed,
        descriptor={"max_n": max_n},
    )


def corpus_families(max_n: int, radii: Iterable[int], *, seed: int = 0) -> CorpusSpec:
    """Paths, cycles, stars, grids, balanced trees up to ``max_n`` vertices,
    plus subdivided cliques K_t (t <= 5) with subdivision 1 and 2."""
    entries: list[tuple[str, Graph]] = []
    for n in range(2, max_n + 1):
        entries.append((f"path:{n:02d}", generate(FamilySpec("path", {"n": n}))))
    for n in range(3, max_n + 1):
        entries.append((f"cycle:{n:02d}", generate(FamilySpec("cycle", {"n": n}))))
    for leaves in range(1, max_n):
        entries.append((f"star:{leaves:02d}", generate(FamilySpec("star", {"leaves": leaves}))))
    for rows in range(2, max_n + 1):
        for cols in range(rows, max_n + 1):
            if rows * cols <= max_n:
                entries.append(
                    (f"grid:{rows}x{cols}", generate(FamilySpec("grid", {"rows": rows, "cols": cols})))
                )
    for branching in range(2, 5):
        for height in range(1, 5):
            size = sum(branching**i for i in range(height + 1))
            if size <= max_n:
                entries.append(
                    (
                        f"btree:{branching}h{height}",
                        generate(FamilySpec("balanced_tree", {"branching": branching, "height": height})),
                    )
                )
    for t in range(2, 6):
        for sub in (1, 2):
            entries.append(
                (
                    f"subclique:t{t}s{sub}",
                    generate(FamilySpec("subdivided_clique", {"t": t, "subdivision": sub})),
                )
            )
    return CorpusSpec(
        name="families",
        entries=tuple(entries),
        radii=tuple(radii),
        seed=seed,
        descriptor={"max_n": max_n},
    )


def corpus_gnp(
    radii: Iterable[int],
    *,
    ns: Iterable[int] = (6, 7, 8, 9),
    ps: Iterable[float] = (0.2, 0.4, 0.6),
    per_combo: int = 25,
    seed: int = 0,
) -> CorpusSpec:
    """Seeded G(n, p) batch: ``per_combo`` graphs per (n, p) pair."""
    entries = []
    for n in ns:
        for p in ps:
            for i in range(per_combo):
                graph_seed = ((seed * 1_000_003 + n) * 101 + round(p * 100)) * 1009 + i
                spec = FamilySpec("gnp", {"n": n, "p": p}, seed=graph_seed)
                entries.append((f"gnp:n{n}p{int(p * 100):02d}i{i:02d}", generate(spec)))
    return CorpusSpec(
        name="gnp",
        entries=tuple(entries),
        radii=tuple(radii),
        seed=seed,
        descriptor={"ns": list(ns), "ps": list(ps), "per_combo": per_combo},
    )


def corpus_standard(radii: Iterable[int], *, max_labeled_n: int = 5, seed: int = 0) -> CorpusSpec:
    """All labeled graphs up to ``max_labeled_n``, family graphs, and G(n,p)."""
    labeled = corpus_all_labeled(max_labeled_n, radii, seed=seed)
    families = corpus_families(20, radii, seed=seed)
    gnp = corpus_gnp(radii, seed=seed)
    return CorpusSpec(
        name="standard",
        entries=labeled.entries + families.entries + gnp.entries,
        radii=tuple(radii),
        seed=seed,
        descriptor={"max_labeled_n": max_labeled_n},
    )
