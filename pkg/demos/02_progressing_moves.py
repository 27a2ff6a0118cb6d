"""Progressing splitter moves and the closed-form cap on how many exist.

A splitter reply s to a connector move c is progressing when deleting s
strictly lowers the rank of c's ball. However large the graph, a graph of
rank k never offers more than (2r+1)^(2^(k-1)-1) progressing replies to any
single connector move.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from splittergame import (
    EngineConfig,
    FamilySpec,
    RankEngine,
    generate,
    progressing_move_bound,
)

for label, spec, radius in [
    ("triangle K3", FamilySpec("complete", {"n": 3}), 1),
    ("path P7", FamilySpec("path", {"n": 7}), 1),
    ("star, 6 leaves", FamilySpec("star", {"leaves": 6}), 1),
    ("random G(9, 0.4)", FamilySpec("gnp", {"n": 9, "p": 0.4}, seed=11), 1),
    ("4x4 grid", FamilySpec("grid", {"rows": 4, "cols": 4}), 2),
]:
    g = generate(spec)
    engine = RankEngine(g, EngineConfig(radius=radius))
    arena = g.full_arena()
    rank = engine.rank()
    bound = progressing_move_bound(rank, radius)
    worst = 0
    print(f"{label} (n={g.n}, r={radius}, rank {rank}, bound {bound}):")
    for c in arena.vertices():
        moves = engine.progressing_moves(arena, c)
        worst = max(worst, len(moves))
        marker = " <- none progressing" if not moves else ""
        print(f"  c={c}: {len(moves)} progressing {list(moves)}{marker}")
    assert worst <= bound
    print(f"  max {worst} <= bound {bound}\n")
