"""Splitter ranks of small graphs, and what the number means.

The splitter game on a graph: each round the connector picks a vertex c,
the arena shrinks to the closed radius-r ball around c, and the splitter
deletes one vertex. The splitter wins when nothing is left. The rank is the
number of rounds the splitter needs against best connector play.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from splittergame import EngineConfig, FamilySpec, RankEngine, generate, naive_rank

for label, spec in [
    ("single vertex K1", FamilySpec("complete", {"n": 1})),
    ("edge K2", FamilySpec("complete", {"n": 2})),
    ("triangle K3", FamilySpec("complete", {"n": 3})),
    ("path P5", FamilySpec("path", {"n": 5})),
    ("cycle C6", FamilySpec("cycle", {"n": 6})),
    ("star with 5 leaves", FamilySpec("star", {"leaves": 5})),
    ("3x3 grid", FamilySpec("grid", {"rows": 3, "cols": 3})),
]:
    g = generate(spec)
    for radius in (1, 2):
        engine = RankEngine(g, EngineConfig(radius=radius))
        rank = engine.rank()
        oracle = naive_rank(g.full_arena(), radius)
        assert rank == oracle
        print(f"{label:22s} r={radius}: rank {rank}")
    print()

# The per-connector breakdown shows why a rank holds: the connector wants a
# ball whose every deletion still needs many rounds.
g = generate(FamilySpec("path", {"n": 5}))
engine = RankEngine(g, EngineConfig(radius=1))
analysis = engine.analyze()
print(f"P5 at r=1 has rank {analysis.rank}; optimal connector moves: {analysis.optimal_connectors}")
for c, ca in analysis.per_connector.items():
    print(f"  connector {c}: value {ca.value}, best splitter replies {ca.argmin_replies}")
