"""Rank engine: known values, per-connector analysis, oracle equivalence."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splittergame import (
    Arena,
    EngineConfig,
    EngineLimitError,
    FamilySpec,
    Graph,
    RankEngine,
    all_labeled_graphs,
    generate,
    naive_rank,
)

from conftest import small_graphs

ALL_FLAG_COMBOS = [
    {"dominance_pruning": dom, "sandwich_exit": sand, "component_split": comp}
    for dom, sand, comp in product([False, True], repeat=3)
]


def engine_for(g: Graph, radius: int, **flags) -> RankEngine:
    return RankEngine(g, EngineConfig(radius=radius, **flags))


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", {"n": n}))


def path(n: int) -> Graph:
    return generate(FamilySpec("path", {"n": n}))


# -- known ranks -----------------------------------------------------------------


def test_k1_rank_is_1_for_all_radii():
    k1 = complete(1)
    for r in range(1, 6):
        assert engine_for(k1, r).rank() == 1
        assert naive_rank(k1.full_arena(), r) == 1


def test_empty_arena_rank_0():
    g = path(3)
    assert engine_for(g, 1).rank_of_mask(0) == 0
    assert naive_rank(Arena(g, 0), 1) == 0


def test_k2_rank_2():
    assert engine_for(complete(2), 1).rank() == 2
    assert naive_rank(complete(2).full_arena(), 1) == 2


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("r", [1, 2])
def test_complete_graph_rank_is_n(n, r):
    g = complete(n)
    assert engine_for(g, r).rank() == n
    assert naive_rank(g.full_arena(), r) == n


@pytest.mark.parametrize("n", range(2, 21))
def test_path_rank_2_at_radius_1(n):
    g = path(n)
    assert engine_for(g, 1).rank() == 2
    if n <= 12:
        assert naive_rank(g.full_arena(), 1) == 2


def test_rank_1_iff_nonempty_edgeless():
    for g in all_labeled_graphs(4):
        rank = engine_for(g, 1).rank()
        assert (rank == 1) == (g.edge_count() == 0)


def test_vertex_limit_guard():
    g = path(5)
    e = RankEngine(g, EngineConfig(radius=1, vertex_limit=4))
    with pytest.raises(EngineLimitError):
        e.rank()
    assert e.rank(g.arena([0, 1, 2, 3])) == 2


def test_naive_guard():
    g = path(13)
    with pytest.raises(EngineLimitError):
        naive_rank(g.full_arena(), 1)


def test_bad_config():
    with pytest.raises(ValueError):
        EngineConfig(radius=0)
    with pytest.raises(ValueError):
        EngineConfig(radius=1, vertex_limit=0)


# -- connector values, progressing moves ------------------------------------------


def test_connector_value_p3_middle():
    g = path(3)
    value, argmin = engine_for(g, 1).connector_value(g.full_arena(), 1)
    assert value == 1 and argmin == (1,)


def test_connector_value_k1():
    g = complete(1)
    value, argmin = engine_for(g, 1).connector_value(g.full_arena(), 0)
    assert value == 0 and argmin == (0,)


def test_connector_value_k3():
    g = complete(3)
    e = engine_for(g, 1)
    for c in range(3):
        value, argmin = e.connector_value(g.full_arena(), c)
        assert value == 2 and argmin == (0, 1, 2)


def test_connector_value_requires_membership():
    g = path(3)
    with pytest.raises(ValueError):
        engine_for(g, 1).connector_value(g.arena([0, 1]), 2)


def test_progressing_k1():
    g = complete(1)
    assert engine_for(g, 1).progressing_moves(g.full_arena(), 0) == (0,)


def test_progressing_p3_middle_is_middle_only():
    g = path(3)
    assert engine_for(g, 1).progressing_moves(g.full_arena(), 1) == (1,)


def test_progressing_k3_all_within_bound():
    g = complete(3)
    e = engine_for(g, 1)
    for c in range(3):
        moves = e.progressing_moves(g.full_arena(), c)
        assert moves == (0, 1, 2)
        assert len(moves) <= 27  # (2r+1)^(2^(k-1)-1) for k=3, r=1


def test_progressing_never_outside_ball():
    g = path(5)
    e = engine_for(g, 1)
    arena = g.full_arena()
    for c in range(5):
        ball = arena.ball(c, 1)
        for s in e.progressing_moves(arena, c):
            assert ball >> s & 1


def test_analyze_k1():
    g = complete(1)
    a = engine_for(g, 1).analyze()
    assert a.rank == 1
    assert a.optimal_connectors == (0,)
    assert a.per_connector[0].progressing == (0,)


def test_analyze_k3():
    g = complete(3)
    a = engine_for(g, 1).analyze()
    assert a.rank == 3
    assert a.optimal_connectors == (0, 1, 2)
    for c in range(3):
        assert a.per_connector[c].value == 2
        assert a.per_connector[c].progressing == (0, 1, 2)


def test_analyze_p5():
    g = path(5)
    a = engine_for(g, 1).analyze()
    assert a.rank == 2
    for c in range(5):
        ca = a.per_connector[c]
        assert ca.value == 1
        assert c in ca.argmin_replies  # deleting the connector vertex always works here


def test_analyze_rejects_empty():
    g = path(2)
    with pytest.raises(ValueError):
        engine_for(g, 1).analyze(Arena(g, 0))


def test_analyze_consistent_with_rank():
    for g in all_labeled_graphs(4):
        if g.n == 0:
            continue
        e = engine_for(g, 1)
        a = e.analyze()
        assert a.rank == e.rank()
        assert a.rank == 1 + max(ca.value for ca in a.per_connector.values())


# -- frozen oracle values ----------------------------------------------------------


@pytest.mark.parametrize(
    "family,params,r,expected",
    [
        ("cycle", {"n": 4}, 1, 2),
        ("cycle", {"n": 5}, 1, 2),
        ("cycle", {"n": 6}, 2, 3),
        ("star", {"leaves": 5}, 1, 2),
        ("grid", {"rows": 2, "cols": 3}, 1, 2),
        ("grid", {"rows": 3, "cols": 3}, 1, 2),
        ("grid", {"rows": 3, "cols": 3}, 2, 4),
        ("complete", {"n": 4}, 2, 4),
        ("subdivided_clique", {"t": 3, "subdivision": 1}, 1, 2),
        ("subdivided_clique", {"t": 3, "subdivision": 1}, 2, 3),
    ],
)
def test_frozen_ranks_match_oracle(family, params, r, expected):
    g = generate(FamilySpec(family, params))
    assert naive_rank(g.full_arena(), r) == expected
    assert engine_for(g, r).rank() == expected


# -- oracle equivalence & structural invariants -------------------------------------


def test_oracle_equivalence_all_labeled_4_all_flags():
    for g in all_labeled_graphs(4):
        want = naive_rank(g.full_arena(), 1)
        for flags in ALL_FLAG_COMBOS:
            assert engine_for(g, 1, **flags).rank() == want


@settings(max_examples=120, deadline=None)
@given(small_graphs(max_n=7), st.integers(min_value=1, max_value=3), st.data())
def test_oracle_equivalence_random(g: Graph, r: int, data):
    flags = data.draw(st.sampled_from(ALL_FLAG_COMBOS))
    assert engine_for(g, r, **flags).rank() == naive_rank(g.full_arena(), r)


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=8), st.data())
def test_monotone_under_induced_subgraphs(g: Graph, data):
    e = engine_for(g, 1)
    full = (1 << g.n) - 1
    sub = data.draw(st.integers(min_value=0, max_value=full))
    assert e.rank_of_mask(sub) <= e.rank_of_mask(full)


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=8), st.data())
def test_deletion_sandwich(g: Graph, data):
    e = engine_for(g, 1)
    v = data.draw(st.integers(min_value=0, max_value=g.n - 1))
    full = (1 << g.n) - 1
    drop = e.rank_of_mask(full) - e.rank_of_mask(full & ~(1 << v))
    assert drop in (0, 1)


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=7), st.integers(min_value=1, max_value=2))
def test_value_dichotomy_everywhere(g: Graph, r: int):
    e = engine_for(g, r)
    arena = g.full_arena()
    for c in range(g.n):
        ball = arena.ball(c, r)
        ball_rank = e.rank_of_mask(ball)
        for s in range(g.n):
            if ball >> s & 1:
                assert e.rank_of_mask(ball & ~(1 << s)) in (ball_rank - 1, ball_rank)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=8))
def test_component_decomposition(g: Graph):
    e = engine_for(g, 1)
    comps = g.full_arena().components()
    if comps:
        assert e.rank() == max(e.rank_of_mask(c) for c in comps)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=8))
def test_rank_at_most_member_count(g: Graph):
    assert 1 <= engine_for(g, 2).rank() <= g.n
