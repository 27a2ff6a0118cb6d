"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from splittergame import Graph


@st.composite
def small_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    """Random labeled graph drawn via an edge mask."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
