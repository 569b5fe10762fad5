"""Shared hypothesis strategies for graph-valued tests."""

from __future__ import annotations

from hypothesis import strategies as st

from cliqueis import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    """Arbitrary simple graph with n in [min_n, max_n]."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, picks) if keep])


@st.composite
def graphs_with_vertex(draw, max_n: int = 8) -> tuple[Graph, int]:
    g = draw(graphs(min_n=1, max_n=max_n))
    v = draw(st.integers(0, g.n - 1))
    return g, v


@st.composite
def graphs_with_subset(draw, max_n: int = 10) -> tuple[Graph, frozenset[int]]:
    g = draw(graphs(min_n=1, max_n=max_n))
    members = draw(st.sets(st.integers(0, g.n - 1)))
    return g, frozenset(members)
