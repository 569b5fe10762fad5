"""Graph family generators: blown-up paths, random models, planted
structures, isolated-vertex padding, and the hardness-reduction gadget.

All seeded generators are deterministic: identical arguments reproduce
bit-identical graphs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .common import CLIQUE, INDEPENDENT_SET, ParameterError, as_fraction
from .graph import Graph

CLUSTER_NAMES = ("A_ext", "B_int", "C_int", "D_ext")


def _range_mask(lo: int, hi: int) -> int:
    return ((1 << hi) - 1) ^ ((1 << lo) - 1)


@dataclass(frozen=True)
class ClusterLayout:
    """Cluster bookkeeping for a blown-up 4-path (4P_d).

    Vertices 0..d-1 form the first external cluster (A_ext), then B_int,
    C_int, D_ext in consecutive blocks of d.  External clusters are
    edgeless, internal clusters are cliques, and consecutive clusters
    along the path A-B-C-D are joined completely.
    """

    d: int

    def members(self, name: str) -> range:
        i = CLUSTER_NAMES.index(name)
        return range(i * self.d, (i + 1) * self.d)

    def cluster_of(self, v: int) -> str:
        if not 0 <= v < 4 * self.d:
            raise ValueError(f"vertex {v} out of range for 4P_{self.d}")
        return CLUSTER_NAMES[v // self.d]

    @property
    def assignment(self) -> dict[int, str]:
        return {v: self.cluster_of(v) for v in range(4 * self.d)}


def gen_4pd(d: int) -> tuple[Graph, ClusterLayout]:
    """Blow each vertex of a 4-path up into a cluster of d vertices.

    The result has 4d vertices and every vertex sits in both a clique
    and an independent set of size d+1 (one adjacent internal cluster,
    one non-adjacent external cluster).
    """
    if d < 1:
        raise ParameterError(f"cluster size d must be >= 1, got {d}")
    layout = ClusterLayout(d)
    a = _range_mask(0, d)
    b = _range_mask(d, 2 * d)
    c = _range_mask(2 * d, 3 * d)
    dd = _range_mask(3 * d, 4 * d)
    rows = []
    for v in range(4 * d):
        if v < d:  # A_ext: independent, joined to B
            row = b
        elif v < 2 * d:  # B_int: clique, joined to A and C
            row = a | (b & ~(1 << v)) | c
        elif v < 3 * d:  # C_int: clique, joined to B and D
            row = b | (c & ~(1 << v)) | dd
        else:  # D_ext: independent, joined to C
            row = c
        rows.append(row)
    return Graph(4 * d, tuple(rows)), layout


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Uniform random graph: each pair is an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must be in [0, 1], got {p}")
    if n < 0:
        raise ParameterError("n must be non-negative")
    rng = random.Random(seed)
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def gen_planted(
    n: int, p: float, size: int, kind: str, seed: int
) -> tuple[Graph, frozenset[int]]:
    """Random graph with a chosen subset overwritten to a clique or an
    independent set.

    The planted pairs fully replace the random ones (no blending), so
    the returned set is a clique / independent set by construction.
    """
    if kind not in (CLIQUE, INDEPENDENT_SET):
        raise ParameterError(f"kind must be {CLIQUE!r} or {INDEPENDENT_SET!r}, got {kind!r}")
    if not 0 <= size <= n:
        raise ParameterError(f"planted size {size} must be within 0..{n}")
    rng = random.Random(seed)
    planted = sorted(rng.sample(range(n), size))
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    for i, u in enumerate(planted):
        for v in planted[i + 1 :]:
            if kind == CLIQUE:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            else:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
    return Graph(n, tuple(rows)), frozenset(planted)


def append_isolated(g: Graph, count: int) -> Graph:
    """Pad the graph with ``count`` degree-0 vertices."""
    if count < 0:
        raise ParameterError("count must be non-negative")
    return Graph(g.n + count, g.adj + (0,) * count)


@dataclass(frozen=True)
class ReductionLayout:
    """Where everything landed inside a hardness-reduction instance.

    ``s_ids``/``t_ids`` partition the embedded 4P_k: t_ids are the
    withheld vertices (all inside the first external cluster), s_ids the
    rest.  ``g1_ids`` maps input-graph vertex i to its id in the output.
    """

    k: int
    eps: Fraction
    s_ids: tuple[int, ...]
    t_ids: tuple[int, ...]
    g1_ids: tuple[int, ...]
    path_layout: ClusterLayout


def gen_hardness_reduction(g1: Graph, k: int, eps) -> tuple[Graph, ReductionLayout]:
    """Embed g1 next to a 4P_k, fully joined to all of 4P_k except a
    block T of one external cluster.

    The output has (4+eps)k vertices.  T holds k - eps*k/6 vertices, the
    lowest-indexed ones of the first external cluster; S is the rest of
    the 4P_k and is completely joined to g1.  Whether the result is
    k-enabling then hinges exactly on whether every g1 vertex lies in an
    independent set of size eps*k/6 within g1.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    eps = as_fraction(eps)
    if eps <= 0:
        raise ParameterError(f"eps must be positive, got {eps}")
    ek = eps * k
    if ek.denominator != 1:
        raise ParameterError(f"eps*k = {ek} is not an integer")
    ek6 = ek / 6
    if ek6.denominator != 1:
        raise ParameterError(f"eps*k/6 = {ek6} is not an integer")
    ek, ek6 = int(ek), int(ek6)
    if g1.n != ek:
        raise ParameterError(f"g1 has {g1.n} vertices, expected eps*k = {ek}")
    if ek6 > k:
        raise ParameterError(f"eps*k/6 = {ek6} exceeds the external cluster size {k}")

    base, layout = gen_4pd(k)
    n4 = base.n
    n = n4 + ek
    t_size = k - ek6
    t_mask = _range_mask(0, t_size)  # lowest-indexed vertices of A_ext
    s_mask = base.full_mask & ~t_mask
    g1_block = _range_mask(n4, n)

    rows = [0] * n
    for v in range(n4):
        rows[v] = base.adj[v]
        if s_mask >> v & 1:
            rows[v] |= g1_block
    for i in range(ek):
        rows[n4 + i] = (g1.adj[i] << n4) | s_mask
    out = Graph(n, tuple(rows))
    meta = ReductionLayout(
        k=k,
        eps=eps,
        s_ids=tuple(v for v in range(n4) if s_mask >> v & 1),
        t_ids=tuple(range(t_size)),
        g1_ids=tuple(range(n4, n)),
        path_layout=layout,
    )
    return out, meta
