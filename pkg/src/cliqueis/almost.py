"""Relaxed clique/independent-set structures and the acceptable-graph
search.

An eps-almost-clique is a vertex set where every member has in-set
degree at least (1-eps) times the set size; an eps-almost-IS bounds the
in-set degree by eps times the size from above.  All eps comparisons run
in exact rationals: the branch decisions below are correctness-critical
and must not round.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .common import CLIQUE, INDEPENDENT_SET, ParameterError, as_fraction
from .graph import Graph, ids_of, mask_of


@dataclass(frozen=True)
class AlmostStructure:
    """An eps-almost-clique or eps-almost-IS (by ``kind``).

    Degree conditions are checked against a host graph via
    :func:`check_almost` / :func:`validate_structure`; the dataclass
    itself only carries the set.
    """

    kind: str
    vertices: frozenset[int]
    eps: Fraction

    def __post_init__(self):
        if self.kind not in (CLIQUE, INDEPENDENT_SET):
            raise ValueError(f"bad structure kind {self.kind!r}")

    @property
    def size(self) -> int:
        return len(self.vertices)


def check_almost(g: Graph, members, kind: str, eps) -> tuple[bool, tuple[int, ...]]:
    """Check the per-vertex degree condition; returns (ok, violators).

    Clique kind requires in-set degree >= (1-eps)|S| for every member,
    IS kind requires in-set degree <= eps|S|.
    """
    if kind not in (CLIQUE, INDEPENDENT_SET):
        raise ParameterError(f"bad structure kind {kind!r}")
    eps = as_fraction(eps)
    mask = mask_of(members, g.n)
    size = mask.bit_count()
    violators = []
    bits = mask
    while bits:
        low = bits & -bits
        v = low.bit_length() - 1
        bits ^= low
        d = (g.adj[v] & mask).bit_count()
        if kind == CLIQUE:
            if d < (1 - eps) * size:
                violators.append(v)
        else:
            if d > eps * size:
                violators.append(v)
    return not violators, tuple(violators)


def validate_structure(g: Graph, st: AlmostStructure) -> None:
    """Raise if the structure violates its degree condition or, for a
    nonempty set, the sensibility floor eps*|S| >= 1 (vacuous when empty)."""
    ok, violators = check_almost(g, st.vertices, st.kind, st.eps)
    if not ok:
        raise AssertionError(
            f"{st.kind} structure of size {st.size} fails its degree condition "
            f"at vertices {violators}"
        )
    if st.vertices and st.eps * st.size < 1:
        raise AssertionError(
            f"eps*|S| = {st.eps * st.size} < 1 on a nonempty structure"
        )


def max_is_bound_in_almost_clique(c: AlmostStructure) -> int:
    """No independent set inside an eps-almost-clique exceeds eps|C|."""
    if c.kind != CLIQUE:
        raise ParameterError("expected an almost-clique")
    return math.floor(c.eps * c.size)


def max_clique_bound_in_almost_is(i: AlmostStructure) -> int:
    """No clique inside an eps-almost-IS exceeds eps|I| + 1."""
    if i.kind != INDEPENDENT_SET:
        raise ParameterError("expected an almost-IS")
    return math.floor(i.eps * i.size + 1)


def check_intersection_bound(c: AlmostStructure, i: AlmostStructure) -> bool:
    """|C ∩ I| <= eps(|C| + |I|) for an almost-clique/almost-IS pair."""
    if c.kind != CLIQUE or i.kind != INDEPENDENT_SET:
        raise ParameterError("expected (almost-clique, almost-IS)")
    overlap = len(c.vertices & i.vertices)
    return overlap <= c.eps * c.size + i.eps * i.size


@dataclass(frozen=True)
class EpsMSystem:
    """m disjoint almost-ISs plus m disjoint almost-cliques (disjointness
    within each family only; empty structures allowed)."""

    cliques: tuple[AlmostStructure, ...]
    iss: tuple[AlmostStructure, ...]
    eps: Fraction
    m: int

    def __post_init__(self):
        if len(self.cliques) > self.m or len(self.iss) > self.m:
            raise ValueError(f"more than m={self.m} structures in a family")
        for family, kind in ((self.cliques, CLIQUE), (self.iss, INDEPENDENT_SET)):
            seen: set[int] = set()
            for st in family:
                if st.kind != kind:
                    raise ValueError(f"{kind} family holds a {st.kind} structure")
                if seen & st.vertices:
                    raise ValueError(f"{kind} family is not disjoint")
                seen |= st.vertices


def system_size(sys: EpsMSystem) -> int:
    """Union cardinality of the system, checked against its lower bound
    (1 - m*eps) * (sum of all structure sizes)."""
    union: set[int] = set()
    total = 0
    for st in sys.cliques + sys.iss:
        union |= st.vertices
        total += st.size
    size = len(union)
    bound = (1 - sys.m * sys.eps) * total
    if size < bound:
        raise AssertionError(f"system union {size} below bound {bound}")
    return size


@dataclass(frozen=True)
class AcceptableResult:
    """Outcome of the acceptable-graph search.

    ``structure`` is an eps-almost-clique of size >= target, or None
    meaning the input certifiably has no clique of the target size.
    ``calls`` counts recursive invocations (including base cases).
    """

    structure: AlmostStructure | None
    target: int
    eps: Fraction
    calls: int

    @property
    def found(self) -> bool:
        return self.structure is not None


def _find_acceptable_mask(
    adj: tuple[int, ...], mask: int, target: int, eps: Fraction
) -> tuple[int | None, int]:
    """Core recursion over a vertex mask of the host graph.

    Returns (acceptable mask or None, call count).  Requires
    eps*target >= 1: below that floor the min-degree branch can recurse
    on an unchanged vertex set (a complete subgraph never peels), so the
    recursion would not terminate.
    """
    num, den = eps.numerator, eps.denominator
    if num * target < den:
        raise AssertionError(f"eps*target = {eps * target} < 1")
    cnum = den - num  # h < (1-eps)*size  <=>  h*den < cnum*size
    calls = 0

    def rec(m: int) -> int | None:
        nonlocal calls
        calls += 1
        size = m.bit_count()
        if size < target:
            return None
        min_d = size
        min_v = -1
        bits = m
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            d = (adj[v] & m).bit_count()
            if d < min_d:  # strict: ties go to the lowest id
                min_d = d
                min_v = v
        if min_d * den < cnum * size:
            inner = rec(m & (adj[min_v] | (1 << min_v)))
            if inner is not None:
                return inner
            return rec(m & ~(1 << min_v))
        return m

    return rec(mask), calls


def find_acceptable_graph(g: Graph, k: int, eps) -> AcceptableResult:
    """Either certify that g has no k-clique, or return an
    eps-almost-clique of size at least k.

    Recursive contract: if fewer than k vertices remain, fail; otherwise
    take the minimum-degree vertex v (ties to the lowest id); if its
    degree is below (1-eps)|V|, try the subgraph induced by v's closed
    neighborhood and then the graph without v; otherwise the current
    graph qualifies.  Requires eps >= 2/k.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    eps = as_fraction(eps)
    if not 0 < eps < 1:
        raise ParameterError(f"eps must be in (0, 1), got {eps}")
    if eps * k < 2:
        raise ParameterError(f"eps = {eps} is below the admissible floor 2/k = {Fraction(2, k)}")
    mask, calls = _find_acceptable_mask(g.adj, g.full_mask, k, eps)
    if mask is None:
        return AcceptableResult(None, k, eps, calls)
    st = AlmostStructure(CLIQUE, frozenset(ids_of(mask)), eps)
    validate_structure(g, st)  # soundness of a positive answer, unconditional
    return AcceptableResult(st, k, eps, calls)


def find_acceptable_independent_set(g: Graph, k: int, eps) -> AcceptableResult:
    """Dual search: run the clique form on the complement and flip the kind."""
    res = find_acceptable_graph(g.complement(), k, eps)
    if res.structure is None:
        return res
    st = AlmostStructure(INDEPENDENT_SET, res.structure.vertices, res.eps)
    validate_structure(g, st)
    return AcceptableResult(st, res.target, res.eps, res.calls)
