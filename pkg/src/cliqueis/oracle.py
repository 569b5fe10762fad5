"""Exact ground truth: maximum clique / independent set through a vertex
via branch and bound, and full per-vertex k-enabling classification.

The solver is a Tomita-style search: at every node the candidate set is
greedy-colored (vertices taken in descending candidate-degree order, ties
to the lowest id) and the color count bounds the attainable clique size.
Everything is deterministic; there is no randomization anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, ids_of


class _TargetReached(Exception):
    pass


def _greedy_clique(adj: tuple[int, ...], cand: int) -> int:
    """Quick deterministic clique mask used to seed the search floor."""
    clique = 0
    pool = cand
    while pool:
        best_v, best_deg = -1, -1
        bits = pool
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            d = (adj[v] & pool).bit_count()
            if d > best_deg:
                best_deg, best_v = d, v
        clique |= 1 << best_v
        pool &= adj[best_v]
    return clique


def _color_order(adj, cand):
    """Greedy coloring of the candidate mask.

    Returns (order, bounds): vertices grouped by ascending color class,
    each paired with its class index + 1 (an upper bound on any clique
    inside the remaining candidates up to that vertex).
    """
    verts = []
    bits = cand
    while bits:
        low = bits & -bits
        v = low.bit_length() - 1
        bits ^= low
        verts.append(((adj[v] & cand).bit_count(), v))
    verts.sort(key=lambda t: (-t[0], t[1]))
    classes: list[int] = []
    order: list[int] = []
    bounds: list[int] = []
    assignment: list[list[int]] = []
    for _, v in verts:
        row = adj[v]
        for ci, cmask in enumerate(classes):
            if not cmask & row:
                classes[ci] = cmask | (1 << v)
                assignment[ci].append(v)
                break
        else:
            classes.append(1 << v)
            assignment.append([v])
    for ci, members in enumerate(assignment):
        for v in members:
            order.append(v)
            bounds.append(ci + 1)
    return order, bounds


class _MaxCliqueSearch:
    def __init__(self, adj, floor: int, stop_at: int | None):
        self.adj = adj
        self.best = floor
        self.best_mask = 0
        self.stop_at = stop_at

    def run(self, cand: int) -> None:
        seed = _greedy_clique(self.adj, cand)
        if seed.bit_count() > self.best:
            self.best = seed.bit_count()
            self.best_mask = seed
            if self.stop_at is not None and self.best >= self.stop_at:
                return
        try:
            self._expand(0, 0, cand)
        except _TargetReached:
            pass

    def _expand(self, size: int, r_mask: int, cand: int) -> None:
        adj = self.adj
        order, bounds = _color_order(adj, cand)
        pool = cand
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= self.best:
                return
            v = order[i]
            bit = 1 << v
            if not pool & bit:
                continue
            nxt = pool & adj[v]
            if nxt:
                self._expand(size + 1, r_mask | bit, nxt)
            elif size + 1 > self.best:
                self.best = size + 1
                self.best_mask = r_mask | bit
                if self.stop_at is not None and self.best >= self.stop_at:
                    raise _TargetReached
            pool &= ~bit
        return


def max_clique_mask(g: Graph, cand: int | None = None) -> tuple[int, int]:
    """Exact maximum clique inside the candidate mask; returns (size, mask)."""
    if cand is None:
        cand = g.full_mask
    if not cand:
        return 0, 0
    search = _MaxCliqueSearch(g.adj, 0, None)
    search.run(cand)
    return search.best, search.best_mask


def _has_clique_mask(g: Graph, cand: int, target: int) -> tuple[bool, int]:
    """Decide whether the candidate mask holds a clique of the target size."""
    if target <= 0:
        return True, 0
    if cand.bit_count() < target:
        return False, 0
    search = _MaxCliqueSearch(g.adj, target - 1, target)
    search.run(cand)
    if search.best >= target:
        return True, search.best_mask
    return False, 0


def max_clique(g: Graph) -> tuple[int, frozenset[int]]:
    size, mask = max_clique_mask(g)
    return size, frozenset(ids_of(mask))


def max_independent_set(g: Graph) -> tuple[int, frozenset[int]]:
    return max_clique(g.complement())


def max_clique_through(g: Graph, v: int) -> tuple[int, frozenset[int]]:
    """Largest clique containing v: 1 + maximum clique in v's neighborhood."""
    g._check_vertex(v)
    size, mask = max_clique_mask(g, g.adj[v])
    witness = frozenset(ids_of(mask | (1 << v)))
    assert g.is_clique(witness) and v in witness
    return size + 1, witness


def max_is_through(g: Graph, v: int) -> tuple[int, frozenset[int]]:
    """Largest independent set containing v, via the complement graph."""
    size, witness = max_clique_through(g.complement(), v)
    assert g.is_independent_set(witness) and v in witness
    return size, witness


def has_clique_through(g: Graph, v: int, k: int) -> bool:
    """Does some clique of size k contain v?  Early-exit decision form."""
    g._check_vertex(v)
    if k <= 1:
        return True
    found, _ = _has_clique_mask(g, g.adj[v], k - 1)
    return found


def has_is_through(g: Graph, v: int, k: int) -> bool:
    return has_clique_through(g.complement(), v, k)


@dataclass(frozen=True)
class VertexClassification:
    """Exact per-vertex record: the largest clique and independent set
    through the vertex, with witnesses."""

    vertex: int
    max_clique_through: int
    max_is_through: int
    witness_clique: frozenset[int]
    witness_is: frozenset[int]

    def enabling_for(self, k: int) -> bool:
        return min(self.max_clique_through, self.max_is_through) >= k


@dataclass(frozen=True)
class ClassificationReport:
    """classify_all output: per-vertex records plus the k-level summary."""

    k: int
    vertices: tuple[VertexClassification, ...]

    @property
    def excluding(self) -> tuple[int, ...]:
        return tuple(c.vertex for c in self.vertices if not c.enabling_for(self.k))

    @property
    def is_k_enabling(self) -> bool:
        return not self.excluding


def classify_vertex(
    g: Graph, v: int, complement_cache: Graph | None = None
) -> VertexClassification:
    gc = g.complement() if complement_cache is None else complement_cache
    w, cw = max_clique_through(g, v)
    a, aw = max_clique_through(gc, v)
    assert g.is_independent_set(aw)
    assert len(cw & aw) <= 1  # a clique and an IS are almost disjoint
    return VertexClassification(v, w, a, cw, aw)


def classify_all(g: Graph, k: int) -> ClassificationReport:
    """Exact classification of every vertex at level k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    gc = g.complement()
    records = tuple(classify_vertex(g, v, gc) for v in range(g.n))
    return ClassificationReport(k, records)


def k_of_graph(g: Graph) -> int:
    """Largest k for which every vertex is k-enabling."""
    if g.n == 0:
        raise ValueError("k is undefined for the empty graph")
    gc = g.complement()
    best = g.n
    for v in range(g.n):
        w, _ = max_clique_mask(g, g.adj[v])
        a, _ = max_clique_mask(gc, gc.adj[v])
        best = min(best, w + 1, a + 1)
        if best == 1:
            break
    return best
