"""Exhaustive computation of k(n) and n(k) at desk scale.

Labeled mode walks every adjacency bitmask (capped at n <= 7, 2^21
graphs); canonical mode grows graphs one vertex at a time and keeps one
representative per isomorphism class via a canonical labeling (capped at
n <= 9).  Labeled scans early-exit on graphs whose degree sequence
already rules out improving the running best.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .common import ParameterError
from .graph import Graph

LABELED_CAP = 7
CANONICAL_CAP = 9


@dataclass(frozen=True)
class KTable:
    """Result of an exhaustive k(n) computation with its witness graph."""

    n: int
    k_of_n: int
    witness: Graph
    mode: str
    graphs_scanned: int
    exhaustive: bool = True


def _pair_slots(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _incidence_masks(n: int, slots: list[tuple[int, int]]) -> list[int]:
    inc = [0] * n
    for i, (u, v) in enumerate(slots):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return inc


def _subset_masks(n: int, slots: list[tuple[int, int]]):
    """For each size t and vertex v: pair-slot masks of all t-subsets
    containing v.  One table serves both clique and IS membership tests."""
    slot_index = {uv: i for i, uv in enumerate(slots)}
    by_size: dict[int, list[list[int]]] = {t: [[] for _ in range(n)] for t in range(1, n + 1)}
    for subset in range(1, 1 << n):
        members = [v for v in range(n) if subset >> v & 1]
        pm = 0
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                pm |= 1 << slot_index[(members[a], members[b])]
        for v in members:
            by_size[len(members)][v].append(pm)
    return by_size


def _all_enabling(edge_mask: int, t: int, table_t: list[list[int]]) -> bool:
    """Does every vertex lie in both a t-clique and a t-IS of this graph?"""
    for masks in table_t:
        if not any(pm & ~edge_mask == 0 for pm in masks):
            return False
        if not any(pm & edge_mask == 0 for pm in masks):
            return False
    return True


def _scan_labeled_range(args: tuple[int, int, int]) -> tuple[int, int | None]:
    """Worker: best k over adjacency bitmasks in [lo, hi) with a witness."""
    n, lo, hi = args
    slots = _pair_slots(n)
    inc = _incidence_masks(n, slots)
    tables = _subset_masks(n, slots)
    best = 0
    witness = None
    n1 = n - 1
    verts = range(n)
    for m in range(lo, hi):
        need = best  # to reach best+1 every degree must lie in [best, n-1-best]
        ok = True
        for v in verts:
            d = (m & inc[v]).bit_count()
            if d < need or d > n1 - need:
                ok = False
                break
        if not ok:
            continue
        t = best + 1
        while t <= n and _all_enabling(m, t, tables[t]):
            best = t
            witness = m
            t += 1
    return best, witness


def _graph_from_edge_mask(n: int, edge_mask: int) -> Graph:
    rows = [0] * n
    for i, (u, v) in enumerate(_pair_slots(n)):
        if edge_mask >> i & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _k_of_rows(n: int, rows: tuple[int, ...], tables) -> int:
    slots = _pair_slots(n)
    em = 0
    for i, (u, v) in enumerate(slots):
        if rows[u] >> v & 1:
            em |= 1 << i
    t = 1
    while t <= n and _all_enabling(em, t, tables[t]):
        t += 1
    return t - 1


def canonical_form(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical relabeling of adjacency rows: identical tuples iff the
    graphs are isomorphic.

    Searches for the permutation minimizing the column-major upper
    triangle bitstring, with two sound prunes: branches whose column
    prefix exceeds the best found are dropped, and interchangeable twin
    vertices (identical rows outside the pair) are explored only once.
    """
    if n <= 1:
        return tuple(rows)
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None

    def twins(u: int, v: int) -> bool:
        strip = ~((1 << u) | (1 << v))
        return rows[u] & strip == rows[v] & strip

    def rec(perm: list[int], placed: int, cols: list[int], equal_prefix: bool) -> bool:
        nonlocal best_cols, best_perm
        j = len(perm)
        if j == n:
            if not equal_prefix or best_cols is None:
                best_cols = cols.copy()
                best_perm = perm.copy()
                return True
            return False
        cand = []
        bits = ((1 << n) - 1) & ~placed
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            col = 0
            row = rows[v]
            for u in perm:
                col = (col << 1) | (row >> u & 1)
            cand.append((col, v))
        cand.sort()
        changed_any = False
        i = 0
        while i < len(cand):
            col = cand[i][0]
            group = []
            while i < len(cand) and cand[i][0] == col:
                group.append(cand[i][1])
                i += 1
            if equal_prefix and best_cols is not None:
                if col > best_cols[j]:
                    break
                child_equal = col == best_cols[j]
            else:
                child_equal = False
            reps: list[int] = []
            for v in group:
                if not any(twins(u, v) for u in reps):
                    reps.append(v)
            for v in reps:
                cols.append(col)
                perm.append(v)
                changed = rec(perm, placed | (1 << v), cols, child_equal)
                perm.pop()
                cols.pop()
                if changed:
                    changed_any = True
                    # new best shares our prefix including this column
                    equal_prefix = True
                    child_equal = True
        return changed_any

    rec([], 0, [], False)
    assert best_perm is not None
    relabeled = [0] * n
    for new_u, old_u in enumerate(best_perm):
        row = rows[old_u]
        packed = 0
        for new_v, old_v in enumerate(best_perm):
            if row >> old_v & 1:
                packed |= 1 << new_v
        relabeled[new_u] = packed
    return tuple(relabeled)


def enumerate_canonical(n: int) -> list[tuple[int, ...]]:
    """All graphs on n vertices up to isomorphism, as canonical row tuples.

    Grows level by level: every (i+1)-vertex graph arises from some
    i-vertex graph by attaching one vertex, so augmenting canonical
    representatives with every neighbor mask and re-canonicalizing
    covers each class at least once; a per-level set dedupes.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    level: set[tuple[int, ...]] = {(0,)}
    for size in range(1, n):
        nxt: set[tuple[int, ...]] = set()
        for rows in level:
            for nbr_mask in range(1 << size):
                grown = tuple(
                    row | ((nbr_mask >> u & 1) << size) for u, row in enumerate(rows)
                ) + (nbr_mask,)
                nxt.add(canonical_form(size + 1, grown))
        level = nxt
    return sorted(level)


def k_of_n_exhaustive(n: int, mode: str = "labeled", threads: int = 1) -> KTable:
    """Exact k(n): the largest k some n-vertex graph is k-enabling for.

    Labeled mode scans all 2^(n choose 2) bitmasks and allows n <= 7;
    canonical mode scans isomorphism classes and allows n <= 9.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    if mode == "labeled":
        if n > LABELED_CAP:
            raise ParameterError(
                f"labeled mode is capped at n <= {LABELED_CAP} (got n={n}); use canonical mode"
            )
        total = 1 << len(_pair_slots(n))
        chunks = max(1, min(threads * 4, total))
        step = (total + chunks - 1) // chunks
        ranges = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
        if threads > 1 and len(ranges) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_scan_labeled_range, ranges))
        else:
            results = [_scan_labeled_range(r) for r in ranges]
        best = max(b for b, _ in results)
        witness_mask = min(w for b, w in results if b == best and w is not None)
        return KTable(n, best, _graph_from_edge_mask(n, witness_mask), "labeled", total)
    if mode == "canonical":
        if n > CANONICAL_CAP:
            raise ParameterError(
                f"canonical mode is capped at n <= {CANONICAL_CAP} (got n={n})"
            )
        reps = enumerate_canonical(n)
        tables = _subset_masks(n, _pair_slots(n))
        best = 0
        witness: tuple[int, ...] | None = None
        for rows in reps:
            k = _k_of_rows(n, rows, tables)
            if k > best:
                best = k
                witness = rows
        assert witness is not None
        return KTable(n, best, Graph(n, witness), "canonical", len(reps))
    raise ParameterError(f"unknown mode {mode!r}; expected 'labeled' or 'canonical'")


def _exists_labeled(n: int, k: int) -> bool:
    """Is any n-vertex graph k-enabling?  Early exit on the first hit."""
    slots = _pair_slots(n)
    inc = _incidence_masks(n, slots)
    tables = _subset_masks(n, slots)
    n1 = n - 1
    verts = range(n)
    need = k - 1
    for m in range(1 << len(slots)):
        ok = True
        for v in verts:
            d = (m & inc[v]).bit_count()
            if d < need or d > n1 - need:
                ok = False
                break
        if ok and _all_enabling(m, k, tables[k]):
            return True
    return False


def n_of_k_small(k: int) -> int:
    """Smallest n admitting a k-enabling graph; exhaustive, so k <= 3.

    Scanning starts at the proven floor (2k-1, and 3k-3 once k >= 3);
    beyond the labeled cap the first decidable point is n = 4(k-1),
    where the blown-up path supplies a witness.
    """
    from .generators import gen_4pd
    from .oracle import k_of_graph

    if k < 1:
        raise ParameterError("k must be >= 1")
    if k > 3:
        raise ParameterError("exhaustive n(k) is only feasible for k <= 3")
    if k == 1:
        return 1
    start = max(2 * k - 1, 3 * k - 3 if k >= 3 else 0)
    n = start
    while True:
        if n <= LABELED_CAP:
            if k <= n and _exists_labeled(n, k):
                return n
        elif n == 4 * (k - 1):
            g, _ = gen_4pd(k - 1)
            if k_of_graph(g) >= k:
                return n
            raise AssertionError(f"expected 4P_{k - 1} to be {k}-enabling")
        else:
            raise ParameterError(
                f"cannot decide existence at n={n} (beyond the labeled cap)"
            )
        n += 1
