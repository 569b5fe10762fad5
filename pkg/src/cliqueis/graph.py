"""Immutable undirected simple graphs over bit-packed adjacency rows.

Vertices are dense integers 0..n-1.  Each adjacency row is a Python int
used as a bitset, so neighborhood intersections and degree queries are
single ``&``/``bit_count`` operations.  Vertex sets cross the public API
as ordinary iterables of ints; internally everything is a bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def mask_of(members: Iterable[int], n: int) -> int:
    """Pack vertex ids into a bitmask, validating the 0..n-1 range."""
    mask = 0
    for v in members:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


def ids_of(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into ascending vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; immutable after construction.

    ``adj[u]`` has bit ``v`` set iff (u, v) is an edge.  Construction
    rejects asymmetric rows and self-loops, so every Graph in the system
    satisfies the symmetry / no-loop invariants by fiat.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {u} mentions vertices >= {self.n}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
        for u in range(self.n):
            row = self.adj[u]
            v_bits = row
            while v_bits:
                low = v_bits & -v_bits
                v = low.bit_length() - 1
                v_bits ^= low
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered endpoint pairs; duplicates collapse.

        Raises ValueError naming the offending pair on out-of-range
        endpoints or self-loops.
        """
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop edge ({u},{v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    yield (u, v)
                higher >>= 1
                v += 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degree_in(self, v: int, members: Iterable[int]) -> int:
        """Number of neighbors of v inside the given set (the S-degree).

        Whether v itself belongs to the set is irrelevant: rows never
        carry the self bit.
        """
        self._check_vertex(v)
        return (self.adj[v] & mask_of(members, self.n)).bit_count()

    def complement(self) -> "Graph":
        """Edge/non-edge swap on all vertex pairs; an involution."""
        full = self.full_mask
        rows = tuple(~row & full & ~(1 << u) for u, row in enumerate(self.adj))
        return Graph(self.n, rows)

    def induced_subgraph(self, members: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph on the given vertices, plus the new-id -> old-id table.

        New ids follow ascending old ids, so the remap table round-trips
        adjacency exactly.
        """
        mask = mask_of(members, self.n)
        table = ids_of(mask)
        index = {old: new for new, old in enumerate(table)}
        rows = []
        for old in table:
            row = self.adj[old] & mask
            packed = 0
            while row:
                low = row & -row
                packed |= 1 << index[low.bit_length() - 1]
                row ^= low
            rows.append(packed)
        return Graph(len(table), tuple(rows)), table

    def is_clique(self, members: Iterable[int]) -> bool:
        """True iff all pairs inside the set are adjacent (empty and
        singleton sets count)."""
        mask = mask_of(members, self.n)
        rest = mask
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if mask & ~self.adj[u] & ~low:
                return False
        return True

    def is_independent_set(self, members: Iterable[int]) -> bool:
        """True iff no pair inside the set is adjacent."""
        mask = mask_of(members, self.n)
        rest = mask
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            if mask & self.adj[u]:
                return False
        return True

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
