"""Graph and certificate file formats.

Graphs travel as a DIMACS-like text format ("p <n> <m>" header, one
"e <u> <v>" line per edge, 0-indexed, comment lines start with "c"), or
as single-line graph6 for compact enumeration interop.  Certificates are
JSON documents embedding a content hash of the graph so stale pairs fail
fast.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from .common import GraphParseError
from .excluder import ExclusionCertificate
from .graph import Graph


def dump_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.num_edges}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(dump_graph(g))


def parse_graph(text: str) -> Graph:
    """Parse the DIMACS-like format; malformed input names its line."""
    n = None
    declared_edges = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate header", lineno)
            if len(fields) != 3:
                raise GraphParseError("header must be 'p <n> <edges>'", lineno)
            try:
                n, declared_edges = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError("non-integer header fields", lineno) from None
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError("edge before header", lineno)
            if len(fields) != 3:
                raise GraphParseError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError("non-integer endpoints", lineno) from None
            if u == v:
                raise GraphParseError(f"self-loop ({u},{v})", lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(f"endpoint out of range in ({u},{v})", lineno)
            edges.append((u, v))
        else:
            raise GraphParseError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p' header", 1)
    g = Graph.from_edges(n, edges)
    if declared_edges is not None and g.num_edges != declared_edges:
        raise GraphParseError(
            f"header declares {declared_edges} edges but {g.num_edges} are distinct", 1
        )
    return g


def to_graph6(g: Graph) -> str:
    """Encode in graph6 (supports n < 258048)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    else:
        raise ValueError(f"graph too large for this graph6 writer: n={n}")
    bits: list[int] = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return head + "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphParseError("empty graph6 string", 1)
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise GraphParseError("invalid graph6 character", 1)
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphParseError("unsupported graph6 size header", 1)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphParseError(
            f"graph6 body has {len(body)} characters, expected {need} for n={n}", 1
        )
    bits: list[int] = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(rows))


def load_graph(path: str | Path) -> Graph:
    """Load a graph file, autodetecting the two formats."""
    text = Path(path).read_text()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p "):
            return parse_graph(text)
        return from_graph6(line)
    raise GraphParseError("empty graph file", 1)


def graph_sha256(g: Graph) -> str:
    return hashlib.sha256(dump_graph(g).encode()).hexdigest()


CERTIFICATE_FORMAT = "cliqueis-certificate-v1"


def _frac_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def save_certificate(cert: ExclusionCertificate, g: Graph, path: str | Path) -> None:
    doc = {
        "format": CERTIFICATE_FORMAT,
        "graph_sha256": graph_sha256(g),
        "n": g.n,
        "k": cert.k,
        "delta": _frac_str(cert.delta),
        "m": cert.m,
        "eps": _frac_str(cert.eps),
        "vertex": cert.vertex,
        "reason": cert.reason,
        "side": cert.side,
        "kind": cert.kind,
        "round": cert.round,
        "union": list(cert.union_ids),
        "observed": cert.observed,
        "threshold": _frac_str(cert.threshold),
        "candidate": None if cert.candidate_ids is None else list(cert.candidate_ids),
        "target": cert.target,
        "nonedges_to_union": cert.nonedges_to_union,
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def load_certificate(path: str | Path) -> tuple[ExclusionCertificate, str, int]:
    """Read back a certificate file: (certificate, graph hash, n)."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"not valid JSON: {exc}", exc.lineno) from None
    if doc.get("format") != CERTIFICATE_FORMAT:
        raise GraphParseError(f"unknown certificate format {doc.get('format')!r}", 1)
    try:
        cert = ExclusionCertificate(
            vertex=int(doc["vertex"]),
            reason=doc["reason"],
            side=doc["side"],
            kind=doc["kind"],
            round=int(doc["round"]),
            k=int(doc["k"]),
            delta=Fraction(doc["delta"]),
            m=int(doc["m"]),
            eps=Fraction(doc["eps"]),
            union_ids=tuple(int(v) for v in doc["union"]),
            observed=None if doc["observed"] is None else int(doc["observed"]),
            threshold=None if doc["threshold"] is None else Fraction(doc["threshold"]),
            candidate_ids=(
                None
                if doc["candidate"] is None
                else tuple(int(v) for v in doc["candidate"])
            ),
            target=None if doc["target"] is None else int(doc["target"]),
            nonedges_to_union=(
                None
                if doc["nonedges_to_union"] is None
                else int(doc["nonedges_to_union"])
            ),
        )
    except (KeyError, ValueError) as exc:
        raise GraphParseError(f"bad certificate field: {exc}", 1) from None
    return cert, doc["graph_sha256"], int(doc["n"])
