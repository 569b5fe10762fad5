"""Polynomial-time search for a k-excluding vertex when n <= (4-delta)k,
emitting a certificate that names the requirement the vertex fails.

The run grows a family of disjoint almost-cliques round by round (then
mirrors onto the complement for the almost-IS side).  Three things can
certify a vertex along the way: the whole graph admits no k-clique at
all; a family member has too few non-edges leaving the family union to
ever sit in a k-IS; or a fresh candidate neighborhood cannot supply the
clique a k-clique through the chosen vertex would require.  Every
certificate stores the sets and counts needed to replay the arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .almost import (
    AlmostStructure,
    EpsMSystem,
    _find_acceptable_mask,
    system_size,
    validate_structure,
)
from .bounds import ExcluderParams, derive_params, union_floor
from .common import CLIQUE, INDEPENDENT_SET, ParameterError, as_fraction
from .graph import Graph, ids_of, mask_of
from .oracle import ClassificationReport, classify_all, has_clique_through, has_is_through

NO_K_CLIQUE = "no-k-clique"
NO_K_IS = "no-k-independent-set"

KIND_WHOLE_GRAPH = "whole-graph"
KIND_MEMBER_THRESHOLD = "member-threshold"
KIND_CANDIDATE = "candidate"
KIND_FALLBACK = "fallback"


@dataclass(frozen=True)
class ExclusionCertificate:
    """Machine-checkable evidence that ``vertex`` is k-excluding.

    ``side`` names the family under construction when the detection
    fired; ``kind`` picks the evidence layout.  member-threshold
    evidence carries the family union, the vertex's outward non-edge
    count in the side graph, and the threshold it fell short of;
    candidate evidence carries the candidate set and the search target
    derived from the vertex's non-edges into the union; whole-graph
    evidence replays the top-level no-clique search.  Fallback
    certificates (round -1) rest on the exact oracle alone.
    """

    vertex: int
    reason: str
    side: str
    kind: str
    round: int
    k: int
    delta: Fraction
    m: int
    eps: Fraction
    union_ids: tuple[int, ...] = ()
    observed: int | None = None
    threshold: Fraction | None = None
    candidate_ids: tuple[int, ...] | None = None
    target: int | None = None
    nonedges_to_union: int | None = None


@dataclass(frozen=True)
class SystemState:
    """Snapshot of one side's family when a run ended."""

    kind: str
    structures: tuple[AlmostStructure, ...]
    union_size: int
    rounds: int


@dataclass(frozen=True)
class SmallKFallback:
    """k at or below the cutoff (m+1)^2: the exact oracle answers instead."""

    k: int
    delta: Fraction
    params: ExcluderParams
    report: ClassificationReport

    @property
    def excluding_vertices(self) -> tuple[int, ...]:
        return self.report.excluding


@dataclass(frozen=True)
class InternalContradiction:
    """Both sides completed all m rounds without a certificate.

    Under the run's preconditions this cannot happen, so it flags an
    implementation bug; the full system state is kept for forensics.
    """

    n: int
    k: int
    clique_state: SystemState
    is_state: SystemState
    system: EpsMSystem
    size_lower: Fraction

    @property
    def bound_holds(self) -> bool:
        return self.size_lower <= self.n


def _run_side(
    h: Graph,
    k: int,
    delta: Fraction,
    params: ExcluderParams,
    side: str,
    trace: list | None,
) -> ExclusionCertificate | list[AlmostStructure]:
    """Grow one side's family on the side graph h (the complement when
    side is the IS family); return a certificate or the full family."""
    m, eps = params.m, params.eps
    adj, n, full = h.adj, h.n, h.full_mask
    primary = NO_K_CLIQUE if side == CLIQUE else NO_K_IS
    secondary = NO_K_IS if side == CLIQUE else NO_K_CLIQUE
    structures: list[AlmostStructure] = []
    union = 0
    degenerate = False
    floor_active = n <= 4 * k - 6 * eps * k - 3 * (m + 1)

    def make_structure(mask: int) -> AlmostStructure:
        checked = AlmostStructure(CLIQUE, frozenset(ids_of(mask)), eps)
        validate_structure(h, checked)
        return AlmostStructure(side, checked.vertices, eps)

    def finish(cert: ExclusionCertificate | None, rounds: int):
        if trace is not None:
            trace.append(
                SystemState(side, tuple(structures), union.bit_count(), rounds)
            )
        return cert if cert is not None else structures

    base = dict(side=side, k=k, delta=delta, m=m, eps=eps)

    res_mask, _ = _find_acceptable_mask(adj, full, k, eps)
    if res_mask is None:
        # no vertex of h is in any k-clique at all; vertex 0 stands in
        cert = ExclusionCertificate(
            vertex=0, reason=primary, kind=KIND_WHOLE_GRAPH, round=0, target=k, **base
        )
        return finish(cert, 0)
    structures.append(make_structure(res_mask))
    union = res_mask

    for j in range(1, m):
        cj = union.bit_count()
        threshold = k - eps * cj - j - 1
        bits = union
        while bits:
            low = bits & -bits
            u = low.bit_length() - 1
            bits ^= low
            nonedges_out = (n - cj) - (adj[u] & ~union).bit_count()
            if nonedges_out < threshold:  # strict shortfall only
                cert = ExclusionCertificate(
                    vertex=u,
                    reason=secondary,
                    kind=KIND_MEMBER_THRESHOLD,
                    round=j,
                    union_ids=ids_of(union),
                    observed=nonedges_out,
                    threshold=threshold,
                    **base,
                )
                return finish(cert, j)
        outside = full & ~union
        if not outside:
            structures.append(AlmostStructure(side, frozenset(), eps))
            degenerate = True
            continue
        best_v, best_t = -1, -1
        bits = outside
        while bits:
            low = bits & -bits
            v = low.bit_length() - 1
            bits ^= low
            t = cj - (adj[v] & union).bit_count()
            if t > best_t:  # strict: ties go to the lowest id
                best_t, best_v = t, v
        target = k - (cj - best_t)
        if target < 1 or eps * target < 1:
            # below the sensibility floor eps*target >= 1 the recursion is
            # not runnable and no nonempty structure of that size would
            # meet its degree condition; append an empty set instead
            structures.append(AlmostStructure(side, frozenset(), eps))
            degenerate = True
            continue
        cand = (adj[best_v] & outside) | (1 << best_v)
        res_mask, _ = _find_acceptable_mask(adj, cand, target, eps)
        if res_mask is None:
            cert = ExclusionCertificate(
                vertex=best_v,
                reason=primary,
                kind=KIND_CANDIDATE,
                round=j,
                union_ids=ids_of(union),
                candidate_ids=ids_of(cand),
                target=target,
                nonedges_to_union=best_t,
                **base,
            )
            return finish(cert, j)
        assert res_mask & union == 0, "family structures must stay disjoint"
        structures.append(make_structure(res_mask))
        union |= res_mask
        assert union.bit_count() >= cj + target
        if floor_active and not degenerate:
            assert union.bit_count() >= union_floor(j + 1, k)
    return finish(None, m)


def find_excluding_poly(
    g: Graph, k: int, delta, trace: list | None = None
) -> ExclusionCertificate | SmallKFallback | InternalContradiction:
    """Find a k-excluding vertex of g in the regime n <= (4 - delta)k.

    For k at or below the derived cutoff the exact oracle takes over
    (SmallKFallback).  Otherwise the clique side runs fully, then the IS
    side on the complement; the first certificate wins.  If both sides
    complete, InternalContradiction reports the full state.  Pass a list
    as ``trace`` to collect each side's SystemState.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    delta = as_fraction(delta)
    if not 0 < delta <= 1:
        raise ParameterError(f"delta must be in (0, 1], got {delta}")
    if g.n > (4 - delta) * k:
        raise ParameterError(
            f"n={g.n} exceeds (4 - delta)k = {(4 - delta) * k}; outside the regime"
        )
    params = derive_params(delta)
    if k <= params.k_min:
        return SmallKFallback(k, delta, params, classify_all(g, k))

    out = _run_side(g, k, delta, params, CLIQUE, trace)
    if isinstance(out, ExclusionCertificate):
        return out
    clique_structures = out
    out = _run_side(g.complement(), k, delta, params, INDEPENDENT_SET, trace)
    if isinstance(out, ExclusionCertificate):
        return out
    is_structures = out

    system = EpsMSystem(
        cliques=tuple(clique_structures),
        iss=tuple(is_structures),
        eps=params.eps,
        m=params.m,
    )
    system_size(system)  # runtime check of the union's lower bound
    size_lower = 2 * (1 - params.eps * params.m) * (2 - Fraction(2, params.m + 1)) * k

    def family_union(structures) -> int:
        return len(frozenset().union(*(st.vertices for st in structures)))

    return InternalContradiction(
        n=g.n,
        k=k,
        clique_state=SystemState(
            CLIQUE, tuple(clique_structures), family_union(clique_structures), params.m
        ),
        is_state=SystemState(
            INDEPENDENT_SET, tuple(is_structures), family_union(is_structures), params.m
        ),
        system=system,
        size_lower=size_lower,
    )


def fallback_certificate(fb: SmallKFallback) -> ExclusionCertificate | None:
    """Oracle-backed certificate for the first excluding vertex, if any.

    When a vertex fails both requirements, the clique side is named.
    """
    for rec in fb.report.vertices:
        if not rec.enabling_for(fb.k):
            reason = NO_K_CLIQUE if rec.max_clique_through < fb.k else NO_K_IS
            side = CLIQUE if reason == NO_K_CLIQUE else INDEPENDENT_SET
            return ExclusionCertificate(
                vertex=rec.vertex,
                reason=reason,
                side=side,
                kind=KIND_FALLBACK,
                round=-1,
                k=fb.k,
                delta=fb.delta,
                m=fb.params.m,
                eps=fb.params.eps,
            )
    return None


def verify_certificate_detail(
    g: Graph, k: int, cert: ExclusionCertificate
) -> tuple[bool, list[str]]:
    """Replay the certificate's arithmetic from its stored sets and ask
    the exact oracle about the named vertex; list every discrepancy."""
    problems: list[str] = []
    if cert.k != k:
        problems.append(f"certificate is for k={cert.k}, not k={k}")
    if not 0 <= cert.vertex < g.n:
        problems.append(f"vertex {cert.vertex} out of range")
        return False, problems
    try:
        params = derive_params(cert.delta)
    except ParameterError as exc:
        return False, [str(exc)]
    if params.m != cert.m or params.eps != cert.eps:
        problems.append("stored (m, eps) do not match the delta derivation")

    if cert.kind != KIND_FALLBACK:
        h = g if cert.side == CLIQUE else g.complement()
        try:
            union = mask_of(cert.union_ids, g.n)
        except ValueError as exc:
            return False, [str(exc)]
        cj = union.bit_count()
        if cert.kind == KIND_WHOLE_GRAPH:
            if cert.target != k:
                problems.append("whole-graph target differs from k")
            res, _ = _find_acceptable_mask(h.adj, h.full_mask, k, cert.eps)
            if res is not None:
                problems.append("whole-graph no-clique result did not reproduce")
        elif cert.kind == KIND_MEMBER_THRESHOLD:
            if not union >> cert.vertex & 1:
                problems.append("vertex is not in the stored union")
            else:
                observed = (g.n - cj) - (h.adj[cert.vertex] & ~union).bit_count()
                threshold = k - cert.eps * cj - cert.round - 1
                if observed != cert.observed:
                    problems.append(
                        f"recomputed non-edge count {observed} != stored {cert.observed}"
                    )
                if threshold != cert.threshold:
                    problems.append(
                        f"recomputed threshold {threshold} != stored {cert.threshold}"
                    )
                if not observed < threshold:
                    problems.append("stored evidence does not fall short of the threshold")
        elif cert.kind == KIND_CANDIDATE:
            if union >> cert.vertex & 1:
                problems.append("candidate vertex lies inside the stored union")
            else:
                t = cj - (h.adj[cert.vertex] & union).bit_count()
                target = k - (cj - t)
                if t != cert.nonedges_to_union:
                    problems.append(
                        f"recomputed union non-edges {t} != stored {cert.nonedges_to_union}"
                    )
                if target != cert.target:
                    problems.append(f"recomputed target {target} != stored {cert.target}")
                cand = (h.adj[cert.vertex] & h.full_mask & ~union) | (1 << cert.vertex)
                if cand != mask_of(cert.candidate_ids or (), g.n):
                    problems.append("stored candidate set does not match the vertex")
                elif target >= 1 and cert.eps * target >= 1:
                    res, _ = _find_acceptable_mask(h.adj, cand, target, cert.eps)
                    if res is not None:
                        problems.append("candidate no-clique result did not reproduce")
                else:
                    problems.append("candidate target is below the runnable floor")
        else:
            problems.append(f"unknown evidence kind {cert.kind!r}")

    if cert.reason == NO_K_CLIQUE:
        if has_clique_through(g, cert.vertex, k):
            problems.append("oracle: the vertex does sit in a k-clique")
    elif cert.reason == NO_K_IS:
        if has_is_through(g, cert.vertex, k):
            problems.append("oracle: the vertex does sit in a k-independent-set")
    else:
        problems.append(f"unknown reason {cert.reason!r}")
    return not problems, problems


def verify_certificate(g: Graph, k: int, cert: ExclusionCertificate) -> bool:
    ok, _ = verify_certificate_detail(g, k, cert)
    return ok
