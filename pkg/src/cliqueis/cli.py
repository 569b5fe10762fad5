"""Command-line surface.

Exit codes: 0 on success or a positive verdict (PASS, enabling, zero
excluding vertices, certificate produced), 1 on a negative verdict or
FAIL, 2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import sys

from .almost import find_acceptable_graph
from .bounds import derive_params, kj_sequence, min_order_lower_bound, msystem_size_lower
from .common import DivergenceSignal, GraphParseError, ParameterError, as_fraction
from .enumeration import k_of_n_exhaustive
from .excluder import (
    ExclusionCertificate,
    InternalContradiction,
    SmallKFallback,
    fallback_certificate,
    find_excluding_poly,
    verify_certificate_detail,
)
from .formats import (
    graph_sha256,
    load_certificate,
    load_graph,
    save_certificate,
    save_graph,
    to_graph6,
)
from .generators import (
    append_isolated,
    gen_4pd,
    gen_gnp,
    gen_hardness_reduction,
    gen_planted,
)
from .oracle import classify_all, classify_vertex


def _fmt_set(vertices) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vertices)) + "}"


def cmd_gen(args) -> int:
    if args.family == "4pd":
        g, layout = gen_4pd(args.d)
        print(f"4P_{args.d}: {g.n} vertices, {g.num_edges} edges")
    elif args.family == "gnp":
        g = gen_gnp(args.n, args.p, args.seed)
        print(f"G({args.n}, {args.p}) seed={args.seed}: {g.num_edges} edges")
    elif args.family == "planted":
        g, planted = gen_planted(args.n, args.p, args.size, args.kind, args.seed)
        print(f"planted {args.kind} of size {args.size}: {_fmt_set(planted)}")
    elif args.family == "reduction":
        g1 = load_graph(args.g1)
        g, meta = gen_hardness_reduction(g1, args.k, args.eps)
        print(
            f"reduction instance: {g.n} vertices, |S|={len(meta.s_ids)}, "
            f"|T|={len(meta.t_ids)}, g1 embedded at {meta.g1_ids[0]}..{meta.g1_ids[-1]}"
        )
    elif args.family == "isolated":
        g = append_isolated(load_graph(args.graph), args.count)
        print(f"appended {args.count} isolated vertices: now {g.n} vertices")
    else:  # pragma: no cover - argparse restricts choices
        raise ParameterError(f"unknown family {args.family!r}")
    save_graph(g, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_check(args) -> int:
    g = load_graph(args.graph)
    rec = classify_vertex(g, args.vertex)
    verdict = "ENABLING" if rec.enabling_for(args.k) else "EXCLUDING"
    print(f"vertex {args.vertex}: {verdict} for k={args.k}")
    print(f"  max clique through: {rec.max_clique_through} {_fmt_set(rec.witness_clique)}")
    print(f"  max IS through:     {rec.max_is_through} {_fmt_set(rec.witness_is)}")
    return 0 if verdict == "ENABLING" else 1


def cmd_scan(args) -> int:
    g = load_graph(args.graph)
    report = classify_all(g, args.k)
    excluding = report.excluding
    print(f"{len(excluding)} excluding vertices")
    for v in excluding:
        rec = report.vertices[v]
        sides = []
        if rec.max_clique_through < args.k:
            sides.append(f"no {args.k}-clique (max {rec.max_clique_through})")
        if rec.max_is_through < args.k:
            sides.append(f"no {args.k}-IS (max {rec.max_is_through})")
        print(f"  {v}: " + "; ".join(sides))
    return 0 if not excluding else 1


def cmd_kfn(args) -> int:
    table = k_of_n_exhaustive(args.n, mode=args.mode, threads=args.threads)
    print(f"k({args.n}) = {table.k_of_n}")
    print(f"witness (graph6): {to_graph6(table.witness)}")
    print(f"scanned {table.graphs_scanned} graphs in {table.mode} mode")
    if args.out:
        save_graph(table.witness, args.out)
        print(f"wrote witness to {args.out}")
    return 0


def cmd_bounds(args) -> int:
    k, m = args.k, args.m
    print(f"k={k} m={m}")
    if k >= m**3:
        print(f"minimum order of a fully k-enabling graph: >= {min_order_lower_bound(k, m)}")
    else:
        print(f"order bound (4 - 5/m)k needs k >= m^3 = {m ** 3}; skipped")
    print(f"m-system size floor (all sizes k): {msystem_size_lower([k] * m, [k] * m)}")
    if args.n is not None:
        try:
            report = kj_sequence(args.n, k, m)
        except DivergenceSignal as sig:
            print(
                f"recurrence diverged at j={sig.j} (denominator {sig.denominator}); "
                f"no k-enabling graph on n={args.n} vertices"
            )
            print(f"partial sequence: {sig.partial}")
            return 0
        seq = " ".join(f"k_{j}={v}" for j, v in enumerate(report.values, start=2))
        print(f"n={args.n}: {seq}")
        print(f"implied lower bound on n: {report.implied_n_lower}")
        for chk in report.floor_checks:
            mark = "ok" if chk.satisfied else "VIOLATED"
            print(f"  j={chk.j}: {chk.value} >= {chk.floor} ... {mark}")
    if args.delta is not None:
        params = derive_params(args.delta)
        print(
            f"delta={params.delta}: m={params.m} eps={params.eps} "
            f"small-k cutoff={params.k_min}"
        )
    return 0


def cmd_almost_clique(args) -> int:
    g = load_graph(args.graph)
    result = find_acceptable_graph(g, args.k, args.eps)
    print(f"search calls: {result.calls}")
    if result.found:
        st = result.structure
        print(f"acceptable graph: size {st.size}, eps={st.eps}")
        print(f"  vertices: {_fmt_set(st.vertices)}")
        return 0
    print(f"no clique of size {args.k} (certified)")
    return 1


def cmd_poly_exclude(args) -> int:
    g = load_graph(args.graph)
    result = find_excluding_poly(g, args.k, args.delta)
    if isinstance(result, ExclusionCertificate):
        print(
            f"k-excluding vertex {result.vertex}: {result.reason} "
            f"(side={result.side}, kind={result.kind}, round={result.round})"
        )
        save_certificate(result, g, args.cert_out)
        print(f"wrote certificate to {args.cert_out}")
        return 0
    if isinstance(result, SmallKFallback):
        print(
            f"k={args.k} is at or below the cutoff {result.params.k_min}; "
            f"exact oracle answered"
        )
        cert = fallback_certificate(result)
        if cert is None:
            print(f"no k-excluding vertex: the graph is {args.k}-enabling")
            return 1
        print(f"k-excluding vertex {cert.vertex}: {cert.reason} (oracle fallback)")
        save_certificate(cert, g, args.cert_out)
        print(f"wrote certificate to {args.cert_out}")
        return 0
    assert isinstance(result, InternalContradiction)
    print(
        "internal contradiction: both sides completed "
        f"(clique union {result.clique_state.union_size}, "
        f"IS union {result.is_state.union_size}, size floor {result.size_lower}); "
        "this indicates an implementation bug",
        file=sys.stderr,
    )
    return 1


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    cert, stored_hash, stored_n = load_certificate(args.cert)
    if stored_n != g.n or stored_hash != graph_sha256(g):
        print("FAIL: certificate was issued for a different graph")
        return 1
    ok, problems = verify_certificate_detail(g, cert.k, cert)
    if ok:
        print(f"PASS: vertex {cert.vertex} is {cert.k}-excluding ({cert.reason})")
        return 0
    print("FAIL:")
    for p in problems:
        print(f"  {p}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliqueis",
        description="k-enabling / k-excluding vertex toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate graph families")
    fam = gen.add_subparsers(dest="family", required=True)
    p = fam.add_parser("4pd", help="blown-up 4-path")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", required=True)
    p = fam.add_parser("gnp", help="uniform random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p = fam.add_parser("planted", help="random graph with a planted clique/IS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--kind", choices=["clique", "independent_set"], required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p = fam.add_parser("reduction", help="hardness-reduction instance around a given g1")
    p.add_argument("--g1", required=True, help="graph file for the embedded instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=as_fraction, required=True)
    p.add_argument("--out", required=True)
    p = fam.add_parser("isolated", help="append isolated vertices")
    p.add_argument("--graph", required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="classify one vertex exactly")
    p.add_argument("--graph", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="list all k-excluding vertices exactly")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("kfn", help="exhaustive k(n) with witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["labeled", "canonical"], default="labeled")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None, help="write the witness graph here")
    p.set_defaults(func=cmd_kfn)

    p = sub.add_parser("bounds", help="evaluate the bound formulas")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--delta", type=as_fraction, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("almost-clique", help="run the acceptable-graph search")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=as_fraction, required=True)
    p.set_defaults(func=cmd_almost_clique)

    p = sub.add_parser("poly-exclude", help="find a k-excluding vertex with a certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=as_fraction, required=True)
    p.add_argument("--cert-out", required=True)
    p.set_defaults(func=cmd_poly_exclude)

    p = sub.add_parser("verify", help="check a certificate against its graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--cert", required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParameterError, GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
