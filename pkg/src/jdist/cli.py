"""Command-line surface: compute, verify, export, and inspect.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 search or attempt budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
import time

from .actions import classify, count_fixed_equipartitions, failure_bound_parts, generators
from .certificates import CertificateError, dump, load
from .combinatorics import KSubset, parse_cycles
from .engine import (
    AttemptsExhausted,
    FamilyNotCovered,
    automorphism_group_order,
    brute_force_dist,
    determining_set_for,
    distinguishing_number,
    verify_certificate,
)
from .graphs import InvalidSpec, build, canonicalize, induced_subgraph
from .search import (
    DEFAULT_NODE_BUDGET,
    SearchBudgetExceeded,
    is_asymmetric,
    is_determining_set,
    search,
)


def _parse_set(text: str) -> list[int]:
    items = [part for part in text.replace(",", " ").split() if part]
    try:
        return [int(part) for part in items]
    except ValueError:
        raise InvalidSpec(f"cannot parse distance set {text!r}") from None


def _spec_label(n: int, k: int, distances) -> str:
    return f"J({n},{k})_{{{','.join(str(i) for i in sorted(distances))}}}"


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _read_vertex_file(path: str, spec) -> list[KSubset]:
    subsets = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            items = [part for part in line.replace(",", " ").split() if part]
            if not items:
                continue
            elems = [int(part) for part in items]
            subset = KSubset.from_elements(elems, spec.n)
            if subset.size != spec.k:
                raise InvalidSpec(f"{subset!r} is not a {spec.k}-subset of [{spec.n}]")
            subsets.append(subset)
    return subsets


def _run_dist(args) -> int:
    cert = distinguishing_number(
        args.n, args.k, _parse_set(args.set), seed=args.seed, node_budget=args.budget
    )
    label = _spec_label(cert.n, cert.k, cert.distances)
    print(f"Dist({label}) = {cert.dist}, case {cert.case_id}")
    if args.certificate:
        dump(cert, args.certificate)
    return 0


def _run_verify(args) -> int:
    cert = load(args.certificate)
    ok, reason = verify_certificate(cert, node_budget=args.budget)
    print(reason)
    return 0 if ok else 1


def _run_detset(args) -> int:
    spec = canonicalize(args.n, args.k, _parse_set(args.set))
    if args.family:
        subsets, _ = determining_set_for(spec)
    else:
        subsets = _read_vertex_file(args.vertices, spec)
    g = build(spec)
    verts = []
    for subset in subsets:
        idx = g.vertex_index(subset)
        if idx not in verts:
            verts.append(idx)
    determining = is_determining_set(g, verts, node_budget=args.budget)
    asymmetric = is_asymmetric(induced_subgraph(g, verts), node_budget=args.budget)
    print(f"determining: {_yes_no(determining)}, asymmetric induced: {_yes_no(asymmetric)}")
    return 0


def _run_aut(args) -> int:
    spec = canonicalize(args.n, args.k, _parse_set(args.set))
    if args.order:
        if args.stats:
            start = time.perf_counter()
            result = search(build(spec), node_budget=args.budget)
            elapsed = time.perf_counter() - start
            print(result.group_order)
            print(f"nodes: {result.node_count}, time: {elapsed:.2f}s", file=sys.stderr)
        else:
            print(automorphism_group_order(spec, node_budget=args.budget))
        return 0
    descriptor = classify(spec)
    gens, complete = generators(descriptor, spec, node_budget=args.budget)
    print(f"case {descriptor.case_id}: {descriptor.group_name}")
    print(f"generators: {len(gens)} ({'complete' if complete else 'incomplete'})")
    return 0


def _run_export(args) -> int:
    spec = canonicalize(args.n, args.k, _parse_set(args.set))
    g = build(spec)
    lines = []
    if args.format == "dimacs":
        lines.append(f"p edge {g.n_vertices} {g.num_edges}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    else:
        lines.extend(f"{u + 1} {v + 1}" for u, v in g.edges())
    text = "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _run_fixed_count(args) -> int:
    sigma = parse_cycles(args.perm, 2 * args.m)
    print(count_fixed_equipartitions(sigma))
    return 0


def _run_bound(args) -> int:
    p, q = failure_bound_parts(args.m)
    relation = "<" if p < q else ">="
    print(f"{p}/{q} {relation} 1")
    return 0


def _run_oracle(args) -> int:
    spec = canonicalize(args.n, args.k, _parse_set(args.set))
    g = build(spec)
    print(brute_force_dist(g, args.max_r, seed=args.seed, node_budget=args.budget))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jdist",
        description="Distinguishing numbers of merged Johnson graphs J(n,k)_I.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def spec_flags(p):
        p.add_argument("--n", type=int, required=True, help="ground set size")
        p.add_argument("--k", type=int, required=True, help="subset size")
        p.add_argument("--set", required=True, help="comma-separated distance set I")

    def budget_flag(p):
        p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                       help="search node budget")

    p = sub.add_parser("dist", help="compute Dist(J(n,k)_I) and its certificate")
    spec_flags(p)
    budget_flag(p)
    p.add_argument("--certificate", metavar="PATH", help="write the certificate JSON here")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized constructions")
    p.set_defaults(func=_run_dist)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("--certificate", metavar="PATH", required=True)
    budget_flag(p)
    p.set_defaults(func=_run_verify)

    p = sub.add_parser("detset", help="test a vertex set for the determining property")
    spec_flags(p)
    budget_flag(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", action="store_const", const="builtin",
                        help="use the built-in determining set for this family")
    source.add_argument("--vertices", metavar="FILE",
                        help="file listing subsets as 1-based elements, one per line")
    p.set_defaults(func=_run_detset)

    p = sub.add_parser("aut", help="classify the automorphism group or report its order")
    spec_flags(p)
    budget_flag(p)
    p.add_argument("--order", action="store_true", help="search the exact group order")
    p.add_argument("--stats", action="store_true", help="print search statistics to stderr")
    p.set_defaults(func=_run_aut)

    p = sub.add_parser("export", help="write the graph as an edge list")
    spec_flags(p)
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.set_defaults(func=_run_export)

    p = sub.add_parser("fixed-count", help="count equipartitions fixed by a permutation")
    p.add_argument("--m", type=int, required=True, help="half the ground set size")
    p.add_argument("--perm", required=True, help='cycle notation, e.g. "(1 2)(3 4)"')
    p.set_defaults(func=_run_fixed_count)

    p = sub.add_parser("bound", help="failure bound for the random pair coloring")
    p.add_argument("--m", type=int, required=True, help="half the ground set size")
    p.set_defaults(func=_run_bound)

    p = sub.add_parser("oracle", help="distinguishing number by direct search")
    spec_flags(p)
    budget_flag(p)
    p.add_argument("--max-r", type=int, required=True, help="largest color count to try")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_run_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AttemptsExhausted, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (CertificateError, InvalidSpec, FamilyNotCovered, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
