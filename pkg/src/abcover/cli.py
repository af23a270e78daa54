"""Command-line surface.

Exit codes: 0 pass, 1 fail (counterexample or negative verdict),
2 usage error, 3 resource or numeric error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .covered import is_ab_covered_definitional, is_ab_covered_structural
from .enumeration import enumerate_all, enumerate_dense_candidates
from .errors import (Graph6ParseError, InvalidParameterError,
                     NumericFailureError, ResourceLimitError)
from .factor import DegreeSpec, has_gf_factor
from .graph import h_graph
from .graph6 import encode_graph6, parse_graph6, read_graph6_file
from .harness import (SUITE_NAMES, resolve_corpus, run_property_suites,
                      verify_factor_extremal, verify_factor_spectral_extremal,
                      verify_size_extremal, verify_spectral_extremal,
                      write_reports)
from .spectral import DEFAULT_TOL, spectral_radius

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _input_graphs(args) -> list:
    if args.graph6 is not None:
        return [parse_graph6(args.graph6)]
    return list(read_graph6_file(args.file))


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph6", help="a single graph6 string")
    grp.add_argument("--file", help="newline-delimited graph6 file")


def _cmd_check_covered(args) -> int:
    worst = EXIT_PASS
    for g in _input_graphs(args):
        if args.engine == "definitional":
            verdict = is_ab_covered_definitional(g, args.a, args.b)
        else:
            verdict = is_ab_covered_structural(g, args.a, args.b)
        if verdict.covered:
            print(f"{encode_graph6(g)} covered")
        else:
            worst = EXIT_FAIL
            if verdict.structural_witness is not None:
                w = verdict.structural_witness
                detail = (f"S={sorted(w.S)} T={sorted(w.T)} "
                          f"theta={w.theta} epsilon={w.epsilon}")
            else:
                detail = f"edge={verdict.edge_witness}"
            print(f"{encode_graph6(g)} not-covered {detail}")
    return worst


def _cmd_check_factor(args) -> int:
    worst = EXIT_PASS
    for g in _input_graphs(args):
        ok, cert = has_gf_factor(g, DegreeSpec.uniform(g.n, args.a, args.b))
        if ok:
            print(f"{encode_graph6(g)} has-factor")
        else:
            worst = EXIT_FAIL
            print(f"{encode_graph6(g)} no-factor S={sorted(cert.S)} "
                  f"T={sorted(cert.T)} deficiency={cert.value}")
    return worst


def _cmd_rho(args) -> int:
    if args.graph6 is not None:
        g = parse_graph6(args.graph6)
    else:
        n, gamma = args.H
        g = h_graph(n, gamma)
    result = spectral_radius(g, args.tol)
    print(f"rho: {result.rho:.12f}")
    print(f"residual: {result.residual:.3e}")
    print(f"iterations: {result.iterations}")
    return EXIT_PASS


def _cmd_enumerate(args) -> int:
    if args.complement_budget is not None:
        graphs = enumerate_dense_candidates(args.n, args.complement_budget)
    else:
        graphs = enumerate_all(args.n)
    count = 0
    with open(args.out, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    print(f"wrote {count} graphs to {args.out}")
    return EXIT_PASS


_THEOREMS = {
    "main0": verify_size_extremal,
    "main1": verify_spectral_extremal,
    "hao-li-size": verify_factor_extremal,
    "hao-li-spectral": verify_factor_spectral_extremal,
}


def _cmd_verify(args) -> int:
    runner = _THEOREMS[args.theorem]
    kwargs = {"corpus": args.corpus, "jobs": args.jobs}
    if args.theorem in ("main1", "hao-li-spectral"):
        kwargs["tol"] = args.tol
    report = runner(args.n, args.a, args.b, **kwargs)
    write_reports(args.report, [report])
    print(f"{args.theorem} n={args.n} a={args.a} b={args.b}: {report.status} "
          f"(extremal value {report.extremal_value}, "
          f"{len(report.counterexamples)} counterexamples); "
          f"report written to {args.report}")
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def _cmd_suite(args) -> int:
    names = [s.strip() for s in args.names.split(",") if s.strip()]
    corpus = resolve_corpus(args.corpus, args.n, args.a or 1)
    reports = run_property_suites(
        corpus.graphs, names, corpus_label=corpus.label,
        a=args.a, b=args.b, trials=args.trials, seed=args.seed)
    if args.report:
        write_reports(args.report, reports)
    worst = EXIT_PASS
    for r in reports:
        print(f"{r.theorem}: {r.status} "
              f"({len(r.counterexamples)} violations over {r.corpus_size} graphs)")
        if r.status != "pass":
            worst = EXIT_FAIL
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abcover",
        description="[a,b]-covered graph decisions, spectral radii, and "
                    "extremal theorem verification")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-covered", help="decide [a,b]-coveredness")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--engine", choices=["structural", "definitional"],
                   default="structural")
    _add_graph_input(p)
    p.set_defaults(func=_cmd_check_covered)

    p = sub.add_parser("check-factor", help="decide [a,b]-factor existence")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    _add_graph_input(p)
    p.set_defaults(func=_cmd_check_factor)

    p = sub.add_parser("rho", help="adjacency spectral radius")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--graph6")
    grp.add_argument("--H", nargs=2, type=int, metavar=("N", "GAMMA"),
                     help="near-clique family member H(n, gamma)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("enumerate", help="write an isomorphism-free corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--complement-budget", type=int, default=None,
                   help="restrict to graphs whose complement has at most "
                        "this many edges")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a theorem verification campaign")
    p.add_argument("--theorem", choices=sorted(_THEOREMS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--corpus", default="all",
                   help="all | dense | dense:K | file:PATH")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("suite", help="run named invariant suites")
    p.add_argument("--names", required=True,
                   help=f"comma-separated from: {', '.join(SUITE_NAMES)}")
    p.add_argument("--corpus", default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", default=None)
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidParameterError, Graph6ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, NumericFailureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
