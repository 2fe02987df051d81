"""Command line front end.

Subcommands:

  construct   build a family graph from its parameters
  invariants  exact matching invariants of graph6 inputs
  witness     realizability decision plus witness for one (p, q, r, n)
  feasible    the full feasible triple set for one n
  verify      exhaustive / sampled verification checks
  reg         edge-ideal regularity of graph6 inputs

Exit codes: 0 on success, 1 when a verification check fails or a
requested tuple is infeasible, 2 on usage errors.  Output is JSON on
stdout (one object per input line where applicable); ``--pretty`` prints
small tables instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .families import FamilySpec, build_family, parse_family_spec, predict_invariants
from .graph import Graph, graph6_decode, graph6_encode, is_connected, to_dot
from .matching import invariant_triple
from .realizability import TupleQuery, feasible_set, synthesize_witness
from .regularity import regularity
from .verifier import (VerificationReport, verify_av, verify_first_main_sampled,
                       verify_lemma_suite, verify_theorem_first_main,
                       verify_theorem_second_main)


def _print_json(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _graph_output(G: Graph, fmt: str, extra: dict | None = None) -> None:
    if fmt == "graph6":
        print(graph6_encode(G))
    elif fmt == "dot":
        sys.stdout.write(to_dot(G))
    else:
        out = dict(extra or {})
        out["graph6"] = graph6_encode(G)
        _print_json(out)


def _input_graphs(args: argparse.Namespace) -> Iterable[Graph]:
    lines = args.graph6 if args.graph6 else sys.stdin
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.params is not None:
        spec = FamilySpec(args.family, *[int(x) for x in args.params.split(",")])
    else:
        spec = parse_family_spec(args.family)
    G = build_family(spec)
    size, predicted = predict_invariants(spec)
    _graph_output(G, args.format, {
        "family": spec.family,
        "params": list(spec.params()),
        "n": size,
        "edge_count": G.edge_count,
        "labels": list(G.labels or ()),
        "predicted": {"ind": predicted.ind_match, "min": predicted.min_match,
                      "match": predicted.match},
    })
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    for G in _input_graphs(args):
        t = invariant_triple(G)
        row = {"n": G.n, "ind": t.ind_match, "min": t.min_match,
               "match": t.match, "connected": is_connected(G)}
        if args.reg:
            row["reg"] = regularity(G).reg
        if args.pretty:
            cols = "  ".join(f"{k}={v}" for k, v in row.items())
            print(cols)
        else:
            _print_json(row)
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    report = synthesize_witness(TupleQuery(args.p, args.q, args.r, args.n))
    if args.format in ("graph6", "dot") and report.graph is not None:
        _graph_output(report.graph, args.format)
    else:
        _print_json(report.to_json_dict())
    return 0 if report.feasible else 1


def _cmd_feasible(args: argparse.Namespace) -> int:
    triples = sorted(feasible_set(args.n))
    if args.pretty:
        for p, q, r in triples:
            print(f"({p}, {q}, {r})")
        print(f"total {len(triples)}")
    else:
        _print_json({"n": args.n, "count": len(triples),
                     "tuples": [list(t) for t in triples]})
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    reports: list[VerificationReport] = []
    if args.check == "first-main":
        top = min(args.n_max, 7)
        for n in range(2, top + 1):
            reports.append(verify_theorem_first_main(n, jobs=args.jobs))
        if args.n_max > 7:
            if args.sample is None:
                raise ValueError("n above 7 needs --sample (exhaustive scan "
                                 "is capped at 7 vertices)")
            for n in range(8, min(args.n_max, 9) + 1):
                reports.append(verify_first_main_sampled(n, args.sample, args.seed))
    elif args.check == "av":
        if args.n_max > 6:
            raise ValueError("the extremal classification check is capped at 6")
        for n in range(2, args.n_max + 1, 2):
            reports.append(verify_av(n, jobs=args.jobs))
    elif args.check == "lemmas":
        if args.n_max > 7:
            raise ValueError("the lemma suite is capped at 7")
        reports.append(verify_lemma_suite(
            n_max_exhaustive=min(args.n_max, 6),
            samples=args.sample if args.sample is not None else 10000,
            seed=args.seed, inequality_n_max=args.n_max, jobs=args.jobs))
    else:  # second-main
        if args.n_max > 9:
            raise ValueError("the regularity check is capped at 9")
        reports.append(verify_theorem_second_main(
            n_max_exhaustive=min(args.n_max, 6),
            witness_n_max=args.n_max, jobs=args.jobs))
    for report in reports:
        print(report.to_json(include_timing=args.timing))
    if args.failures_out:
        with open(args.failures_out, "w") as fh:
            for report in reports:
                for rec in report.failures:
                    if rec.graph6:
                        fh.write(rec.graph6 + "\n")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_reg(args: argparse.Namespace) -> int:
    for G in _input_graphs(args):
        _print_json(regularity(G).to_json_dict())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchinv",
        description="Exact matching invariants, witness families, "
                    "realizability and edge-ideal regularity of small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family graph")
    p.add_argument("family",
                   help="family tag G1|G2|G3, or full spec like 'G2(2,0,1,0,1)'")
    p.add_argument("--params", help="comma-separated parameters, e.g. 2,0,1,0,1")
    p.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("invariants", help="matching invariants of graph6 inputs")
    p.add_argument("graph6", nargs="*", help="graph6 strings (default: stdin lines)")
    p.add_argument("--reg", action="store_true",
                   help="also compute regularity (n <= 10)")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("witness", help="decide one (p, q, r, n) and build a witness")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("feasible", help="feasible triple set for one n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=_cmd_feasible)

    p = sub.add_parser("verify", help="run a verification check")
    p.add_argument("--check", required=True,
                   choices=("first-main", "av", "lemmas", "second-main"))
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--sample", type=int,
                   help="sample count for non-exhaustive sizes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true",
                   help="include elapsed seconds in the report")
    p.add_argument("--failures-out",
                   help="write failing graphs as graph6 lines to this path")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("reg", help="edge-ideal regularity of graph6 inputs")
    p.add_argument("graph6", nargs="*", help="graph6 strings (default: stdin lines)")
    p.set_defaults(fn=_cmd_reg)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
