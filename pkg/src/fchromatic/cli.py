"""Command-line interface.

Exit status: 0 success / condition holds, 1 negative verdict, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import campaigns
from .certify import Verdict, check_forest_condition
from .construct import build_forest
from .errors import FChromaticError
from .formats import parse_palette, read_budget, read_graph, write_graph
from .graph import ColorBudget, EdgeColoredGraph, edges_with_colors
from .oracle import InstanceFamily, brute_force_forest
from .theorems import (
    check_rainbow_prefix,
    check_rainbow_subset,
    check_main_premise,
    check_multiplicity_premise,
    lemma_bound,
    main_premise_at,
    make_sharpness_instance,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return str(float(x))


def _load(args) -> tuple[EdgeColoredGraph, ColorBudget]:
    G = read_graph(args.graph)
    if args.budget:
        f = read_budget(args.budget, G)
        f.require_covers(G)
    else:
        f = ColorBudget.uniform(G.colors, 1)
    return G, f


def _names(G: EdgeColoredGraph, colors) -> str:
    return "{" + ",".join(G.color_name(c) for c in sorted(colors)) + "}"


def _print_certificate(G, f, w, cert, machine: bool) -> None:
    if machine:
        print(cert.to_json(G))
        return
    k = len(G.colors)
    if cert.verdict is Verdict.SATISFIED:
        print("satisfied")
        print(f"  all {2 ** k} color subsets R satisfy omega(G - E_R) <= w + f(R) with w={w}")
    else:
        R = cert.violating_set
        caps = " + ".join(str(f[c]) for c in sorted(R)) or "0"
        print("violated")
        print(f"  R = {_names(G, R)}")
        print(f"  omega(G - E_R) = {cert.observed_components}"
              f" (removing {len(edges_with_colors(G, R))} of {len(G.edges)} edges)")
        print(f"  bound = w + f(R) = {w} + {caps} = {cert.bound}")
        print(f"  {cert.observed_components} > {cert.bound}")
    if cert.witness is not None:
        for e in cert.witness.edges:
            print(f"edge {e.u} {e.v} {G.color_name(e.color)}")


def cmd_check(args) -> int:
    G, f = _load(args)
    cert = check_forest_condition(G, f, args.w, witness=args.witness)
    _print_certificate(G, f, args.w, cert, args.machine)
    return EXIT_OK if cert.satisfied else EXIT_NEGATIVE


def cmd_construct(args) -> int:
    G, f = _load(args)
    forest = build_forest(G, f, args.w)
    if forest is not None:
        if args.machine:
            print(json.dumps({"found": True, "edges": [[e.u, e.v, G.color_name(e.color)] for e in forest.edges]}))
        else:
            for e in forest.edges:
                print(f"edge {e.u} {e.v} {G.color_name(e.color)}")
        return EXIT_OK
    cert = None
    if len(G.colors) <= 24:
        cert = check_forest_condition(G, f, args.w)
    if args.machine:
        out = {"found": False}
        if cert is not None:
            out["certificate"] = cert.as_dict(G)
        print(json.dumps(out))
    else:
        print("not found")
        if cert is not None:
            _print_certificate(G, f, args.w, cert, False)
    return EXIT_NEGATIVE


def _report(report, G, machine: bool, extra: dict | None = None) -> int:
    if machine:
        out = {"holds": report.holds}
        if report.witness_colors is not None:
            out["witness_colors"] = [G.color_name(c) for c in sorted(report.witness_colors)]
        if report.prefix_length is not None:
            out["prefix_length"] = report.prefix_length
        if report.clause is not None:
            out["clause"] = report.clause
        if report.detail:
            out["detail"] = report.detail
        out.update(extra or {})
        print(json.dumps(out))
    else:
        print(report.describe(G))
    return EXIT_OK if report.holds else EXIT_NEGATIVE


def cmd_theorem(args) -> int:
    if args.variant == "lemma":
        if args.N is None or args.s is None:
            raise UsageError("lemma needs -N and -s")
        lb = lemma_bound(args.N, args.s)
        if args.machine:
            print(json.dumps({"N": lb.N, "s": lb.s, "bound": str(lb.bound), "exact_max": lb.exact_max}))
        else:
            print(f"bound {_fmt(lb.bound)} exact {lb.exact_max}")
        return EXIT_OK
    if not args.graph:
        raise UsageError(f"{args.variant} needs --graph")
    G = read_graph(args.graph)
    if args.variant == "bh-prefix":
        return _report(check_rainbow_prefix(G), G, args.machine)
    if args.variant == "bh-subset":
        return _report(check_rainbow_subset(G), G, args.machine)
    G, f = _load(args)
    if args.w is None:
        raise UsageError(f"{args.variant} needs -w")
    if args.variant == "main":
        return _report(check_main_premise(G, f, args.w, args.n), G, args.machine)
    return _report(check_multiplicity_premise(G, f, args.w), G, args.machine)


def cmd_sharpness(args) -> int:
    if args.budget:
        order, caps = parse_palette(Path(args.budget).read_text(), args.budget)
    elif args.num_colors:
        order = [f"c{i}" for i in range(1, args.num_colors + 1)]
        caps = {name: 1 for name in order}
    else:
        raise UsageError("sharpness needs --budget or --num-colors")
    index = {name: i for i, name in enumerate(order)}
    wanted = [t for t in (args.colors or "").split(",") if t]
    unknown = [t for t in wanted if t not in index]
    if unknown or not wanted:
        raise UsageError(f"--colors must list colors of the palette; unknown: {', '.join(unknown) or '(none given)'}")
    f = ColorBudget({index[name]: caps[name] for name in order})
    R = {index[name] for name in wanted}
    inst = make_sharpness_instance(args.n, args.m, args.w, f, R, names=dict(enumerate(order)))
    G = inst.graph
    write_graph(G, args.out)
    e_r = len(edges_with_colors(G, R))
    cert = check_forest_condition(G, f, args.w)
    verdict_line = cert.verdict.value
    if not cert.satisfied:
        verdict_line += f" R={_names(G, cert.violating_set)} omega={cert.observed_components} bound={cert.bound}"
    premise_at_R = main_premise_at(G, f, args.w, R)
    if args.machine:
        print(json.dumps({"graph": str(args.out), "p": inst.p, "E_R": e_r, "p2_over_4": str(Fraction(inst.p ** 2, 4)),
                          "premise_at_R": premise_at_R, "certificate": cert.as_dict(G)}))
    else:
        print(f"wrote {args.out}")
        print(f"p = {inst.p}")
        print(f"|E_R| = {e_r}")
        print(f"p^2/4 = {_fmt(Fraction(inst.p ** 2, 4))}")
        print(f"premise at R: {'holds' if premise_at_R else 'fails'}")
        print(f"verdict: {verdict_line}")
    return EXIT_OK if not cert.satisfied else EXIT_NEGATIVE


def cmd_campaign(args) -> int:
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    emit = None if args.quiet else print
    if args.mode == "iff-agreement":
        family = InstanceFamily(
            max_vertices=args.max_vertices, max_colors=args.max_colors, max_cap=args.max_cap,
            max_w=args.max_w or args.max_vertices,
            mode="enumerate" if args.exhaustive else "sample", seed=args.seed, trials=args.trials)
        summary = campaigns.run_iff_agreement(family, emit)
    else:
        summary = campaigns.run_random(args.mode, args.trials, args.seed, emit, args.jobs)
    print(summary.report())
    return EXIT_OK if summary.failures == 0 else EXIT_NEGATIVE


def cmd_oracle_compare(args) -> int:
    G, f = _load(args)
    found = brute_force_forest(G, f, args.w)
    cert = check_forest_condition(G, f, args.w)
    built = build_forest(G, f, args.w)
    agree = (found is not None) == cert.satisfied == (built is not None)
    if args.machine:
        print(json.dumps({"oracle": found is not None, "certificate": cert.verdict.value,
                          "builder": built is not None, "agree": agree}))
    else:
        print(f"oracle: {'found' if found else 'not found'}")
        print(f"certificate: {cert.verdict.value}")
        print(f"builder: {'found' if built else 'not found'}")
        print(f"agreement: {'yes' if agree else 'NO'}")
    return EXIT_OK if agree else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fchromatic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p, need_w=True):
        p.add_argument("--graph", required=True, help="graph file")
        p.add_argument("--budget", help="budget file (default: cap 1 for every color)")
        p.add_argument("-w", type=int, required=need_w, help="number of forest components")
        p.add_argument("--machine", action="store_true", help="JSON output")

    p = sub.add_parser("check", help="decide existence and print a certificate")
    instance_args(p)
    p.add_argument("--witness", action="store_true", help="attach a witness forest when satisfied")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a forest or explain why none exists")
    instance_args(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("theorem", help="check a sufficient-condition premise")
    p.add_argument("variant", choices=["main", "bh-prefix", "bh-subset", "su25", "lemma"])
    p.add_argument("--graph")
    p.add_argument("--budget")
    p.add_argument("-w", type=int)
    p.add_argument("-n", type=int, help="size of the first part (default: inferred)")
    p.add_argument("-N", type=int, help="vertex count (lemma)")
    p.add_argument("-s", type=int, help="component count (lemma)")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("sharpness", help="generate and verify a tightness instance")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-w", type=int, required=True)
    p.add_argument("--budget", help="budget file; its colors form the color set")
    p.add_argument("--num-colors", type=int, help="colors c1..cK with cap 1, when no budget is given")
    p.add_argument("--colors", required=True, help="comma-separated colors of R")
    p.add_argument("--out", default="sharpness.graph", help="where to write the graph file")
    p.add_argument("--machine", action="store_true")
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("campaign", help="run a verification campaign")
    p.add_argument("mode", choices=campaigns.MODES)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--exhaustive", action="store_true", help="iff-agreement: enumerate instead of sampling")
    p.add_argument("--max-vertices", type=int, default=4)
    p.add_argument("--max-colors", type=int, default=2)
    p.add_argument("--max-cap", type=int, default=2)
    p.add_argument("--max-w", type=int)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for random campaigns")
    p.add_argument("--quiet", action="store_true", help="summary only")
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("oracle-compare", help="compare certificate, builder and brute force")
    instance_args(p)
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, FChromaticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
