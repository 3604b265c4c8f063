"""Command-line front end.

Exit codes: 0 success (or a pair was found), 1 I/O / parse / other failure,
2 precondition violated, 3 the input contains an induced pentagon (the
certificate is printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .dichotomy import DichotomyConfig, check_trace, find_c5_or_sparse_pair
from .errors import DomainError, InputContainsC5, PentagonError, PreconditionViolated
from .experiments import EXPERIMENTS, Options, recheck, run_experiment
from .extract import pipeline
from .io import GraphFormatError, format_dimacs, format_json, read_graph
from .schedule import ScheduleParams, choose_c, guarantee, j_of, k_of, r_of
from .sparsify import DEFAULT_D, density_pair
from .testkit import FAMILIES, GenSpec, generate
from .testkit.oracles import alpha_omega_exact, count_induced_c5, find_induced_c5, max_cograph

EXIT_OK, EXIT_OTHER, EXIT_PRECONDITION, EXIT_C5 = 0, 1, 2, 3


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from exc


def _seed(text: str) -> int:
    val = int(text)
    if not 0 <= val < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return val


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=None, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _c5_exit(exc: InputContainsC5) -> int:
    _emit({"kind": "c5", "cycle": list(exc.cycle)})
    return EXIT_C5


def _add_input(p):
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=["dimacs", "json"], help="default: from the file suffix")


def _add_schedule(p):
    p.add_argument("--sigma", type=float, default=5.0)
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 16))
    p.add_argument("--kappa", type=float, default=None, help="default: largest admissible value")


def cmd_dichotomy(args) -> int:
    G = read_graph(args.input, args.format)
    cfg = DichotomyConfig(v1_rule=args.v1_rule, n0_seed=args.n0_seed)
    try:
        outcome, trace = find_c5_or_sparse_pair(G, args.c, cfg)
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    out = outcome.to_json()
    if args.trace:
        out["trace"] = trace.to_json()
        out["trace_violations"] = check_trace(G, trace)
    _emit(out, args.out)
    return EXIT_C5 if outcome.kind == "c5" else EXIT_OK


def cmd_pair(args) -> int:
    G = read_graph(args.input, args.format)
    try:
        res = density_pair(G, args.c, args.d, trivial_branch=not args.no_trivial_branch)
    except InputContainsC5 as exc:
        return _c5_exit(exc)
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit(res.to_json(), args.out)
    return EXIT_OK


def cmd_pipeline(args) -> int:
    G = read_graph(args.input, args.format)
    params = ScheduleParams.build(args.sigma, args.epsilon, args.kappa)
    try:
        rep = pipeline(
            G,
            params,
            c=args.c,
            adaptive=args.adaptive,
            d=args.d,
            trivial_branch=not args.no_trivial_branch,
            verify_level=args.verify_level,
        )
    except InputContainsC5 as exc:
        return _c5_exit(exc)
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.trace is not None:
        text = rep.trace.to_jsonl()
        if args.trace == "-":
            sys.stderr.write(text)
        else:
            Path(args.trace).write_text(text)
    _emit(rep.to_json(include_trace=args.full_report), args.out)
    if args.verify_level != "none" and not rep.verified:
        return EXIT_OTHER
    return EXIT_OK


def cmd_experiment(args) -> int:
    opts = Options(
        seed=args.seed,
        trials=args.trials,
        n_list=tuple(args.n) if args.n else (),
        seeds_per_cell=args.seeds_per_cell,
        c=args.c,
        sigma=args.sigma,
        epsilon=args.epsilon,
        timing=args.timing,
    )
    if args.recheck:
        problems = recheck(args.name, opts, args.out)
        for line in problems:
            print(line, file=sys.stderr)
        print(f"recheck: {len(problems)} problem(s)")
        return EXIT_OK if not problems else EXIT_OTHER
    failures = run_experiment(args.name, opts, args.out)
    print(f"wrote {args.out}; {failures} unverified row(s)", file=sys.stderr)
    return EXIT_OK if failures == 0 else EXIT_OTHER


def cmd_gen(args) -> int:
    spec = GenSpec(args.family, args.n, args.p, args.seed, args.degree_cap)
    G = generate(spec)
    text = format_json(G) if args.format == "json" else format_dimacs(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = read_graph(args.input, args.format)
    if args.what == "c5":
        cyc = find_induced_c5(G)
        _emit({"kind": "c5", "cycle": list(cyc)} if cyc else {"kind": "none"})
        return EXIT_C5 if cyc else EXIT_OK
    if args.what == "count-c5":
        _emit({"count": count_induced_c5(G)})
    elif args.what == "max-cograph":
        S = max_cograph(G)
        _emit({"size": len(S), "vertices": list(S)})
    else:
        st, cl = alpha_omega_exact(G)
        _emit({"alpha": len(st), "omega": len(cl), "stable": list(st), "clique": list(cl)})
    return EXIT_OK


def cmd_schedule(args) -> int:
    params = ScheduleParams.build(args.sigma, args.epsilon, args.kappa)
    out = {"params": params.to_json()}
    if args.n:
        n = args.n
        c = choose_c(n, params.mu)
        g_cog, g_best = guarantee(n, params.kappa)
        out.update(
            n=n,
            r=r_of(n),
            c={"num": c.numerator, "den": c.denominator},
            k=k_of(c, params.sigma, params.epsilon),
            j=j_of(n, c, params.sigma),
            guarantee_cograph=g_cog,
            guarantee_best=g_best,
            vacuous=params.is_vacuous(n),
        )
    _emit(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentagon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dichotomy", help="induced C5 or sparse pair on a low-degree graph")
    _add_input(p)
    p.add_argument("--c", type=_fraction, required=True)
    p.add_argument("--v1-rule", choices=["max-degree", "lowest"], default="max-degree")
    p.add_argument("--n0-seed", type=_seed, default=None, help="random N0 instead of the first half")
    p.add_argument("--trace", action="store_true", help="include the named sets of the run")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("pair", help="pair with density < c or > 1-c on any graph")
    _add_input(p)
    p.add_argument("--c", type=_fraction, required=True)
    p.add_argument("--d", type=_fraction, default=DEFAULT_D)
    p.add_argument("--no-trivial-branch", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("pipeline", help="extract a cograph, then a clique or stable set")
    _add_input(p)
    _add_schedule(p)
    p.add_argument("--c", type=_fraction, default=None, help="override the scheduled threshold")
    p.add_argument("--d", type=_fraction, default=DEFAULT_D)
    p.add_argument("--adaptive", action="store_true", help="recompute c at every node")
    p.add_argument("--verify-level", choices=["none", "cheap", "full"], default="cheap")
    p.add_argument("--no-trivial-branch", action="store_true")
    p.add_argument("--trace", nargs="?", const="-", default=None, metavar="PATH",
                   help="write the node trace as JSON lines (stderr when no path)")
    p.add_argument("--full-report", action="store_true", help="include cotree and trace in the report")
    p.add_argument("--out")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("experiment", help="run a named experiment grid into a CSV")
    p.add_argument("name", choices=EXPERIMENTS)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--n", type=int, nargs="+", help="vertex counts for grid experiments")
    p.add_argument("--seeds-per-cell", type=int, default=5)
    p.add_argument("--c", type=_fraction, default=None)
    p.add_argument("--sigma", type=float, default=5.0)
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 16))
    p.add_argument("--timing", action="store_true", help="fill runtime_ms (makes output non-reproducible)")
    p.add_argument("--recheck", action="store_true", help="re-verify an existing CSV at --out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("gen", help="generate a seeded graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2))
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--degree-cap", type=int, default=None)
    p.add_argument("--format", choices=["dimacs", "json"], default="dimacs")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exhaustive reference computations")
    p.add_argument("what", choices=["c5", "count-c5", "max-cograph", "alpha-omega"])
    _add_input(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("schedule", help="parameter schedule and guarantee formulas")
    _add_schedule(p)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_schedule)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputContainsC5 as exc:
        return _c5_exit(exc)
    except PreconditionViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (OSError, GraphFormatError, DomainError, PentagonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OTHER


if __name__ == "__main__":
    sys.exit(main())
