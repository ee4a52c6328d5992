"""Command-line front end.

Exit codes: 0 success, 1 mismatch or failed assertion, 2 parse error,
3 oracle size guard, 4 sigma not contained where containment is required.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench, crosscheck
from .fast import mobius_fast, screen
from .perm import InvalidInput, NotContained, format_perm, parse_perm
from .poset import ORACLE_MAX_N, OracleTooLarge, build_interval, hasse_edges, mobius_oracle

EXIT_MISMATCH, EXIT_PARSE, EXIT_GUARD, EXIT_NOT_CONTAINED = 1, 2, 3, 4


def _perm_arg(text: str):
    try:
        return parse_perm(text)
    except InvalidInput as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed_arg(text: str) -> int:
    seed = int(text)
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def _sizes_arg(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be a non-empty list of positive integers")
    return sizes


def cmd_mu(args) -> int:
    res = mobius_fast(args.sigma, args.tau, use_corollary=not args.trace,
                      verify=args.verify_uniqueness)
    rec = res.to_record()
    status = 0
    if args.oracle:
        try:
            oracle = mobius_oracle(args.sigma, args.tau)
        except OracleTooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_GUARD
        rec["oracle"] = oracle
        rec["match"] = oracle == res.value
        status = 0 if rec["match"] else EXIT_MISMATCH
    if args.format == "json":
        print(json.dumps(rec, indent=2))
        return status
    if args.oracle:
        print(f"fast={res.value} oracle={rec['oracle']} match={'yes' if rec['match'] else 'no'}")
    else:
        print(res.value)
    if args.trace:
        print(f"case: {res.case.value}")
        print("carrier chain: " + (" > ".join(rec["carrier_chain"]) or "-"))
        print(f"socle: {rec['socle'] or '-'}")
    return status


def cmd_interval(args) -> int:
    try:
        iv = build_interval(args.sigma, args.tau, max_n=args.max_n)
    except OracleTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except NotContained as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONTAINED
    diagram = hasse_edges(iv)
    print(diagram.to_json() if args.format == "json" else diagram.to_dot(), end="")
    if args.format == "json":
        print()
    if args.plot:
        from .plotting import plot_hasse
        plot_hasse(diagram, args.plot)
    return 0


def cmd_crosscheck(args) -> int:
    if args.max_n > ORACLE_MAX_N:
        print(f"error: --max-n {args.max_n} exceeds oracle bound {ORACLE_MAX_N}", file=sys.stderr)
        return EXIT_GUARD
    if args.samples:
        summary = crosscheck.sampled(args.samples, args.seed, args.max_n, args.verify_uniqueness)
        print(f"mode: random (samples={args.samples}, seed={args.seed}, max_n={args.max_n})")
    else:
        summary = crosscheck.exhaustive(args.max_n, args.verify_uniqueness, args.jobs)
        print(f"mode: exhaustive (max_n={args.max_n})")
    print(summary.report())
    return EXIT_MISMATCH if summary.mismatches else 0


def cmd_screen(args) -> int:
    try:
        rep = screen(args.sigma, args.tau)
    except NotContained as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CONTAINED
    rec = rep.to_record()
    if args.format == "json":
        print(json.dumps(rec, indent=2))
        return 0
    for key in ("tails", "tail_sum", "excluded_value", "forces_zero", "omega", "alpha", "beta"):
        val = rec[key]
        if key == "tails":
            val = f"{val[0]},{val[1]}"
        print(f"{key}: {'-' if val is None else val}")
    for reason in rep.reasons:
        print(f"reason: {reason}")
    return 0


def cmd_bench(args) -> int:
    rows = bench.run(args.sizes, args.seed, args.sigma_len, args.instance, args.repeats)
    slope = bench.loglog_slope(rows)
    print(bench.format_table(rows, args.sep))
    print(f"loglog_slope{args.sep}{slope:.3f}")
    if args.plot:
        from .plotting import plot_bench
        plot_bench(rows, slope, args.plot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="consecmobius",
        description="Möbius function of the consecutive-pattern poset of permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="compute mu(sigma, tau)")
    p.add_argument("sigma", type=_perm_arg)
    p.add_argument("tau", type=_perm_arg)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracle")
    p.add_argument("--trace", action="store_true",
                   help="resolve long tails through the carrier recursion and show the chain")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--verify-uniqueness", action="store_true")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("interval", help="export the Hasse diagram of [sigma, tau]")
    p.add_argument("sigma", type=_perm_arg)
    p.add_argument("tau", type=_perm_arg)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--plot", metavar="PATH", help="also render the diagram to an image file")
    p.add_argument("--max-n", type=int, default=ORACLE_MAX_N)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("crosscheck", help="compare the fast algorithm with the oracle")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--samples", type=int, default=0, help="random mode with this many pairs")
    p.add_argument("--seed", type=_seed_arg, default=0)
    p.add_argument("--verify-uniqueness", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("screen", help="necessary-condition screens for mu(sigma, tau)")
    p.add_argument("sigma", type=_perm_arg)
    p.add_argument("tau", type=_perm_arg)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("bench", help="time the fast algorithm on planted worst cases")
    p.add_argument("--sizes", type=_sizes_arg, required=True, help="e.g. 250,500,1000,2000")
    p.add_argument("--seed", type=_seed_arg, default=0)
    p.add_argument("--sigma-len", type=int, default=3)
    p.add_argument("--instance", choices=["worst", "long-tail"], default="worst")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--sep", default="\t", help="column separator of the table")
    p.add_argument("--plot", metavar="PATH", help="write a log-log figure")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
