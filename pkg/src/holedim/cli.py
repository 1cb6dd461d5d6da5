"""Command-line interface: dimension reports, sweeps, staircase utilities.

Exit codes: 0 success, 1 failed cross-check, 2 usage or domain error.
JSON goes to stdout in a fixed field order with floats at 12 significant
digits, so reports are byte-reproducible; sweeps stream CSV.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .cantor import cantor_function, cantor_function_inverse, thue_morse_preimage
from .dimension import DimensionEstimate, classify, estimate_dimension
from .oracle import brute_counts
from .sft import BudgetError, Hole, Mode, count_sequence
from .symbolic import as_fraction


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})")


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _decimal20(x: Fraction) -> str:
    """x in [0,1] as a plain decimal truncated to 20 places."""
    whole, rem = divmod(x.numerator, x.denominator)
    frac = rem * 10 ** 20 // x.denominator
    return f"{whole}.{frac:020d}"


def _report(est: DimensionEstimate) -> dict:
    hole = est.hole
    report = {
        "k": hole.k,
        "a": str(hole.a),
        "b": str(hole.b),
        "region": classify(hole).primary,
        "lower": _sig12(est.lower),
        "upper": _sig12(est.upper),
        "positivity": est.positivity.status.value,
        "certificate": est.positivity.certificate,
        "methods": list(est.methods),
        "depth": est.depth,
    }
    if est.reduced_hole is not None:
        report["reduced_hole"] = [str(est.reduced_hole[0]), str(est.reduced_hole[1])]
    return report


def _emit_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_dim(args: argparse.Namespace) -> int:
    hole = Hole(args.k, args.a, args.b)
    est = estimate_dimension(hole, args.depth, method=args.mode)
    _emit_json(_report(est))
    return 0


def _sweep_holes(args: argparse.Namespace) -> List[Tuple[Fraction, Fraction]]:
    m = args.grid
    points = [Fraction(i, m) for i in range(m)]
    holes: List[Tuple[Fraction, Fraction]] = []
    if args.fix_a is not None:
        holes = [(args.fix_a, b) for b in points if args.fix_a < b <= 1]
    elif args.fix_width is not None:
        w = args.fix_width
        holes = [(a, a + w) for a in points if a + w <= 1]
    else:
        holes = [(a, b) for a in points for b in points if a < b]
    holes.sort()
    return holes


def cmd_sweep(args: argparse.Namespace) -> int:
    sys.stdout.write("k,a,b,region,lower,upper,positivity,depth\n")
    for a, b in _sweep_holes(args):
        hole = Hole(args.k, a, b)
        est = estimate_dimension(hole, args.depth, method=args.mode)
        sys.stdout.write(
            f"{hole.k},{float(a):.12g},{float(b):.12g},"
            f"{classify(hole).primary},{est.lower:.12g},{est.upper:.12g},"
            f"{est.positivity.status.value},{est.depth}\n")
    return 0


def cmd_cantor(args: argparse.Namespace) -> int:
    if args.cantor_cmd == "eval":
        value = cantor_function(args.x, args.k)
        _emit_json({"k": args.k, "x": str(args.x), "value": str(value),
                    "decimal": _decimal20(value)})
    elif args.cantor_cmd == "inv":
        value = cantor_function_inverse(args.y, args.k)
        _emit_json({"k": args.k, "y": str(args.y), "value": str(value),
                    "decimal": _decimal20(value)})
    else:
        value = thue_morse_preimage(args.k, args.precision)
        _emit_json({"k": args.k, "precision": args.precision,
                    "value": str(value), "decimal": _decimal20(value)})
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    hole = Hole(args.k, args.a, args.b)
    ok = True
    for mode in (Mode.INNER, Mode.OUTER):
        fast = count_sequence(hole, mode, args.depth).counts
        slow = tuple(brute_counts(hole, mode, args.depth))
        for n in range(1, args.depth + 1):
            match = fast[n - 1] == slow[n - 1]
            ok = ok and match
            if not match:
                print(f"{mode.value} depth {n}: counted {fast[n - 1]}, "
                      f"oracle says {slow[n - 1]}")
        print(f"{mode.value}: depths 1..{args.depth} "
              f"{'agree' if fast == slow else 'DISAGREE'} {list(fast)}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holedim",
        description="Rigorous dimension bounds for survivor sets of the "
                    "base-k map with an open hole.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    dim = sub.add_parser("dim", help="two-sided dimension report for one hole")
    dim.add_argument("--k", type=int, required=True, help="base of the map")
    dim.add_argument("--a", type=_rational, required=True, help="left hole endpoint")
    dim.add_argument("--b", type=_rational, required=True, help="right hole endpoint")
    dim.add_argument("--depth", type=int, default=10, help="word length for the bounds")
    dim.add_argument("--mode", choices=["direct", "reduced", "both"],
                     default="both", help="bounding pipeline(s) to run")
    dim.set_defaults(func=cmd_dim)

    sweep = sub.add_parser("sweep", help="CSV of estimates over a hole grid")
    sweep.add_argument("--k", type=int, required=True)
    sweep.add_argument("--grid", type=int, required=True,
                       help="endpoints range over i/grid")
    sweep.add_argument("--depth", type=int, default=8)
    sweep.add_argument("--mode", choices=["direct", "reduced", "both"],
                       default="direct")
    group = sweep.add_mutually_exclusive_group()
    group.add_argument("--fix-a", type=_rational, default=None,
                       help="hold the left endpoint, sweep the right")
    group.add_argument("--fix-width", type=_rational, default=None,
                       help="hold b - a, sweep the position")
    sweep.set_defaults(func=cmd_sweep)

    cantor = sub.add_parser("cantor", help="staircase function utilities")
    csub = cantor.add_subparsers(dest="cantor_cmd", required=True)
    c_eval = csub.add_parser("eval", help="staircase value at a point")
    c_eval.add_argument("--k", type=int, required=True)
    c_eval.add_argument("--x", type=_rational, required=True)
    c_inv = csub.add_parser("inv", help="staircase preimage of a value")
    c_inv.add_argument("--k", type=int, required=True)
    c_inv.add_argument("--y", type=_rational, required=True)
    c_tm = csub.add_parser("tm-inv", help="preimage of the Thue-Morse constant")
    c_tm.add_argument("--k", type=int, required=True)
    c_tm.add_argument("--precision", type=int, default=64,
                      help="base-k digits of the series to keep")
    cantor.set_defaults(func=cmd_cantor)

    check = sub.add_parser("check", help="cross-check fast counts against the "
                                         "brute-force oracle")
    check.add_argument("--k", type=int, required=True)
    check.add_argument("--a", type=_rational, required=True)
    check.add_argument("--b", type=_rational, required=True)
    check.add_argument("--depth", type=int, default=8,
                       help="check counts up to this depth (at most 10)")
    check.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check" and args.depth > 10:
        parser.error("check is limited to depth 10")
    try:
        return args.func(args)
    except (ValueError, TypeError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
