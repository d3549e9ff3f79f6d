"""Command-line front end: fcf tables, entropy reports, surface sweeps.

All output is deterministic (12 significant digits, fixed ordering) so
downstream tooling can diff runs.  Exit status is 0 on success and 1 on
any error, including bad flags.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import IO, Optional

from .entropy import JointDistribution, entropy_report
from .fcf import OscillatorPair, TruncationFailure, fcf_distribution
from .indexmap import UNBOUNDED, Factorization
from .surface import SweepConfig, sweep, write_csv

__all__ = ["main"]

_LOG_BASES = {"2": 2.0, "e": math.e, "10": 10.0}


def _parse_split(text: str) -> tuple[Optional[int], ...]:
    """'2' -> (2, unbounded); '2,3' -> (2, 3, unbounded)."""
    parts = text.split(",")
    if not 1 <= len(parts) <= 2:
        raise argparse.ArgumentTypeError(
            f"--split takes 1 or 2 comma-separated sizes, got {text!r}"
        )
    sizes = []
    for part in parts:
        try:
            size = int(part)
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"--split sizes must be integers, got {part!r}"
            ) from None
        if size < 1:
            raise argparse.ArgumentTypeError(
                f"--split sizes must be >= 1, got {size}"
            )
        sizes.append(size)
    return tuple(sizes) + (UNBOUNDED,)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fcentropy",
        description="Franck-Condon factors and entropies of their level distributions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fcf_p = sub.add_parser("fcf", help="tabulate transition probabilities")
    entropy_p = sub.add_parser("entropy", help="entropy report for one transition")
    surface_p = sub.add_parser("surface", help="mutual-information surface as CSV")

    for p in (fcf_p, entropy_p):
        p.add_argument("--a", type=float, required=True, help="potential shift")
        p.add_argument(
            "--l", type=float, required=True, help="oscillator length ratio"
        )
    for p in (fcf_p, entropy_p, surface_p):
        p.add_argument(
            "--tail-tol",
            type=float,
            default=1e-12,
            help="probability mass allowed beyond truncation (default 1e-12)",
        )
    fcf_p.add_argument(
        "--n-cap",
        type=int,
        default=10_000,
        help="hard cap on scanned levels (default 10000)",
    )
    for p in (entropy_p, surface_p):
        p.add_argument(
            "--split",
            type=_parse_split,
            default=(2, UNBOUNDED),
            metavar="Q1[,Q2]",
            help="bounded subsystem sizes; an unbounded factor is appended (default 2)",
        )
        p.add_argument(
            "--log-base",
            choices=sorted(_LOG_BASES),
            default="e",
            help="entropy logarithm base (default e)",
        )
    surface_p.add_argument("--a-min", type=float, default=0.0)
    surface_p.add_argument("--a-max", type=float, default=4.0)
    surface_p.add_argument("--a-steps", type=int, default=100)
    surface_p.add_argument("--l-min", type=float, default=1.05)
    surface_p.add_argument("--l-max", type=float, default=3.0)
    surface_p.add_argument("--l-steps", type=int, default=100)
    surface_p.add_argument(
        "--out", default=None, help="CSV destination (default: stdout)"
    )
    return parser


def cmd_fcf(args: argparse.Namespace, out: IO[str]) -> int:
    pair = OscillatorPair(shift=args.a, length_ratio=args.l)
    dist = fcf_distribution(
        pair, tail_tolerance=args.tail_tol, n_cap=args.n_cap
    )
    out.write("n P cumulative\n")
    cumulative = 0.0
    for n, p in enumerate(dist.probs):
        cumulative += p
        out.write(f"{n} {p:.12g} {cumulative:.12g}\n")
    out.write(f"tail_mass {dist.tail_mass:.12g}\n")
    return 0


def cmd_entropy(args: argparse.Namespace, out: IO[str]) -> int:
    pair = OscillatorPair(shift=args.a, length_ratio=args.l)
    dist = fcf_distribution(pair, tail_tolerance=args.tail_tol, renormalize=True)
    joint = JointDistribution.from_sequence(dist.probs, Factorization(args.split))
    report = entropy_report(joint, base=_LOG_BASES[args.log_base])
    labels = "ABC"
    for label, h in zip(labels, report.h_parts):
        out.write(f"H_{label} {h:.12g}\n")
    out.write(f"H_joint {report.h_joint:.12g}\n")
    out.write(f"MI {report.mutual_information:.12g}\n")
    if len(report.h_parts) == 2:
        name = "subadditivity"
    else:
        out.write(f"SSA_slack {report.inequality_slack:.12g}\n")
        name = "strong subadditivity"
    verdict = "yes" if report.inequality_slack >= -1e-12 else "no"
    out.write(f"{name} satisfied: {verdict}\n")
    return 0


def cmd_surface(args: argparse.Namespace, out: IO[str]) -> int:
    config = SweepConfig(
        a_range=(args.a_min, args.a_max, args.a_steps),
        l_range=(args.l_min, args.l_max, args.l_steps),
        sizes=args.split,
        tail_tolerance=args.tail_tol,
        log_base=_LOG_BASES[args.log_base],
        out_path=args.out,
    )
    surface = sweep(config)
    if config.out_path is None:
        write_csv(surface, out)
    else:
        with open(config.out_path, "w", encoding="ascii", newline="") as fh:
            write_csv(surface, fh)
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; the contract is 0/1
        return 0 if exc.code in (0, None) else 1
    handlers = {"fcf": cmd_fcf, "entropy": cmd_entropy, "surface": cmd_surface}
    try:
        return handlers[args.command](args, sys.stdout)
    except (ValueError, TruncationFailure, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
