#!/usr/bin/env python3

from argparse import ArgumentParser, ArgumentTypeError
from contextlib import contextmanager
from pathlib import Path
import csv
import json
import sys

import mpmath

from catalog.entries import resolve_strategy
from experiments.config import (
    DEFAULT_HORIZON,
    DEFAULT_I_MAX,
    DEFAULT_SAMPLES,
    DEFAULT_TRAJECTORY_DIGITS,
    DEFAULT_WORKERS,
    default_precision_bits,
)
from experiments.sweep import SCALES, SweepConfig, header, sweep
from numerics.real import MIN_PRECISION_BITS, Numerics
from numerics.rendering import render
from oracle.intersect import intersect
from oracle.validity import verify_strategy_validity
from search.errors import DomainError, HorizonExhaustedError, ZigzagValidationError
from search.target import Target
from search.trajectory import Trajectory
from verification.bounds import BoundSpec
from verification.refutation import refute_polynomial_bound
from verification.suite import SUITES, SuiteOptions, SuiteRunner
from verification.upper_bound import find_min_constant

import logging as l

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def number(text: str) -> str:
    """Keeps decimal arguments as text so each precision parses them itself."""
    try:
        mpmath.mpf(text)
    except (ValueError, TypeError):
        raise ArgumentTypeError(f"'{text}' is not a number")
    return text


def precision(text: str) -> int:
    try:
        bits = int(text)
    except ValueError:
        raise ArgumentTypeError(f"'{text}' is not an integer")
    if bits < MIN_PRECISION_BITS:
        raise ArgumentTypeError(f"precision must be at least {MIN_PRECISION_BITS} bits")
    return bits


@contextmanager
def output(path: Path | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as f:
            yield f


def cmd_sweep(args) -> int:
    config = SweepConfig(
        strategy_id=args.strategy,
        d=args.d,
        u_min=args.u_min,
        u_max=args.u_max,
        samples=args.samples,
        scale=args.scale,
        precision_bits=args.precision_bits,
        horizon=args.horizon,
        reference=args.reference,
    )
    rows = sweep(config, args.workers)
    columns = header(args.linear, args.reference)
    with output(args.out) as stream:
        if args.format == "json":
            json.dump([dict(zip(columns, row.fields(args.linear, args.reference))) for row in rows], stream, indent=2)
            stream.write("\n")
        else:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(row.fields(args.linear, args.reference) for row in rows)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    if args.suite == "diff" and args.k is not None:
        try:
            order = int(args.k)
        except ValueError:
            parser.error(f"--k must be an integer difference order for the diff suite, got {args.k}")
        if order < 1:
            parser.error(f"--k must be at least 1, got {order}")
        if args.x is not None and mpmath.mpf(args.x) <= order:
            parser.error(f"--x must exceed --k, got x={args.x}, k={order}")
    if args.x is not None and (args.suite != "diff" or args.k is None):
        parser.error("--x needs the diff suite and --k")
    if args.suite in ("lower", "all") and (args.a is None) != (args.k is None):
        parser.error("--a and --k must be given together")

    numerics = Numerics.at(args.precision_bits)
    options = SuiteOptions(args.i_max, args.a, args.k, args.x)
    report = SuiteRunner(args.workers, not args.no_confirm).run(args.suite, numerics, options)

    if args.find_c:
        c = find_min_constant(resolve_strategy("algorithm-1"), BoundSpec(), args.i_max, numerics=numerics)
        report.notes["find_c.non_normative"] = f"{c.numerator}/{c.denominator} ({float(c)})"

    with output(args.out) as stream:
        if args.format == "csv":
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(["check_id", "params", "margin_log2", "margin", "pass", "precision_bits"])
            for record in report.to_json()["records"]:
                writer.writerow([
                    record["check_id"],
                    json.dumps(record["params"], sort_keys=True),
                    record["margin_log2"] or "",
                    record["margin"] or "",
                    record["pass"],
                    record["precision_bits"],
                ])
        else:
            json.dump(report.to_json(), stream, indent=2)
            stream.write("\n")
    report.print_stats(sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAILED


def load_trajectory(args, entry, numerics: Numerics) -> Trajectory:
    if args.trajectory is None:
        return entry.trajectory(args.d, args.rounds, numerics)
    traj = Trajectory.read_csv(args.trajectory, numerics)
    validity = verify_strategy_validity(traj, numerics)
    for violation in validity.violations:
        l.warning(f"{args.trajectory}: {violation.kind} at segment {violation.segment_index}, {violation.detail}")
    l.info(f"Loaded {len(traj)} vertices from {args.trajectory}")
    return traj


def cmd_oracle(args) -> int:
    numerics = Numerics.at(args.precision_bits)
    entry = resolve_strategy(args.strategy, args.d)
    target = Target.of(numerics, args.u, args.d, args.side)

    analytic = entry.catch_time(target, args.horizon, numerics)
    caught = intersect(load_trajectory(args, entry, numerics), target, numerics)
    if caught is None:
        limit = args.trajectory if args.trajectory is not None else f"{args.rounds} rounds; raise --rounds"
        print(f"Target not caught within {limit}", file=sys.stderr)
        return EXIT_FAILED


    discrepancy = abs(caught.time - analytic) / analytic
    result = {
        "strategy": entry.strategy_id,
        "u": render(target.u),
        "d": render(target.d),
        "side": target.side,
        "analytic_time": render(analytic),
        "oracle_time": render(caught.time),
        "segment_index": caught.segment_index,
        "relative_discrepancy": render(discrepancy),
    }
    with output(args.out) as stream:
        if args.format == "json":
            json.dump(result, stream, indent=2)
            stream.write("\n")
        else:
            print(f"analytic time: {result['analytic_time']}", file=stream)
            print(f"oracle time: {result['oracle_time']} (segment {caught.segment_index})", file=stream)
            print(f"relative discrepancy: {result['relative_discrepancy']}", file=stream)
    return EXIT_OK


def cmd_trajectory(args, parser) -> int:
    if args.rounds < 1:
        parser.error(f"--rounds must be at least 1, got {args.rounds}")
    numerics = Numerics.at(args.precision_bits)
    entry = resolve_strategy(args.strategy, args.d)
    traj = entry.trajectory(args.d, args.rounds, numerics)
    with output(args.out) as stream:
        traj.write_rows(stream, args.digits)
    return EXIT_OK


def cmd_refute(args) -> int:
    numerics = Numerics.at(args.precision_bits)
    entry = resolve_strategy(args.strategy)
    witness = refute_polynomial_bound(entry, args.a, args.k, args.i_max, args.exact, numerics)
    result = {"strategy": entry.strategy_id, "a": args.a, "k": args.k, "i_max": args.i_max, "witness": None}
    if witness is not None:
        result["witness"] = {
            "round_index": witness.round_index,
            "u_star_log2": render(witness.u_star_log2),
            "cr_log2": render(witness.cr_log2),
            "bound_log2": render(witness.bound_log2),
        }
    with output(args.out) as stream:
        if args.format == "json":
            json.dump(result, stream, indent=2)
            stream.write("\n")
        elif witness is None:
            print(f"no witness within {args.i_max} rounds", file=stream)
        else:
            print(f"witness at round {witness.round_index}: log2 u* = {result['witness']['u_star_log2']}, "
                  f"log2 CR = {result['witness']['cr_log2']} > log2 bound = {result['witness']['bound_log2']}", file=stream)
    return EXIT_OK if witness is not None else EXIT_FAILED


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument("--precision-bits", type=precision, default=default_precision_bits(), help="Working precision in bits.")
    common.add_argument("--format", choices=["csv", "json"], default=None, help="Output format.")
    common.add_argument("--out", type=Path, default=None, help="Write output here instead of stdout.")
    common.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging.")

    parser = ArgumentParser(description="Zigzag search for an escaping target: sweeps, oracle checks and bound certification.")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("sweep", parents=[common], help="Competitive ratio over a range of u.")
    p.add_argument("--strategy", default="algorithm-1")
    p.add_argument("--d", type=number, default="1")
    p.add_argument("--u-min", type=number, default="1")
    p.add_argument("--u-max", type=number, default="1000")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--scale", choices=SCALES, default="log")
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--linear", action="store_true", help="Render linear values where they fit.")
    p.add_argument("--reference", action="store_true", help="Add the known-speed reference ratio and the ratio over it.")
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="Worker threads, 0 to run inline.")

    p = commands.add_parser("verify", parents=[common], help="Run a verification suite.")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--i-max", type=int, default=DEFAULT_I_MAX)
    p.add_argument("--a", type=number, default=None, help="Constant of the bound to refute.")
    p.add_argument("--k", type=number, default=None, help="Exponent to refute, or difference order for the diff suite.")
    p.add_argument("--x", type=number, default=None, help="Single point for the diff suite.")
    p.add_argument("--find-c", action="store_true", help="Report the smallest grid constant passing the key points (non-normative).")
    p.add_argument("--no-confirm", action="store_true", help="Skip the re-run at twice the precision.")
    p.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="Worker threads, 0 to run inline.")

    p = commands.add_parser("oracle", parents=[common], help="Analytic catch time against trajectory intersection.")
    p.add_argument("--strategy", default="algorithm-1")
    p.add_argument("--u", type=number, required=True)
    p.add_argument("--d", type=number, default="1")
    p.add_argument("--side", type=int, choices=[0, 1], default=0)
    p.add_argument("--rounds", type=int, default=8)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    p.add_argument("--trajectory", type=Path, default=None, help="Intersect a t,x CSV trajectory instead of the strategy's own.")

    p = commands.add_parser("trajectory", parents=[common], help="Export trajectory vertices as t,x CSV.")
    p.add_argument("--strategy", default="algorithm-1")
    p.add_argument("--d", type=number, default="1")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--digits", type=int, default=DEFAULT_TRAJECTORY_DIGITS)

    p = commands.add_parser("refute", parents=[common], help="Search a witness against CR <= a u^k.")
    p.add_argument("--strategy", default="algorithm-1")
    p.add_argument("--a", type=number, required=True)
    p.add_argument("--k", type=number, required=True)
    p.add_argument("--i-max", type=int, default=40)
    p.add_argument("--exact", action="store_true", help="Use exact cumulative sums instead of the product bound.")

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)

    l.basicConfig(level=l.DEBUG if args.verbose else l.WARNING)

    try:
        if args.command == "sweep":
            return cmd_sweep(args)
        elif args.command == "verify":
            return cmd_verify(args, parser)
        elif args.command == "oracle":
            return cmd_oracle(args)
        elif args.command == "trajectory":
            return cmd_trajectory(args, parser)
        elif args.command == "refute":
            return cmd_refute(args)
    except (DomainError, ZigzagValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HorizonExhaustedError as e:
        print(f"error: {e}; raise --horizon or --rounds", file=sys.stderr)
        return EXIT_FAILED
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
