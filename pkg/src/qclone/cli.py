"""Command-line front end: sweeps, fidelity queries, verification suites.

Exit codes: 0 success, 1 verification failure, 2 I/O error, 3 unknown
machine, 4 bad parameter.
"""
from __future__ import annotations

import argparse
import sys

from .cloners import (
    MACHINE_NAMES,
    UnknownMachineError,
    average_fidelity,
    machine_fidelity,
    resolve_machine,
)
from .states import PureSchmidtState
from .sweep import SweepConfig, curve_row, sweep_rows, write_csv
from .verify import SUITE_NAMES, format_report, run_suite, suite_passed

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_IO = 2
EXIT_UNKNOWN_MACHINE = 3
EXIT_BAD_PARAMETER = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qclone",
        description="Two-qubit cloning machines, Pauli channels and correlation broadcasting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="emit a correlation curve as CSV")
    p_sweep.add_argument("--machine", required=True, help="machine preset name")
    p_sweep.add_argument("--family", default="pure", choices=["pure", "werner"])
    p_sweep.add_argument("--points", type=int, default=201, help="grid points (>= 2)")
    p_sweep.add_argument("--out", default="-", help="output CSV path ('-' for stdout)")

    p_fid = sub.add_parser("fidelity", help="fidelity of one machine")
    p_fid.add_argument("machine", help="machine preset name")
    group = p_fid.add_mutually_exclusive_group(required=True)
    group.add_argument("--alpha2", type=float, help="pure-input alpha^2 in [0, 1]")
    group.add_argument("--x", type=float, help="Werner-input parameter in [-1, 1]")
    group.add_argument("--average", action="store_true", help="average over alpha^2")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite_pos", nargs="?", default=None, metavar="suite",
                          help="constants, oracles, optima or all")
    p_verify.add_argument("--suite", default=None, help="same as the positional suite")

    sub.add_parser("list-machines", help="list machine preset names")
    return parser


def _cmd_sweep(args) -> int:
    if args.points < 2:
        print(f"error: --points must be >= 2, got {args.points}", file=sys.stderr)
        return EXIT_BAD_PARAMETER
    try:
        config = SweepConfig(
            machine=args.machine,
            input_family=args.family,
            grid_points=args.points,
            output_path=args.out,
        )
        rows = sweep_rows(config)
    except UnknownMachineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_MACHINE
    try:
        write_csv(rows, config.output_path, stream=sys.stdout)
    except OSError as exc:
        print(f"error: cannot write {config.output_path!r}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_fidelity(args) -> int:
    try:
        preset = resolve_machine(args.machine)
    except UnknownMachineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_MACHINE
    if args.average:
        value = average_fidelity(preset)
    elif args.alpha2 is not None:
        if not 0.0 <= args.alpha2 <= 1.0:
            print(f"error: --alpha2 must lie in [0, 1], got {args.alpha2}", file=sys.stderr)
            return EXIT_BAD_PARAMETER
        value = machine_fidelity(preset, PureSchmidtState.from_alpha_sq(args.alpha2))
    else:
        if not -1.0 <= args.x <= 1.0:
            print(f"error: --x must lie in [-1, 1], got {args.x}", file=sys.stderr)
            return EXIT_BAD_PARAMETER
        value = curve_row(preset, "werner", args.x).fidelity
    print(f"{value:.6f}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    suite = args.suite_pos or args.suite or "all"
    if suite not in SUITE_NAMES:
        print(
            f"error: unknown suite {suite!r}; valid suites: {', '.join(SUITE_NAMES)}",
            file=sys.stderr,
        )
        return EXIT_BAD_PARAMETER
    results = run_suite(suite)
    print(format_report(results))
    return EXIT_OK if suite_passed(results) else EXIT_VERIFY_FAILED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "fidelity":
        return _cmd_fidelity(args)
    if args.command == "verify":
        return _cmd_verify(args)
    for name in MACHINE_NAMES:
        print(name)
    return EXIT_OK


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
