"""
The ``deltashell`` command: run one registered operation on a problem file and print
its report as a table or as JSON.
"""

from __future__ import annotations

import sys
from argparse import ArgumentParser, Namespace
from typing import List, Optional, Tuple

from deltashell import log
from deltashell.api.errors import (
    ChannelLimitExceeded,
    DegenerateSignature,
    DomainError,
    MeshTooCoarse,
    PrerequisiteNotMet,
    ProblemFileError,
    ShellConfigError,
    UnsupportedDimension,
)
from deltashell.api.operation import get_operation
from deltashell.api.problem import load_problem
from deltashell.api.report import Report
from deltashell.version import VERSION_STRING

COMMANDS = {
    "kappa": "count the bound states of one channel from the kappa matrix",
    "bounds": "Bargmann, norm, Gershgorin and Kac-Krein bounds with the exact count",
    "criteria": "spectral verdicts for an infinite shell family",
    "total": "total bound states in n dimensions with the channel ledger",
    "sweep": "bound state counts over a grid of shell parameters (CSV)",
    "oracle-check": "compare the kappa matrix count with the independent counters",
}

DIAGNOSED_ERRORS = (
    ProblemFileError,
    ShellConfigError,
    DomainError,
    DegenerateSignature,
    PrerequisiteNotMet,
    UnsupportedDimension,
    ChannelLimitExceeded,
    MeshTooCoarse,
)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="deltashell",
        description="Bound states and spectral verdicts of concentric delta shell "
        "Schrodinger operators",
        epilog="Shell indices in the problem file options (omega_plus and sweep parameters) "
        "are 0-based in radius order.",
    )
    parser.add_argument("--version", action="version", version=VERSION_STRING)
    options = ArgumentParser(add_help=False)
    options.add_argument("problem", help="path to a JSON problem file")
    options.add_argument("--json", action="store_true", help="print the report as JSON")
    options.add_argument("--csv", metavar="PATH", help="write the ledger or sweep table as CSV")
    options.add_argument("--tol", type=float, metavar="X", help="zero band of the inertia")
    options.add_argument(
        "--oracle", action="store_true", help="confirm counts with the independent counters"
    )
    options.add_argument(
        "--strict",
        action="store_true",
        help="fail instead of reporting both counts for a degenerate kappa matrix",
    )
    options.add_argument("--lmax", type=int, metavar="N", help="largest angular number")
    options.add_argument(
        "--length", type=float, metavar="L", help="initial box length of the finite difference counter"
    )
    options.add_argument(
        "--mesh", type=float, metavar="H", help="initial grid step of the finite difference counter"
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True
    for name, help_text in COMMANDS.items():
        commands.add_parser(name, parents=[options], help=help_text)
    return parser


def run(argv: Optional[List[str]] = None) -> Tuple[Report, Namespace]:
    """
    Parse the arguments and run the operation.

    :raises ProblemFileError: and the configuration errors of the library
    """
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args([arg for arg in argv if arg != "deltashell-debug"])
    problem = load_problem(args.problem).with_options(
        tolerance=args.tol,
        oracle=args.oracle or None,
        strict=args.strict or None,
        lmax=args.lmax,
        length=args.length,
        mesh=args.mesh,
    )
    log.debug(f"Running {args.command} on {args.problem}")
    report = get_operation(args.command)(problem).run_operation()
    return report, args


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the console script.

    :return: 0 when no error was reported, 1 otherwise
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, args = run(argv)
    except DIAGNOSED_ERRORS as e:
        log.error(f"{type(e).__name__}: {e}")
        if "--json" in argv:
            failed = Report(next((a for a in argv if a in COMMANDS), "unknown"))
            failed.error(f"{type(e).__name__}: {e}")
            print(failed.to_json())
        return 1

    print(report.to_json() if args.json else report.render())
    if args.csv:
        try:
            report.write_csv(args.csv)
        except ValueError as e:
            log.error(str(e))
            return 1
    if not report.ok:
        for message in report.errors:
            log.error(message)
        return 1
    return 0
