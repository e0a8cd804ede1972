#  Copyright © 2026 Walker Ricci Solitons contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#      http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

import argparse
import logging
import shlex
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from walker.common import ExitCode, Report, WalkerError

from ..families import CONDITION_SHAPES, FAMILY_ALIASES, Family, Reading
from .commands import (
    FAMILY_FUNCTIONS,
    FAMILY_PARAMETERS,
    cmd_check,
    cmd_conditions,
    cmd_construct,
    cmd_crosscheck,
    cmd_geometry,
)

logger = logging.getLogger("walker")

PROG = "walker-ricci"

FIELD_COMPONENTS = {"A": "t", "B": "x", "C": "y"}

EPILOG = "Values that start with a minus sign need an equals sign: --lambda=-3/2, --A=-2*t."
LAMBDA_HELP = "Soliton constant, e.g. --lambda=-3/2 (default: sym)"

Command = Callable[[argparse.Namespace, str], Report]

COMMANDS: dict[str, Command] = {
    "geometry": cmd_geometry,
    "check": cmd_check,
    "conditions": cmd_conditions,
    "construct": cmd_construct,
    "crosscheck": cmd_crosscheck,
}


def _shared_options() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    shared.add_argument(
        "--declare",
        action="append",
        default=[],
        metavar="DECLARATION",
        help="Declare a function 'name:(t,x)' or a parameter 'name:param'; repeatable",
    )
    shared.add_argument("--declare-file", metavar="PATH", help="File with one declaration per line")
    shared.add_argument("--eps", choices=("1", "-1", "sym"), default="sym", help="Signature sign (default: sym)")
    shared.add_argument("--format", choices=("json", "text"), default="text", help="Report format (default: text)")
    shared.add_argument("--output", metavar="FILE", help="Write the report to FILE instead of stdout")
    shared.add_argument("--verbose", action="store_true", help="Log pipeline steps to stderr")
    return shared


def _field_options(parser: argparse.ArgumentParser) -> None:
    for name, coordinate in FIELD_COMPONENTS.items():
        parser.add_argument(f"--{name}", default="0", metavar="EXPR", help=f"The d_{coordinate} component (default: 0)")


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_options()
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Curvature and Ricci solitons of three-dimensional Walker metrics.",
        epilog=EPILOG,
        allow_abbrev=False,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    geometry = subparsers.add_parser(
        "geometry", parents=[shared], allow_abbrev=False, help="Connection, curvature and Ricci tensor of a metric"
    )
    geometry.add_argument("--f", required=True, metavar="EXPR", help="Defining function")

    check = subparsers.add_parser(
        "check", parents=[shared], allow_abbrev=False, help="Test a candidate against L_X g + rho = lambda g"
    )
    check.add_argument("--f", required=True, metavar="EXPR", help="Defining function")
    _field_options(check)
    check.add_argument("--lambda", dest="lam", default="sym", metavar="EXPR", help=LAMBDA_HELP)

    conditions = subparsers.add_parser(
        "conditions", parents=[shared], allow_abbrev=False, help="Soliton conditions for a generic vector field"
    )
    conditions.add_argument("--family", choices=CONDITION_SHAPES, default=CONDITION_SHAPES[0])
    conditions.add_argument("--f", metavar="EXPR", help="Override the family's defining function")

    construct = subparsers.add_parser(
        "construct", parents=[shared], allow_abbrev=False, help="Build a family's vector field and check it"
    )
    construct.add_argument("--family", choices=[*(family.value for family in Family), *FAMILY_ALIASES], required=True)
    construct.add_argument("--reading", choices=[reading.value for reading in Reading], default=Reading.DISPLAYED.value)
    for name in (*FAMILY_FUNCTIONS, *FAMILY_PARAMETERS):
        construct.add_argument(f"--{name}", metavar="EXPR", help="Family input (default: generic)")
    construct.add_argument("--lambda", dest="lam", default="sym", metavar="EXPR", help=LAMBDA_HELP)

    crosscheck = subparsers.add_parser(
        "crosscheck", parents=[shared], allow_abbrev=False, help="Compare symbolic tensors with finite differences"
    )
    crosscheck.add_argument("--f", required=True, metavar="EXPR", help="Instantiated defining function")
    _field_options(crosscheck)
    crosscheck.add_argument(
        "--lambda", dest="lam", metavar="RATIONAL", help="Soliton constant, e.g. --lambda=-3/2; enables the residual"
    )
    crosscheck.add_argument("--points", type=int, default=100, help="Number of sample points (default: 100)")
    crosscheck.add_argument("--step", type=float, default=1e-4, help="Finite-difference step (default: 1e-4)")
    crosscheck.add_argument("--tol", type=float, default=1e-5, help="Tolerance (default: 1e-5)")
    crosscheck.add_argument("--seed", type=int, default=0, help="Seed of the sample points (default: 0)")
    return parser


def render(report: Report, output_format: str) -> str:
    return report.to_json() if output_format == "json" else report.to_text()


def main(argv: Sequence[str] | None = None) -> int:
    """Runs one command and returns its exit code: 0 verified, 1 verified false, 2 input error."""
    arguments = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(arguments)
    except SystemExit as error:
        return ExitCode.SUCCESS if error.code in (0, None) else ExitCode.INPUT_ERROR

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s"
    )
    command = shlex.join([PROG, *arguments])
    try:
        report = COMMANDS[args.command](args, command)
        text = render(report, args.format)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    except (WalkerError, OSError) as error:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {error}", file=sys.stderr)
        return ExitCode.INPUT_ERROR
    return report.exit
