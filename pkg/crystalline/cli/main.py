# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Entry point of the ``crystalline`` executable.

Usage:
    crystalline polygon --input crystal.json
    crystalline strata --input family.json --degree 3 --plot strata.svg
    crystalline asdim --input system.json --cross-check
    crystalline verify [--suite mazur] [--list]
"""

import argparse
import json
import logging
import sys
from typing import Sequence

from pydantic import ValidationError

from crystalline.shared.caps import reset_caps

from .commands import ExitCode, Outcome, run
from .job_config import Command, JobConfig

logger = logging.getLogger(__name__)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="JSON output file (default: stdout)")
    common.add_argument("--jobs", "-j", type=int, default=1, help="worker threads (default: 1)")
    common.add_argument("--seed", type=int, help="seed of the random generator")
    common.add_argument("--verbose", "-v", action="store_true", help="log at debug level")

    computation = argparse.ArgumentParser(add_help=False)
    computation.add_argument("--input", "-i", required=True, help="description file")
    computation.add_argument("--precision", "-m", type=int, help="starting precision m")
    computation.add_argument(
        "--precision-cap",
        type=int,
        default=64,
        help="largest precision tried when doubling (default: 64)",
    )

    parser = argparse.ArgumentParser(
        prog="crystalline", description="Polygons and strata of F-crystals over finite fields"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser(
        Command.POLYGON.value,
        parents=[common, computation],
        help="Hodge and Newton polygon of a crystal",
    )
    strata = commands.add_parser(
        Command.STRATA.value, parents=[common, computation], help="Newton strata of a family"
    )
    strata.add_argument("--degree", "-D", type=int, default=2, help="largest point degree")
    strata.add_argument("--plot", help="SVG file for the observed Newton polygons")
    strata.add_argument("--verify-step1", metavar="A,B", help="check the identities at (a, b)")
    asdim = commands.add_parser(
        Command.ASDIM.value,
        parents=[common, computation],
        help="Artin-Schreier dimension of x = A x^[p]",
    )
    asdim.add_argument("--degree", "-D", type=int, default=2, help="largest point degree")
    asdim.add_argument(
        "--cross-check", action="store_true", help="compare with brute force and the p-rank"
    )
    verify = commands.add_parser(
        Command.VERIFY.value, parents=[common], help="run the verification suites"
    )
    verify.add_argument("--suite", action="append", default=[], help="suite to run (repeatable)")
    verify.add_argument("--list", action="store_true", help="print the suite names")
    return parser


def job_config(args: argparse.Namespace) -> JobConfig:
    """
    Validates parsed arguments.

    :raises ValidationError: For inconsistent values.
    """
    values = {
        "command": args.command,
        "input": getattr(args, "input", None),
        "output": args.output,
        "max_degree": getattr(args, "degree", 2),
        "precision": getattr(args, "precision", None),
        "precision_cap": getattr(args, "precision_cap", 64),
        "jobs": args.jobs,
        "plot": getattr(args, "plot", None),
        "verify_step1": getattr(args, "verify_step1", None),
        "cross_check": getattr(args, "cross_check", False),
        "suite": getattr(args, "suite", []),
        "list_suites": getattr(args, "list", False),
        "verbose": args.verbose,
    }
    if args.seed is not None:
        values["seed"] = args.seed
    return JobConfig(**values)


def _write(outcome: Outcome, config: JobConfig) -> None:
    text = json.dumps(outcome.document, indent=2) + "\n"
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8") as file:
            file.write(text)
    if outcome.svg is not None and config.plot is not None:
        with open(config.plot, "w", encoding="utf-8") as file:
            file.write(outcome.svg)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parses the command line, runs the command and writes its JSON document.

    :return: The exit code, see :class:`~crystalline.cli.commands.ExitCode`.
    :rtype: int
    """
    args = _parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = job_config(args)
    except ValidationError as error:
        print(f"crystalline: {error}", file=sys.stderr)
        return int(ExitCode.DESCRIPTION_ERROR)
    reset_caps(config.caps)
    outcome = run(config, show_progress=sys.stderr.isatty())
    try:
        _write(outcome, config)
    except OSError as error:
        logger.error("cannot write output: %s", error)
        return int(ExitCode.DESCRIPTION_ERROR)
    return int(outcome.code)


if __name__ == "__main__":
    sys.exit(main())
