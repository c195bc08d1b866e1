# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
The four sub-commands. Each returns an :class:`Outcome` holding the JSON
document and the exit code; reading flags and writing files is left to
:mod:`crystalline.cli.main`.
"""

import contextlib
import logging
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, Iterator, TypeVar

from progress.bar import Bar

from crystalline.artinschreier import (
    ASFamily,
    ASInstance,
    as_dimension,
    as_stratify,
    brute_force_as_dimension,
    corollary3_crystal,
)
from crystalline.lark import FamilyDescription, load_as_input, load_crystal, load_family
from crystalline.polygons import break_points, hodge_polygon, newton_polygon
from crystalline.shared import (
    CapExceeded,
    CrystallineError,
    DescriptionError,
    InsufficientPrecision,
    NotACrystal,
    NotStabilized,
    PrecisionOverflow,
    active_caps,
)
from crystalline.strata import (
    StratumReport,
    enumerate_closed_points,
    polygon_svg,
    scan,
    step1_report,
)
from crystalline.verification import SUITES, run_suites

from .job_config import Command, JobConfig

logger = logging.getLogger(__name__)

T = TypeVar("T")

#: Callback invoked once per finished unit of work.
Tick = Callable[[object], None]


class ExitCode(IntEnum):
    """Process exit codes of ``crystalline``."""

    OK = 0
    #: A verification suite, an identity check or a cross-check failed.
    CHECK_FAILED = 1
    #: The input file could not be read or is inconsistent.
    DESCRIPTION_ERROR = 2
    #: det(M) vanishes modulo p^m.
    NOT_A_CRYSTAL = 3
    #: Still undetermined at the precision cap.
    PRECISION_EXHAUSTED = 4
    #: A resource cap was hit or a brute-force count did not settle.
    CAP_EXCEEDED = 5


class PrecisionCapReached(InsufficientPrecision):
    """Doubling the precision would pass the configured cap."""


@dataclass
class Outcome:
    """What a command produced."""

    document: dict
    code: ExitCode = ExitCode.OK
    #: SVG text for the --plot destination.
    svg: str | None = None


def exit_code(error: Exception) -> ExitCode:
    """
    The exit code of an error that ended a command.

    :param error: The error.
    :type error: Exception
    :rtype: ExitCode
    """
    if isinstance(error, NotACrystal):
        return ExitCode.NOT_A_CRYSTAL
    if isinstance(error, (InsufficientPrecision, PrecisionOverflow)):
        return ExitCode.PRECISION_EXHAUSTED
    if isinstance(error, (CapExceeded, NotStabilized)):
        return ExitCode.CAP_EXCEEDED
    return ExitCode.DESCRIPTION_ERROR


def error_document(error: Exception) -> dict:
    document: dict = {"error": type(error).__name__, "message": str(error)}
    if isinstance(error, DescriptionError) and error.line is not None:
        document["line"] = error.line
        document["column"] = error.column
    return document


def escalate(compute: Callable[[int], T], start: int, cap: int) -> tuple[T, int]:
    """
    Runs compute(m) for m = start, 2 start, 4 start, ... until it stops
    raising InsufficientPrecision. NotACrystal is retried like any other
    undetermined result and re-raised when the cap, or the largest
    representable modulus, is reached with det(M) still zero.

    :param compute: The computation at precision m.
    :type compute: Callable[[int], T]
    :param start: First precision.
    :type start: int
    :param cap: Largest precision tried.
    :type cap: int
    :raises NotACrystal: If det(M) vanishes at every precision tried.
    :raises PrecisionCapReached: If the result is still undetermined at the cap.
    :return: The result and the precision that determined it.
    :rtype: tuple[T, int]
    """
    precision = start
    singular: NotACrystal | None = None
    while True:
        try:
            return compute(precision), precision
        except PrecisionOverflow:
            if singular is None:
                raise
            raise singular
        except NotACrystal as error:
            singular = error
            if 2 * precision > cap:
                raise
        except InsufficientPrecision as error:
            singular = None
            if 2 * precision > cap:
                raise PrecisionCapReached(
                    f"undetermined up to m = {precision} (cap {cap}): {error}"
                ) from error
        logger.info("undetermined at m = %d, retrying at m = %d", precision, 2 * precision)
        precision *= 2


@contextlib.contextmanager
def progress_bar(label: str, total: int, enabled: bool) -> Iterator[Tick | None]:
    """A progress.bar.Bar advanced by the yielded callback, or None when disabled."""
    if not enabled:
        yield None
        return
    with Bar(label, max=total) as bar:
        yield lambda _: bar.next()


def cmd_polygon(config: JobConfig, show_progress: bool = False) -> Outcome:
    """Hodge and Newton polygon, Newton break points and p-rank of one crystal."""
    description = load_crystal(config.input)  # type: ignore[arg-type]

    def compute(precision: int) -> dict:
        crystal = description.build(precision)
        newton = newton_polygon(crystal)
        return {
            "p": crystal.base.p,
            "d": crystal.base.d,
            "n": crystal.twist,
            "rank": crystal.rank,
            "precision": precision,
            "hodge": hodge_polygon(crystal).segments_list(),
            "newton": newton.segments_list(),
            "break_points": [point.to_list() for point in break_points(newton)],
            "p_rank": newton.multiplicity(0),
        }

    document, _ = escalate(compute, config.precision or description.m, config.precision_cap)
    return Outcome(document)


def _undetermined(error: Exception | None) -> bool:
    # a point with det(M) = 0 mod p^m is rescanned as well
    return isinstance(error, InsufficientPrecision)


def cmd_strata(config: JobConfig, show_progress: bool = False) -> Outcome:
    """
    Scans a family over the closed points of degree at most D. Points whose
    polygon is undetermined trigger a rescan at doubled precision while the
    cap allows; at the cap they stay in the report as errors.
    """
    description: FamilyDescription = load_family(config.input)  # type: ignore[arg-type]
    cap = config.precision_cap

    def compute(precision: int) -> tuple[dict, StratumReport]:
        family = description.build(precision)
        total = len(enumerate_closed_points(family, config.max_degree))
        with progress_bar(f"Scanning at m = {precision}", total, show_progress) as tick:
            report = scan(family, config.max_degree, config.jobs, tick)
        undetermined = [r for r in report.failures if _undetermined(r.error)]
        if undetermined and 2 * precision <= cap:
            raise InsufficientPrecision(f"{len(undetermined)} points are undetermined")
        document = {"precision": precision, **report.to_dict()}
        if config.verify_step1 is not None:
            step1 = step1_report(family, config.verify_step1, config.max_degree, config.jobs)
            document["step1"] = step1.to_dict()
        return document, report

    (document, report), _ = escalate(compute, config.precision or description.m, cap)
    code = ExitCode.OK
    if "step1" in document and not document["step1"]["passed"]:
        code = ExitCode.CHECK_FAILED
    svg = _strata_svg(report) if config.plot is not None else None
    return Outcome(document, code, svg)


def _strata_svg(report: StratumReport) -> str:
    polygons = list(report.strata)
    labels = [f"{polygon} ({len(report.strata[polygon])})" for polygon in polygons]
    return polygon_svg(polygons, labels)


def _oracle_extension(instance: ASInstance) -> int:
    """The exact bound p^n - 1 on e, lowered to what the linear count can reach."""
    p, n, d = instance.params.p, instance.n, instance.params.d
    return max(1, min(p**n - 1, active_caps().max_linear_dimension // (n * d)))


def _instance_document(instance: ASInstance, config: JobConfig) -> tuple[dict, ExitCode]:
    dimension = as_dimension(instance)
    document: dict = {**instance.to_dict(), "dimension": dimension}
    if not config.cross_check:
        return document, ExitCode.OK
    document["oracle_dimension"] = brute_force_as_dimension(instance, _oracle_extension(instance))
    start = config.precision or instance.params.d * instance.n + 1
    crystal, precision = escalate(
        lambda m: corollary3_crystal(instance, m), start, config.precision_cap
    )
    document["corollary3_p_rank"] = newton_polygon(crystal).multiplicity(0)
    document["precision"] = precision
    agree = document["oracle_dimension"] == dimension == document["corollary3_p_rank"]
    return document, ExitCode.OK if agree else ExitCode.CHECK_FAILED


def cmd_asdim(config: JobConfig, show_progress: bool = False) -> Outcome:
    """
    Artin-Schreier dimension of a system, with --cross-check also by brute
    force and as the p-rank of the attached crystal. A family input is
    stratified by dimension over the closed points of degree at most D.
    """
    description = load_as_input(config.input)  # type: ignore[arg-type]
    if isinstance(description, FamilyDescription):
        family: ASFamily = description.build_as_family()
        report = as_stratify(family, config.max_degree, config.jobs, config.cross_check)
        code = ExitCode.CHECK_FAILED if report.cross_check is False else ExitCode.OK
        return Outcome(report.to_dict(), code)
    document, code = _instance_document(description.build(), config)
    return Outcome(document, code)


def cmd_verify(config: JobConfig, show_progress: bool = False) -> Outcome:
    """Runs the verification suites; --list only names them."""
    if config.list_suites:
        return Outcome({"suites": list(SUITES)})
    names = config.suite or list(SUITES)
    with progress_bar("Verifying", len(names), show_progress) as tick:
        results = run_suites(names, config.seed, tick)
    passed = all(result.passed for result in results)
    document = {
        "seed": config.seed,
        "passed": passed,
        "suites": [result.to_dict() for result in results],
    }
    return Outcome(document, ExitCode.OK if passed else ExitCode.CHECK_FAILED)


#: Implementation of each command.
COMMANDS: dict[Command, Callable[[JobConfig, bool], Outcome]] = {
    Command.POLYGON: cmd_polygon,
    Command.STRATA: cmd_strata,
    Command.ASDIM: cmd_asdim,
    Command.VERIFY: cmd_verify,
}


def run(config: JobConfig, show_progress: bool = False) -> Outcome:
    """
    Runs the configured command; errors of the library become an error
    document with the matching exit code.
    """
    try:
        return COMMANDS[config.command](config, show_progress)
    except (CrystallineError, OSError) as error:
        code = exit_code(error)
        logger.error("%s: %s", type(error).__name__, error)
        return Outcome(error_document(error), code)
