# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
The Artin-Schreier stratification of affine space by the solution dimension
of x = A(s) x^[p].
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from crystalline.shared import CrystallineError, ParamMismatch
from crystalline.shared.caps import active_caps
from crystalline.strata import ClosedPoint, TeichmullerPolynomial, closed_points, scan
from crystalline.wittring import FieldParams, galois_ring, teichmuller

from .corollary3 import corollary3_family
from .instance import ASInstance, as_dimension

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ASFamily:
    """
    A matrix A(t) of polynomials over F_q in k variables, stored as
    Teichmueller polynomials at precision 1.
    """

    base: FieldParams
    variables: tuple[str, ...]
    entries: tuple[tuple[TeichmullerPolynomial, ...], ...]

    def __post_init__(self) -> None:
        caps = active_caps()
        caps.check("max_variables", len(self.variables))
        caps.check("max_rank", len(self.entries))
        for row in self.entries:
            if len(row) != len(self.entries):
                raise ValueError("Artin-Schreier matrix must be square")
            for entry in row:
                if entry.ring.params != self.base or entry.ring.precision != 1:
                    raise ParamMismatch(f"Entry {entry!r} is not a polynomial over {self.base}")
                if entry.nvars != len(self.variables):
                    raise ValueError(f"Entry {entry!r} has {entry.nvars} variables")
                caps.check("max_entry_degree", entry.degree)

    @classmethod
    def constant(cls, instance: ASInstance, variables: tuple[str, ...] = ("t",)) -> "ASFamily":
        ring = galois_ring(instance.params, 1)
        entries = tuple(
            tuple(
                TeichmullerPolynomial.constant(ring, len(variables), ring.element(x.coords))
                for x in row
            )
            for row in instance.matrix
        )
        return cls(instance.params, variables, entries)

    @property
    def n(self) -> int:
        return len(self.entries)

    def evaluate_at(self, point: ClosedPoint) -> ASInstance:
        """A(s) over the residue field of the point."""
        if point.base != self.base or len(point.coords) != len(self.variables):
            raise ParamMismatch(f"Point {point} does not lie on the base of the family")
        values = [teichmuller(x, 1) for x in point.coords]
        rows = [[entry.evaluate(values).residue() for entry in row] for row in self.entries]
        return ASInstance.from_rows(point.params, rows)

    def to_dict(self) -> dict:
        return {
            "p": self.base.p,
            "d": self.base.d,
            "vars": list(self.variables),
            "A": [[entry.to_list() for entry in row] for row in self.entries],
        }


@dataclass(frozen=True)
class ASRecord:
    point: ClosedPoint
    dimension: int | None = None
    error: CrystallineError | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_dict(),
            "dimension": self.dimension,
            "error": None if self.error is None else type(self.error).__name__,
        }


@dataclass(frozen=True)
class ArtinSchreierReport:
    """Per-point dimensions, the strata Y_d and the p-rank cross-check."""

    family: ASFamily
    max_degree: int
    records: tuple[ASRecord, ...]
    #: Whether Y_d equals the p-rank-d stratum of the attached crystal family
    #: at every point; None if not computed.
    cross_check: bool | None = None

    @property
    def strata(self) -> dict[int, list[ClosedPoint]]:
        """Y_d for every observed dimension d, sorted by d."""
        groups: dict[int, list[ClosedPoint]] = {}
        for record in self.records:
            if record.dimension is not None:
                groups.setdefault(record.dimension, []).append(record.point)
        return dict(sorted(groups.items()))

    def to_dict(self) -> dict:
        return {
            "family": self.family.to_dict(),
            "max_degree": self.max_degree,
            "points": [record.to_dict() for record in self.records],
            "strata": [
                {"dimension": d, "points": [p.to_dict() for p in points]}
                for d, points in self.strata.items()
            ],
            "cross_check": self.cross_check,
        }


def _evaluate(family: ASFamily, point: ClosedPoint) -> ASRecord:
    try:
        return ASRecord(point, as_dimension(family.evaluate_at(point)))
    except CrystallineError as error:
        logger.info("%s at %s: %s", type(error).__name__, point, error)
        return ASRecord(point, error=error)


def as_stratify(
    family: ASFamily, max_degree: int, jobs: int = 1, cross_check: bool = True
) -> ArtinSchreierReport:
    """
    Computes the Artin-Schreier dimension at every closed point of degree at
    most D. With cross_check, the attached crystal family is scanned at
    precision d D n + 1, which certifies its Newton polygons at all these
    points, and its p-rank strata are compared with Y_d point by point.

    :param family: A(t).
    :type family: ASFamily
    :param max_degree: D.
    :type max_degree: int
    :param jobs: Number of worker threads.
    :type jobs: int
    :param cross_check: Run the p-rank comparison.
    :type cross_check: bool
    :raises CapExceeded: If there are too many points.
    :rtype: ArtinSchreierReport
    """
    points = closed_points(family.base, len(family.variables), max_degree)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as executor:
        records = tuple(executor.map(lambda point: _evaluate(family, point), points))
    agreed = None
    if cross_check:
        precision = family.base.d * max_degree * family.n + 1
        crystal_report = scan(corollary3_family(family, precision), max_degree, jobs)
        p_ranks = {record.point: record.p_rank for record in crystal_report.records}
        agreed = all(record.dimension == p_ranks.get(record.point) for record in records)
        if not agreed:
            logger.warning("Artin-Schreier strata and p-rank strata differ")
    return ArtinSchreierReport(family, max_degree, records, agreed)
