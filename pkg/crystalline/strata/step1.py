# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Pointwise checks of the two identities that reduce a break point stratum
S_{(a, b)} to an open subset of a closed stratum:

1. (a, b) is a break point of NP(C_s) iff (1, b) is a break point of
   NP(wedge^a C_s).
2. Inside S_{>= nu_1}, a point lies in S_{(a, b)} iff NP lies not above nu_2,
   where nu_1 and nu_2 are the two extremal polygons through (1, b) and
   (1, b + 1).

The second identity needs integer slopes. Iterating c times multiplies every
slope by c, so the polygon of wedge^a C_s is scaled by the least common
denominator of its slopes and (1, b) becomes (1, b c).
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from crystalline.fcrystal import exterior_power
from crystalline.polygons import Polygon, has_break_point, newton_polygon
from crystalline.shared import CrystallineError

from .closed_points import ClosedPoint, enumerate_closed_points
from .family import FamilyCrystal

logger = logging.getLogger(__name__)

Ordinates = list[Fraction]


def nu1_ordinates(b: int, rank: int, height: Fraction) -> Ordinates:
    """
    Ordinates of nu_1: slope b, then b + 1 repeated rank - 2 times, then the
    rest up to height. The vertex (1, b) is on it.
    """
    inner = [Fraction(b + i * (b + 1)) for i in range(1, rank - 1)]
    return [Fraction(0), Fraction(b)] + inner + [Fraction(height)]


def nu2_ordinates(b: int, rank: int, height: Fraction) -> Ordinates:
    """
    Ordinates of nu_2: slope b + 1 repeated rank - 1 times, then the rest up
    to height. The vertex (1, b + 1) is on it.
    """
    return [Fraction(0)] + [Fraction(i * (b + 1)) for i in range(1, rank)] + [Fraction(height)]


def _above(polygon: Polygon, ordinates: Ordinates) -> bool:
    return all(a >= b for a, b in zip(polygon.ordinates(), ordinates))


def _slope_denominator(polygon: Polygon) -> int:
    return math.lcm(*(slope.denominator for slope, _ in polygon.segments))


@dataclass(frozen=True)
class Step1Record:
    """The identity checks at one point. None marks a check that does not apply."""

    point: ClosedPoint
    in_stratum: bool | None = None
    wedge_break_point: bool | None = None
    above_nu1: bool | None = None
    above_nu2: bool | None = None
    error: CrystallineError | None = field(default=None, compare=False)

    @property
    def identity1(self) -> bool | None:
        if self.in_stratum is None or self.wedge_break_point is None:
            return None
        return self.in_stratum == self.wedge_break_point

    @property
    def identity2(self) -> bool | None:
        if self.in_stratum is None or self.above_nu1 is None:
            return None
        if not self.above_nu1:
            return not self.in_stratum
        if self.above_nu2 is None:
            return None
        return self.in_stratum == (not self.above_nu2)

    @property
    def passed(self) -> bool:
        return self.identity1 is not False and self.identity2 is not False

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_dict(),
            "in_stratum": self.in_stratum,
            "identity1": self.identity1,
            "identity2": self.identity2,
            "error": None if self.error is None else type(self.error).__name__,
        }


@dataclass(frozen=True)
class Step1Report:
    break_point: tuple[Fraction, Fraction]
    records: tuple[Step1Record, ...]

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def stratum(self) -> list[ClosedPoint]:
        """S_{(a, b)} among the sampled points."""
        return [record.point for record in self.records if record.in_stratum]

    def to_dict(self) -> dict:
        a, b = self.break_point
        return {
            "break_point": [str(a), str(b)],
            "passed": self.passed,
            "stratum": [p.to_dict() for p in self.stratum],
            "points": [record.to_dict() for record in self.records],
        }


def _trivial_membership(a: Fraction, b: Fraction, rank: int) -> bool | None:
    """Membership that does not depend on the point, or None."""
    if a.denominator != 1 or b.denominator != 1 or a < 0 or b < 0:
        return False
    if a == 0:
        return b == 0
    if a > rank:
        return False
    return None


def check_point(family: FamilyCrystal, point: ClosedPoint, a: int, b: int) -> Step1Record:
    """
    Runs both identity checks at one point for the integer break point (a, b)
    with 1 <= a <= r. Errors of the library are recorded, not raised.
    """
    try:
        crystal = family.evaluate_at(point)
        in_stratum = has_break_point(newton_polygon(crystal), (a, b))
        wedge = newton_polygon(exterior_power(crystal, a))
    except CrystallineError as error:
        logger.info("%s at %s: %s", type(error).__name__, point, error)
        return Step1Record(point, error=error)
    wedge_break_point = has_break_point(wedge, (1, b))
    rank = wedge.rank
    if rank == 1:
        return Step1Record(point, in_stratum, wedge_break_point)
    c = _slope_denominator(wedge)
    scaled = wedge.scaled(c)
    scaled_b = b * c
    height = scaled.height
    # for rank 2, nu_1 is a polygon through (1, b c) only if its last slope exceeds b c
    if rank == 2 and height < 2 * scaled_b + 1:
        return Step1Record(point, in_stratum, wedge_break_point)
    above_nu1 = _above(scaled, nu1_ordinates(scaled_b, rank, height))
    above_nu2 = _above(scaled, nu2_ordinates(scaled_b, rank, height))
    return Step1Record(point, in_stratum, wedge_break_point, above_nu1, above_nu2)


def step1_report(
    family: FamilyCrystal,
    break_point: tuple[Fraction | int, Fraction | int],
    max_degree: int,
    jobs: int = 1,
) -> Step1Report:
    """
    Checks both identities at every closed point of degree at most D.

    Break points off N^2 and (0, b) with b > 0 have an empty stratum, (0, 0)
    is a break point everywhere and a > r never is; those cases need no
    evaluation beyond recording the membership.

    :param family: The family.
    :type family: FamilyCrystal
    :param break_point: P_0 = (a, b).
    :type break_point: tuple[Fraction | int, Fraction | int]
    :param max_degree: D.
    :type max_degree: int
    :param jobs: Number of worker threads.
    :type jobs: int
    :rtype: Step1Report
    """
    a, b = (Fraction(c) for c in break_point)
    points = enumerate_closed_points(family, max_degree)
    trivial = _trivial_membership(a, b, family.rank)
    if trivial is not None:
        records = tuple(Step1Record(point, trivial) for point in points)
        return Step1Report((a, b), records)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as executor:
        records = tuple(
            executor.map(lambda point: check_point(family, point, int(a), int(b)), points)
        )
    report = Step1Report((a, b), records)
    if not report.passed:
        failed = [str(record.point) for record in records if not record.passed]
        logger.warning("identities fail for (%s, %s) at %s", a, b, ", ".join(failed))
    return report


def verify_step1_identities(
    family: FamilyCrystal,
    break_point: tuple[Fraction | int, Fraction | int],
    max_degree: int,
    jobs: int = 1,
) -> bool:
    """
    True iff both identities hold at every sampled point where they apply.

    :rtype: bool
    """
    return step1_report(family, break_point, max_degree, jobs).passed
