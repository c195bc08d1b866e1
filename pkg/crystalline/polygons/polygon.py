# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from crystalline.shared import RankMismatch


class PolygonKind(Enum):
    """Which invariant a polygon describes."""

    #: Elementary divisor exponents; integer slopes.
    HODGE = "hodge"
    #: Dieudonne-Manin slopes; integer vertices.
    NEWTON = "newton"


@dataclass(frozen=True, order=True)
class BreakPoint:
    """A vertex of a polygon graph, endpoints included."""

    x: int
    y: int

    def to_list(self) -> list[int]:
        return [self.x, self.y]


@dataclass(frozen=True)
class Polygon:
    """
    A convex lattice polygon given by ascending slopes with multiplicities.
    """

    kind: PolygonKind
    #: (slope, multiplicity) pairs, slopes strictly increasing.
    segments: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        previous = None
        for slope, multiplicity in self.segments:
            if multiplicity < 1:
                raise ValueError(f"Multiplicity must be positive, got {multiplicity}")
            if previous is not None and slope <= previous:
                raise ValueError(f"Slopes must increase strictly: {previous} then {slope}")
            if slope < 0:
                raise ValueError(f"Slopes must be nonnegative, got {slope}")
            if self.kind == PolygonKind.HODGE and slope.denominator != 1:
                raise ValueError(f"Hodge slopes are integers, got {slope}")
            if self.kind == PolygonKind.NEWTON and (slope * multiplicity).denominator != 1:
                raise ValueError(f"Newton segment {slope} x {multiplicity} ends off the lattice")
            previous = slope

    @classmethod
    def from_slopes(cls, kind: PolygonKind, slopes: Iterable[Fraction | int]) -> "Polygon":
        """
        Builds a polygon from the list of slopes with repetition, in any order.

        :param kind: Hodge or Newton.
        :type kind: PolygonKind
        :param slopes: lambda_1, ..., lambda_r.
        :type slopes: Iterable[Fraction | int]
        :rtype: Polygon
        """
        segments: list[tuple[Fraction, int]] = []
        for slope in sorted(Fraction(s) for s in slopes):
            if segments and segments[-1][0] == slope:
                segments[-1] = (slope, segments[-1][1] + 1)
            else:
                segments.append((slope, 1))
        return cls(kind, tuple(segments))

    @property
    def rank(self) -> int:
        return sum(multiplicity for _, multiplicity in self.segments)

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        """All slopes with repetition, ascending."""
        return tuple(slope for slope, multiplicity in self.segments for _ in range(multiplicity))

    @property
    def height(self) -> Fraction:
        """Ordinate of the right endpoint: the sum of all slopes."""
        return sum((slope * multiplicity for slope, multiplicity in self.segments), Fraction(0))

    def vertices(self) -> list[BreakPoint]:
        """(0, 0), every slope change and the right endpoint."""
        x, y = 0, Fraction(0)
        points = [BreakPoint(0, 0)]
        for slope, multiplicity in self.segments:
            x += multiplicity
            y += slope * multiplicity
            points.append(BreakPoint(x, int(y)))
        return points

    def ordinate(self, i: int) -> Fraction:
        """
        The polygon function at integer i in [0, r]: the sum of the i smallest
        slopes.
        """
        if not 0 <= i <= self.rank:
            raise ValueError(f"{i} is outside [0, {self.rank}]")
        return sum(self.slopes[:i], Fraction(0))

    def ordinates(self) -> list[Fraction]:
        result = [Fraction(0)]
        for slope in self.slopes:
            result.append(result[-1] + slope)
        return result

    def scaled(self, factor: int | Fraction) -> "Polygon":
        """The polygon with every slope multiplied by factor."""
        segments = tuple((slope * factor, mult) for slope, mult in self.segments)
        return Polygon(self.kind, segments)

    def multiplicity(self, slope: Fraction | int) -> int:
        return next((mult for s, mult in self.segments if s == slope), 0)

    def segments_list(self) -> list[list[int]]:
        """Serialized segments: [[num, den, mult], ...]."""
        return [[s.numerator, s.denominator, mult] for s, mult in self.segments]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "segments": self.segments_list()}

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.slopes) + ")"


def break_points(polygon: Polygon) -> list[BreakPoint]:
    """
    All vertices of the polygon, both endpoints included.

    :param polygon: Hodge or Newton polygon.
    :type polygon: Polygon
    :rtype: list[BreakPoint]
    """
    return polygon.vertices()


def has_break_point(polygon: Polygon, point: tuple[Fraction | int, Fraction | int]) -> bool:
    """
    True iff point is a vertex of the polygon. Points off the integer lattice
    are never vertices.
    """
    x, y = (Fraction(c) for c in point)
    if x.denominator != 1 or y.denominator != 1:
        return False
    return BreakPoint(int(x), int(y)) in polygon.vertices()


def lies_above(upper: Polygon, lower: Polygon) -> bool:
    """
    True iff upper(i) >= lower(i) at every integer i in [0, r]. Both are
    piecewise linear with integer break abscissae, so these checkpoints suffice.
    Endpoints need not agree.

    :raises RankMismatch: If the ranks differ.
    """
    if upper.rank != lower.rank:
        raise RankMismatch(f"Ranks {upper.rank} and {lower.rank} differ")
    return all(a >= b for a, b in zip(upper.ordinates(), lower.ordinates()))
