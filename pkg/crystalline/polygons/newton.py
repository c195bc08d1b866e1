# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import logging
from fractions import Fraction

from crystalline.fcrystal import FCrystal, exterior_power, iterate_matrix
from crystalline.shared import InsufficientPrecision

from .polygon import Polygon, PolygonKind

logger = logging.getLogger(__name__)


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    hull: list[tuple[int, int]] = []
    for point in points:
        while len(hull) >= 2:
            (ax, ay), (bx, by) = hull[-2], hull[-1]
            cross = (bx - ax) * (point[1] - ay) - (by - ay) * (point[0] - ax)
            if cross > 0:
                break
            hull.pop()
        hull.append(point)
    return hull


def _hull_value(hull: list[tuple[int, int]], x: int) -> Fraction:
    for (ax, ay), (bx, by) in zip(hull, hull[1:]):
        if ax <= x <= bx:
            return ay + Fraction(by - ay, bx - ax) * (x - ax)
    raise ValueError(f"{x} is outside the hull")


def newton_polygon(crystal: FCrystal) -> Polygon:
    """
    The Newton polygon.

    With e the least integer such that sigma^{ne} fixes the matrix entries, the
    e-th iterate L is linear. The lower convex hull of the points
    (k, v(c_k)), c_k the coefficient of X^{r-k} in det(X - L), has slopes e
    times the Newton slopes. The end point (r, e v(det M)) is exact because
    det L is the product of e Frobenius conjugates of det M. The hull is
    certified when every other coefficient that is zero modulo p^m, placed at
    height m, lies strictly above it.

    :param crystal: A valid crystal.
    :type crystal: FCrystal
    :raises InsufficientPrecision: If the hull is not certified at precision m.
    :rtype: Polygon
    """
    m = crystal.precision
    e = crystal.meta.linearization_length
    coefficients = iterate_matrix(crystal, e).charpoly()
    valuations = [c.valuation() for c in coefficients[:-1]]
    end = (len(valuations), e * crystal.meta.det_valuation)
    hull = _lower_hull([(k, v) for k, v in enumerate(valuations) if v < m] + [end])
    for k, v in enumerate(valuations):
        if v >= m and _hull_value(hull, k) >= m:
            logger.debug("coefficient %d is undetermined on or below the hull %s", k, hull)
            raise InsufficientPrecision(f"Newton polygon is not certified at precision {m}")
    segments = tuple(
        (Fraction(by - ay, (bx - ax) * e), bx - ax) for (ax, ay), (bx, by) in zip(hull, hull[1:])
    )
    return Polygon(PolygonKind.NEWTON, segments)


def newton_function(crystal: FCrystal, i: int) -> Fraction:
    """Newton_F(i): the least Newton slope of the i-th exterior power."""
    return newton_polygon(exterior_power(crystal, i)).slopes[0]


def is_unit_root(crystal: FCrystal) -> bool:
    """All Newton slopes are 0, i.e. F is a sigma^n-linear automorphism."""
    return crystal.meta.det_valuation == 0


def is_topologically_nilpotent(crystal: FCrystal) -> bool:
    """All Newton slopes are positive, i.e. F^r(M) lies in pM."""
    return iterate_matrix(crystal, crystal.rank).valuation() >= 1
