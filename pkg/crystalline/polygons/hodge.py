# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

from crystalline.fcrystal import FCrystal, exterior_power
from crystalline.shared import InsufficientPrecision

from .polygon import Polygon, PolygonKind


def hodge_polygon(crystal: FCrystal) -> Polygon:
    """
    The Hodge polygon: F(v_i) = p^{a_i} w_i for suitable bases, so the a_i are
    the exponents of the elementary divisors of the matrix over GR(p^m, d).

    :param crystal: A valid crystal.
    :type crystal: FCrystal
    :raises InsufficientPrecision: If some elementary divisor vanishes modulo p^m.
    :rtype: Polygon
    """
    exponents = crystal.matrix.elementary_divisor_valuations()
    if exponents and exponents[-1] >= crystal.precision:
        raise InsufficientPrecision(
            f"Hodge slopes {exponents} are not determined at precision {crystal.precision}"
        )
    return Polygon.from_slopes(PolygonKind.HODGE, exponents)


def hodge_function(crystal: FCrystal, i: int) -> int:
    """Hodge_F(i): the least Hodge slope of the i-th exterior power."""
    return int(hodge_polygon(exterior_power(crystal, i)).slopes[0])
