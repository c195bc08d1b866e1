# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import math
from fractions import Fraction

from crystalline.fcrystal import FCrystal, iterate_matrix
from crystalline.shared import InsufficientPrecision
from crystalline.wittring import stable_rank, to_galois

from .newton import newton_polygon


def p_rank(crystal: FCrystal) -> int:
    """
    The multiplicity of the Newton slope 0.

    :raises InsufficientPrecision: If the Newton polygon is not certified.
    """
    return newton_polygon(crystal).multiplicity(0)


def fixed_point_dimension(crystal: FCrystal) -> int:
    """
    Stable rank of the reduction modulo p: the rank over F_{p^d} of
    A * A^[p^n] * A^[p^2n] * ... with r*d factors, A the residue matrix. For
    n = 1 this is dim_{F_p} of the fixed points of F mod p over an algebraic
    closure.

    :rtype: int
    """
    residue = to_galois(crystal.base, crystal.matrix.residue())
    factors = crystal.rank * crystal.base.d
    return stable_rank(crystal.base, residue, crystal.twist, factors)


def is_divisible_by(crystal: FCrystal, slope: Fraction | int, s_max: int) -> bool:
    """
    Bounded divisibility certificate: every entry of the s-th iterate has
    valuation at least floor(s * slope) for s = 1, ..., s_max.

    :param slope: lambda >= 0.
    :type slope: Fraction | int
    :param s_max: Number of iterates checked.
    :type s_max: int
    :raises InsufficientPrecision: If s_max * slope >= m.
    :rtype: bool
    """
    slope = Fraction(slope)
    if slope < 0 or s_max < 1:
        raise ValueError(f"Need slope >= 0 and s_max >= 1, got {slope} and {s_max}")
    if s_max * slope >= crystal.precision:
        raise InsufficientPrecision(
            f"Checking {s_max} iterates for slope {slope} needs precision above {s_max * slope}"
        )
    for s in range(1, s_max + 1):
        if iterate_matrix(crystal, s).valuation() < math.floor(s * slope):
            return False
    return True
