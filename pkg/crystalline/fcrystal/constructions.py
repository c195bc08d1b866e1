# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Standard crystals E(a/b) and the functorial operations on crystals.
"""

import math

from crystalline.shared import (
    IndexOutOfRange,
    InsufficientPrecision,
    InvalidSlope,
    NotASubfield,
    ParamMismatch,
)
from crystalline.shared.caps import active_caps
from crystalline.wittring import FieldParams, RingMatrix, embed, galois_ring

from .crystal import FCrystal, make_crystal


def _check_compatible(c1: FCrystal, c2: FCrystal, check_twist: bool = True) -> None:
    if c1.base != c2.base or c1.precision != c2.precision:
        raise ParamMismatch(
            f"Crystals over {c1.base} at m={c1.precision} and {c2.base} at m={c2.precision}"
        )
    if check_twist and c1.twist != c2.twist:
        raise ParamMismatch(f"Twists {c1.twist} and {c2.twist} differ")


def unit_crystal(base: FieldParams, precision: int, twist: int = 1, rank: int = 1) -> FCrystal:
    """The identity matrix twisted by sigma^n: all slopes 0."""
    identity = RingMatrix.identity(galois_ring(base, precision), rank)
    return make_crystal(base, twist, precision, identity)


def standard_E(a: int, b: int, twist: int, base: FieldParams, precision: int) -> FCrystal:
    """
    The standard crystal E(a/b): multiplication by T on Z_p[T]/(T^b - p^a) in
    the basis 1, T, ..., T^{b-1}, tensored with W(k) and twisted by sigma^n.

    Its Newton polygon is the single slope a/b with multiplicity b, per
    application of F, for every twist n. Slopes are measured per F, so
    multiplying by T^n instead would give the slope n a/b.

    :param a: Numerator, a >= 0.
    :type a: int
    :param b: Denominator, b >= 1, gcd(a, b) = 1.
    :type b: int
    :param twist: n.
    :type twist: int
    :param base: The field k.
    :type base: FieldParams
    :param precision: m > a.
    :type precision: int
    :raises InvalidSlope: If gcd(a, b) != 1 or a < 0 or b < 1.
    :raises InsufficientPrecision: If m <= a.
    :rtype: FCrystal
    """
    if a < 0 or b < 1 or math.gcd(a, b) != 1:
        raise InvalidSlope(f"{a}/{b} is not a slope in lowest terms")
    if precision <= a:
        raise InsufficientPrecision(f"E({a}/{b}) needs precision above {a}, got {precision}")
    active_caps().check("max_rank", b)
    ring = galois_ring(base, precision)
    rows = [[0] * b for _ in range(b)]
    for j in range(b - 1):
        rows[j + 1][j] = 1
    rows[0][b - 1] = base.p**a
    return make_crystal(base, twist, precision, RingMatrix(ring, rows))


def direct_sum(c1: FCrystal, c2: FCrystal) -> FCrystal:
    """
    Block-diagonal sum.

    :raises ParamMismatch: If base, twist or precision differ.
    """
    _check_compatible(c1, c2)
    return make_crystal(c1.base, c1.twist, c1.precision, c1.matrix.block_diagonal(c2.matrix))


def tensor_product(c1: FCrystal, c2: FCrystal) -> FCrystal:
    """
    Kronecker product of the matrices; slopes add pairwise.

    :raises ParamMismatch: If base, twist or precision differ.
    """
    _check_compatible(c1, c2)
    active_caps().check("max_derived_rank", c1.rank * c2.rank)
    return make_crystal(c1.base, c1.twist, c1.precision, c1.matrix.kron(c2.matrix))


def tensor_power(crystal: FCrystal, c: int) -> FCrystal:
    """The c-fold tensor power, c >= 1."""
    if c < 1:
        raise ValueError(f"Tensor power exponent must be positive, got {c}")
    active_caps().check("max_derived_rank", crystal.rank**c)
    result = crystal
    for _ in range(c - 1):
        result = tensor_product(result, crystal)
    return result


def iterate_matrix(crystal: FCrystal, s: int) -> RingMatrix:
    """M * sigma^n(M) * ... * sigma^{(s-1)n}(M), without validation."""
    if s < 1:
        raise ValueError(f"Iterate count must be positive, got {s}")
    product = crystal.matrix
    for j in range(1, s):
        product = product @ crystal.matrix.frobenius(j * crystal.twist)
    return product


def iterate(crystal: FCrystal, s: int) -> FCrystal:
    """
    The s-th iterate F^s, a sigma^{sn}-linear map.

    :raises NotACrystal: If det of the product vanishes modulo p^m.
    """
    if s == 1:
        return crystal
    return make_crystal(
        crystal.base, crystal.twist * s, crystal.precision, iterate_matrix(crystal, s)
    )


def exterior_power(crystal: FCrystal, i: int) -> FCrystal:
    """
    The i-th exterior power.

    For i >= 1 the matrix is the i-th compound matrix (minors on index subsets
    in lexicographic order). The compound of a sigma^n-linear map is again
    sigma^n-linear, so the twist stays n and the slopes are the i-fold sums of
    distinct slopes. For i = 0 the result is W(k) with sigma: rank 1, twist 1,
    matrix [1].

    :raises IndexOutOfRange: If i is not in [0, r].
    """
    if not 0 <= i <= crystal.rank:
        raise IndexOutOfRange(f"Exterior power {i} of a rank-{crystal.rank} crystal")
    if i == 0:
        return unit_crystal(crystal.base, crystal.precision)
    if i == 1:
        return crystal
    active_caps().check("max_derived_rank", math.comb(crystal.rank, i))
    return make_crystal(crystal.base, crystal.twist, crystal.precision, crystal.matrix.compound(i))


def base_change(crystal: FCrystal, degree: int) -> FCrystal:
    """
    Re-embeds the crystal over F_{p^{d'}} via the canonical field embedding.

    :param degree: d', a multiple of d.
    :type degree: int
    :raises NotASubfield: If d does not divide d'.
    """
    if degree % crystal.base.d != 0:
        raise NotASubfield(f"{crystal.base} does not embed into F_{crystal.base.p}^{degree}")
    target = FieldParams(crystal.base.p, degree)
    if target == crystal.base:
        return crystal
    ring = galois_ring(target, crystal.precision)
    matrix = crystal.matrix.map(lambda x: embed(x, target), ring)
    return make_crystal(target, crystal.twist, crystal.precision, matrix)


def change_of_basis(crystal: FCrystal, basis: RingMatrix) -> FCrystal:
    """
    The same crystal in the basis given by the columns of U: U^-1 * M * sigma^n(U).

    :raises NonUnit: If U is not invertible.
    """
    matrix = basis.inverse() @ crystal.matrix @ basis.frobenius(crystal.twist)
    return make_crystal(crystal.base, crystal.twist, crystal.precision, matrix)


def truncate(crystal: FCrystal, precision: int) -> FCrystal:
    """
    Evaluation at W_{m'}: reduction modulo p^{m'}.

    :raises PrecisionIncrease: If m' > m.
    :raises NotACrystal: If det vanishes modulo p^{m'}.
    """
    return make_crystal(
        crystal.base, crystal.twist, precision, crystal.matrix.change_precision(precision)
    )


def lift_precision(crystal: FCrystal, precision: int) -> FCrystal:
    """
    The canonical lift to precision m' >= m: stored coordinates read as
    representatives modulo p^{m'}.
    """
    return make_crystal(crystal.base, crystal.twist, precision, crystal.matrix.lift(precision))
