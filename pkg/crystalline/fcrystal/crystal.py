# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import functools
import math
from dataclasses import dataclass
from typing import Sequence

from crystalline.shared import NotACrystal, ParamMismatch
from crystalline.shared.caps import active_caps
from crystalline.wittring import (
    FieldParams,
    GaloisRing,
    GaloisRingElement,
    RingMatrix,
    Vector,
    galois_ring,
)


@dataclass(frozen=True)
class CrystalMeta:
    """Derived data of a crystal, computed once."""

    #: Valuation of the determinant of the matrix (< m).
    det_valuation: int
    #: Degree over F_p of the field generated by the matrix entries.
    entry_field_degree: int
    #: The least e with sigma^{n e} trivial on the entries; Newton slopes are
    #: computed from the e-th iterate.
    linearization_length: int
    #: Precision from which on the Newton polygon is certified, or None if the
    #: stored precision is not enough.
    guaranteed_slope_precision: int | None


@dataclass(frozen=True)
class FCrystal:
    """
    A rank-r F^n-crystal over F_{p^d}, truncated at precision m.

    The matrix uses the column convention F(e_j) = sum_i M[i][j] e_i, so F acts
    on coordinate vectors as x -> M * sigma^n(x).

    Construct instances through :func:`make_crystal`; the constructor validates
    as well, so every FCrystal has det(M) of valuation < m.
    """

    #: The base field k = F_{p^d}.
    base: FieldParams
    #: The power n of Frobenius the map is semilinear for.
    twist: int
    #: The truncation length m.
    precision: int
    #: The r x r matrix over GR(p^m, d).
    matrix: RingMatrix

    def __post_init__(self) -> None:
        if self.twist < 1:
            raise ValueError(f"Twist must be positive, got {self.twist}")
        if not self.matrix.is_square() or self.matrix.nrows == 0:
            raise ValueError(f"Crystal matrix must be square and nonempty, got {self.matrix.shape}")
        ring = self.matrix.ring
        if ring.params != self.base or ring.precision != self.precision:
            raise ParamMismatch(
                f"Matrix lives in {ring}, crystal is over {self.base} at precision {self.precision}"
            )
        active_caps().check("max_derived_rank", self.rank)
        if self.meta.det_valuation >= self.precision:
            raise NotACrystal(
                f"det is 0 modulo p^{self.precision}; nondegeneracy undetermined at this precision"
            )

    @property
    def rank(self) -> int:
        return self.matrix.nrows

    @property
    def ring(self) -> GaloisRing:
        return self.matrix.ring

    @functools.cached_property
    def meta(self) -> CrystalMeta:
        det_valuation = self.matrix.det_valuation()
        degree = entry_field_degree(self.matrix)
        e = degree // math.gcd(degree, self.twist)
        # the Newton hull lies below the chord to (r, e v), so m >= e v certifies it
        needed = max(e * det_valuation, det_valuation + 1)
        return CrystalMeta(
            det_valuation=det_valuation,
            entry_field_degree=degree,
            linearization_length=e,
            guaranteed_slope_precision=needed if needed <= self.precision else None,
        )

    def apply(self, vector: Sequence[GaloisRingElement]) -> Vector:
        """
        F on coordinates: M * sigma^n(x).

        :param vector: Coordinates of x in the basis e_1, ..., e_r.
        :type vector: Sequence[GaloisRingElement]
        :rtype: Vector
        """
        if len(vector) != self.rank:
            raise ValueError(f"Expected {self.rank} coordinates, got {len(vector)}")
        return self.matrix.apply([x.frobenius(self.twist) for x in vector])

    def to_dict(self) -> dict:
        return {
            "p": self.base.p,
            "d": self.base.d,
            "m": self.precision,
            "n": self.twist,
            "rank": self.rank,
            "matrix": [[x.to_dict() for x in row] for row in self.matrix],
        }


def entry_field_degree(matrix: RingMatrix) -> int:
    """
    The least d' | d with sigma^{d'} fixing every entry, i.e. the entries lie
    in W_m(F_{p^{d'}}).
    """
    d = matrix.ring.d
    for candidate in range(1, d + 1):
        if d % candidate == 0 and matrix.frobenius(candidate) == matrix:
            return candidate
    return d


def make_crystal(
    base: FieldParams,
    twist: int,
    precision: int,
    matrix: RingMatrix | Sequence[Sequence[GaloisRingElement | int]],
) -> FCrystal:
    """
    Validates and builds a crystal.

    :param base: The field k.
    :type base: FieldParams
    :param twist: n >= 1.
    :type twist: int
    :param precision: m >= 1.
    :type precision: int
    :param matrix: Square matrix; nested lists of elements or integers are
        converted into GR(p^m, d).
    :type matrix: RingMatrix | Sequence[Sequence[GaloisRingElement | int]]
    :raises NotACrystal: If det(matrix) is 0 modulo p^m.
    :raises ParamMismatch: If entries do not live in GR(p^m, d).
    :rtype: FCrystal
    """
    if not isinstance(matrix, RingMatrix):
        matrix = RingMatrix(galois_ring(base, precision), matrix)
    return FCrystal(base, twist, precision, matrix)
