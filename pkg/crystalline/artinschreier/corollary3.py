# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
The rank-2n crystal whose p-rank is the Artin-Schreier dimension of A.

With g an invertible lift of [[A, I], [I, 0]], the crystal F = g diag(I, p I)
sigma reduces modulo p to [[A, 0], [I, 0]] sigma, whose fixed points are the
solutions of x = A x^[p].
"""

from typing import TYPE_CHECKING

from crystalline.fcrystal import FCrystal, make_crystal
from crystalline.shared import InsufficientPrecision, ParamMismatch
from crystalline.strata import FamilyCrystal, TeichmullerPolynomial
from crystalline.wittring import RingMatrix, galois_ring, teichmuller

from .instance import ASInstance

if TYPE_CHECKING:
    from .stratify import ASFamily


def _check_precision(n: int, precision: int) -> None:
    if precision <= n:
        raise InsufficientPrecision(
            f"det has valuation {n}, precision must exceed it, got {precision}"
        )


def lift_matrix(instance: ASInstance, precision: int) -> RingMatrix:
    """g: the entrywise Teichmueller lift of [[A, I], [I, 0]]."""
    n = instance.n
    ring = galois_ring(instance.params, precision)
    zero, one = ring.zero, ring.one
    rows = []
    for i in range(2 * n):
        row = []
        for j in range(2 * n):
            if i < n and j < n:
                row.append(teichmuller(instance.matrix[i][j], precision))
            elif i % n == j % n:
                row.append(one if (i < n) != (j < n) else zero)
            else:
                row.append(zero)
        rows.append(row)
    return RingMatrix(ring, rows)


def corollary3_crystal(
    instance: ASInstance, precision: int, lift: RingMatrix | None = None
) -> FCrystal:
    """
    The crystal g diag(I_n, p I_n) sigma over F_q.

    :param instance: x = A x^[p].
    :type instance: ASInstance
    :param precision: m > n.
    :type precision: int
    :param lift: Another invertible lift of [[A, I], [I, 0]] in place of the
        Teichmueller lift.
    :type lift: RingMatrix | None
    :raises InsufficientPrecision: If m <= n.
    :raises ParamMismatch: If lift does not reduce to [[A, I], [I, 0]].
    :rtype: FCrystal
    """
    n = instance.n
    _check_precision(n, precision)
    standard = lift_matrix(instance, precision)
    if lift is None:
        lift = standard
    elif lift.residue() != standard.residue():
        raise ParamMismatch("The lift does not reduce to [[A, I], [I, 0]]")
    ring = lift.ring
    scaling = RingMatrix.diagonal(ring, [1] * n + [instance.params.p] * n)
    return make_crystal(instance.params, 1, precision, lift @ scaling)


def corollary3_family(family: "ASFamily", precision: int) -> FamilyCrystal:
    """
    The family version: entries [[A(t), p I], [I, 0]] with the coefficients
    of A lifted to precision m. The lift differs from the Teichmueller lift
    of A(t) by multiples of p, which the p-rank does not see.

    :raises InsufficientPrecision: If m <= n.
    :rtype: FamilyCrystal
    """
    n = family.n
    _check_precision(n, precision)
    ring = galois_ring(family.base, precision)
    nvars = len(family.variables)

    def constant(value: int) -> TeichmullerPolynomial:
        return TeichmullerPolynomial.constant(ring, nvars, value)

    rows = []
    for i in range(2 * n):
        row = []
        for j in range(2 * n):
            if i < n and j < n:
                terms = [(e, c.lift(precision)) for e, c in family.entries[i][j].terms]
                row.append(TeichmullerPolynomial(ring, nvars, terms))
            elif i < n and j == i + n:
                row.append(constant(family.base.p))
            elif i >= n and j == i - n:
                row.append(constant(1))
            else:
                row.append(constant(0))
        rows.append(tuple(row))
    return FamilyCrystal(family.base, family.variables, 1, precision, tuple(rows))
