# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Crystal families over affine k-space whose matrix entries are polynomials in
the Teichmueller lifts of the coordinates.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from crystalline.fcrystal import FCrystal, make_crystal
from crystalline.shared import ParamMismatch
from crystalline.shared.caps import active_caps
from crystalline.wittring import (
    FieldParams,
    GaloisRing,
    GaloisRingElement,
    RingMatrix,
    embed,
    galois_ring,
    teichmuller,
)

from .closed_points import ClosedPoint

Exponents = tuple[int, ...]
Operand = Union["TeichmullerPolynomial", GaloisRingElement, int]


class TeichmullerPolynomial:
    """
    A polynomial in k variables with coefficients in W_m(F_q), to be evaluated
    at Teichmueller lifts. Immutable; zero coefficients are dropped.

    :param ring: Coefficient ring W_m(F_q).
    :type ring: GaloisRing
    :param nvars: Number of variables k.
    :type nvars: int
    :param terms: Monomials as (exponents, coefficient) pairs; repeated
        exponents are added up.
    :type terms: Iterable[tuple[Exponents, GaloisRingElement | int]]
    """

    __slots__ = ("ring", "nvars", "terms")

    def __init__(
        self,
        ring: GaloisRing,
        nvars: int,
        terms: Iterable[tuple[Sequence[int], GaloisRingElement | int]] = (),
    ) -> None:
        collected: dict[Exponents, GaloisRingElement] = {}
        for exponents, coeff in terms:
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != nvars or any(e < 0 for e in exponents):
                raise ValueError(f"Bad exponent vector {exponents} for {nvars} variables")
            if isinstance(coeff, int):
                coeff = ring.element(coeff)
            elif coeff.params != ring.params or coeff.precision != ring.precision:
                raise ParamMismatch(f"Coefficient {coeff!r} does not live in {ring}")
            collected[exponents] = collected.get(exponents, ring.zero) + coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in collected.items() if not c.is_zero()))
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TeichmullerPolynomial is immutable")

    @classmethod
    def constant(
        cls, ring: GaloisRing, nvars: int, value: GaloisRingElement | int
    ) -> "TeichmullerPolynomial":
        return cls(ring, nvars, [((0,) * nvars, value)])

    @classmethod
    def variable(cls, ring: GaloisRing, nvars: int, index: int) -> "TeichmullerPolynomial":
        exponents = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(ring, nvars, [(exponents, 1)])

    def _lift(self, other: Operand) -> "TeichmullerPolynomial":
        if isinstance(other, TeichmullerPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"{self.nvars} and {other.nvars} variables")
            return other
        return TeichmullerPolynomial.constant(self.ring, self.nvars, other)

    def __add__(self, other: Operand) -> "TeichmullerPolynomial":
        return TeichmullerPolynomial(self.ring, self.nvars, self.terms + self._lift(other).terms)

    __radd__ = __add__

    def __neg__(self) -> "TeichmullerPolynomial":
        return TeichmullerPolynomial(self.ring, self.nvars, ((e, -c) for e, c in self.terms))

    def __sub__(self, other: Operand) -> "TeichmullerPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other: GaloisRingElement | int) -> "TeichmullerPolynomial":
        return self._lift(other) - self

    def __mul__(self, other: Operand) -> "TeichmullerPolynomial":
        other = self._lift(other)
        return TeichmullerPolynomial(
            self.ring,
            self.nvars,
            (
                (tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            ),
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TeichmullerPolynomial":
        if exponent < 0:
            raise ValueError("Negative powers of polynomials")
        result = TeichmullerPolynomial.constant(self.ring, self.nvars, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TeichmullerPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, self.terms))

    def __repr__(self) -> str:
        return f"TeichmullerPolynomial({[(e, c.coords) for e, c in self.terms]})"

    @property
    def degree(self) -> int:
        """Total degree; 0 for constants and for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(not any(e) for e, _ in self.terms)

    def evaluate(self, values: Sequence[GaloisRingElement]) -> GaloisRingElement:
        """
        Substitutes values (all in one ring W_m(F_{q^e})) for the variables.
        Coefficients are embedded into that ring first.
        """
        if len(values) != self.nvars:
            raise ValueError(f"Expected {self.nvars} values, got {len(values)}")
        target = galois_ring(values[0].params, self.ring.precision) if values else self.ring
        result = target.zero
        for exponents, coeff in self.terms:
            term = embed(coeff, target.params)
            for value, e in zip(values, exponents):
                if e:
                    term = term * value**e
            result = result + term
        return result

    def to_list(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c.to_dict()} for e, c in self.terms]


@dataclass(frozen=True)
class FamilyCrystal:
    """
    A crystal over F_q[t_1, ..., t_k] whose matrix entries are Teichmueller
    polynomials. Specializing at a closed point gives an :class:`FCrystal`.
    """

    base: FieldParams
    variables: tuple[str, ...]
    twist: int
    precision: int
    entries: tuple[tuple[TeichmullerPolynomial, ...], ...]

    def __post_init__(self) -> None:
        caps = active_caps()
        caps.check("max_variables", len(self.variables))
        caps.check("max_rank", len(self.entries))
        for row in self.entries:
            if len(row) != len(self.entries):
                raise ValueError("Family matrix must be square")
            for entry in row:
                if entry.nvars != len(self.variables):
                    raise ValueError(f"Entry {entry!r} has {entry.nvars} variables")
                if entry.ring.params != self.base or entry.ring.precision != self.precision:
                    raise ParamMismatch(
                        f"Entry {entry!r} does not live in W_{self.precision}({self.base})"
                    )
                caps.check("max_entry_degree", entry.degree)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def ring(self) -> GaloisRing:
        return galois_ring(self.base, self.precision)

    def evaluate_at(self, point: ClosedPoint) -> FCrystal:
        return evaluate_at(self, point)

    def lift_precision(self, precision: int) -> "FamilyCrystal":
        """The same family at another precision: lifted upwards, truncated downwards."""
        ring = galois_ring(self.base, precision)

        def lifted(poly: TeichmullerPolynomial) -> TeichmullerPolynomial:
            if precision >= self.precision:
                terms = [(e, c.lift(precision)) for e, c in poly.terms]
            else:
                terms = [(e, c.change_precision(precision)) for e, c in poly.terms]
            return TeichmullerPolynomial(ring, poly.nvars, terms)

        return FamilyCrystal(
            self.base,
            self.variables,
            self.twist,
            precision,
            tuple(tuple(lifted(poly) for poly in row) for row in self.entries),
        )

    def to_dict(self) -> dict:
        return {
            "p": self.base.p,
            "d": self.base.d,
            "m": self.precision,
            "n": self.twist,
            "rank": self.rank,
            "vars": list(self.variables),
            "matrix": [[entry.to_list() for entry in row] for row in self.entries],
        }


def evaluate_at(family: FamilyCrystal, point: ClosedPoint) -> FCrystal:
    """
    Specializes the family at a closed point: every variable becomes the
    Teichmueller lift of the corresponding coordinate in W_m(F_{q^e}).

    :param family: The family over F_q.
    :type family: FamilyCrystal
    :param point: A point with coordinates in F_{q^e}.
    :type point: ClosedPoint
    :raises NotACrystal: If det specializes to 0 modulo p^m.
    :rtype: FCrystal
    """
    if point.base != family.base or len(point.coords) != len(family.variables):
        raise ParamMismatch(
            f"Point {point} does not lie on A^{len(family.variables)} over {family.base}"
        )
    target = point.params
    lifts = [teichmuller(x, family.precision) for x in point.coords]
    ring = galois_ring(target, family.precision)
    matrix = RingMatrix(ring, ([entry.evaluate(lifts) for entry in row] for row in family.entries))
    return make_crystal(target, family.twist, family.precision, matrix)


def constant_family(crystal: FCrystal, variables: Sequence[str] = ("t",)) -> FamilyCrystal:
    """The family with the same matrix at every point."""
    ring = crystal.ring
    nvars = len(variables)
    entries = tuple(
        tuple(TeichmullerPolynomial.constant(ring, nvars, x) for x in row) for row in crystal.matrix
    )
    return FamilyCrystal(crystal.base, tuple(variables), crystal.twist, crystal.precision, entries)


def example_family(p: int, precision: int, d: int = 1) -> FamilyCrystal:
    """
    The rank-2 family F(e_1) = t e_1 + p e_2, F(e_2) = p e_1 over A^1, with
    matrix [[t, p], [p, 0]]. Its Newton polygon is (1, 1) at t = 0 and (0, 2)
    elsewhere.
    """
    base = FieldParams(p, d)
    ring = galois_ring(base, precision)
    t = TeichmullerPolynomial.variable(ring, 1, 0)
    constant = lambda value: TeichmullerPolynomial.constant(ring, 1, value)  # noqa: E731
    entries = ((t, constant(p)), (constant(p), constant(0)))
    return FamilyCrystal(base, ("t",), 1, precision, entries)
