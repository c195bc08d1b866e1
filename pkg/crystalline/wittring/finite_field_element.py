# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

from typing import Iterable

from crystalline.shared import ParamMismatch

from .field_params import FieldParams
from .galois_ring import GaloisRingElement, galois_ring


class FiniteFieldElement:
    """
    An element of F_{p^d} in the basis 1, u, ..., u^{d-1}.

    Arithmetic runs in GR(p, d), whose modulus reduces to the field modulus.
    """

    __slots__ = ("params", "coords")

    def __init__(self, params: FieldParams, coords: Iterable[int] | int) -> None:
        if isinstance(coords, int):
            coords = [coords] + [0] * (params.d - 1)
        coords = tuple(int(c) % params.p for c in coords)
        if len(coords) != params.d:
            raise ValueError(f"Expected {params.d} coordinates, got {len(coords)}")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FiniteFieldElement is immutable")

    @classmethod
    def from_int(cls, params: FieldParams, value: int) -> "FiniteFieldElement":
        """
        Decodes the integer sum c_i p^i, the encoding galois uses for
        polynomial-basis fields.
        """
        coords = []
        for _ in range(params.d):
            value, c = divmod(value, params.p)
            coords.append(c)
        return cls(params, coords)

    @classmethod
    def elements(cls, params: FieldParams) -> list["FiniteFieldElement"]:
        """All q field elements in integer-encoding order."""
        return [cls.from_int(params, value) for value in range(params.order)]

    def to_int(self) -> int:
        value = 0
        for c in reversed(self.coords):
            value = value * self.params.p + c
        return value

    def _as_ring(self) -> GaloisRingElement:
        return GaloisRingElement(galois_ring(self.params, 1), self.coords)

    def _wrap(self, element: GaloisRingElement) -> "FiniteFieldElement":
        return FiniteFieldElement(self.params, element.coords)

    def _check(self, other: "FiniteFieldElement | int") -> "FiniteFieldElement":
        if isinstance(other, int):
            return FiniteFieldElement(self.params, other)
        if other.params != self.params:
            raise ParamMismatch(f"Cannot combine elements of {self.params} and {other.params}")
        return other

    def __add__(self, other: "FiniteFieldElement | int") -> "FiniteFieldElement":
        return self._wrap(self._as_ring() + self._check(other)._as_ring())

    __radd__ = __add__

    def __sub__(self, other: "FiniteFieldElement | int") -> "FiniteFieldElement":
        return self._wrap(self._as_ring() - self._check(other)._as_ring())

    def __neg__(self) -> "FiniteFieldElement":
        return self._wrap(-self._as_ring())

    def __mul__(self, other: "FiniteFieldElement | int") -> "FiniteFieldElement":
        return self._wrap(self._as_ring() * self._check(other)._as_ring())

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FiniteFieldElement":
        return self._wrap(self._as_ring() ** exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == FiniteFieldElement(self.params, other)
        if not isinstance(other, FiniteFieldElement):
            return NotImplemented
        return self.params == other.params and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.params, self.coords))

    def __repr__(self) -> str:
        if self.params.d == 1:
            return f"{self.coords[0]} in {self.params}"
        return f"{list(self.coords)} in {self.params}"

    def is_zero(self) -> bool:
        return not any(self.coords)

    def inverse(self) -> "FiniteFieldElement":
        return self._wrap(self._as_ring().inverse())

    def frobenius(self, k: int = 1) -> "FiniteFieldElement":
        """x -> x^{p^k}."""
        return self._wrap(self._as_ring().frobenius(k))

    def degree(self) -> int:
        """The degree over F_p of the smallest subfield containing x."""
        for e in range(1, self.params.d + 1):
            if self.params.d % e == 0 and self.frobenius(e) == self:
                return e
        return self.params.d

    def teichmuller(self, precision: int) -> GaloisRingElement:
        return teichmuller(self, precision)

    def to_dict(self) -> dict:
        return {"p": self.params.p, "d": self.params.d, "m": 1, "coords": list(self.coords)}


def teichmuller(x: FiniteFieldElement, precision: int) -> GaloisRingElement:
    """
    The Teichmueller representative of x in W_m(F_{p^d}).

    Any lift y of x satisfies teich(x) = y^{q^{m-1}}, since the unit group of
    GR(p^m, d) is the product of the roots of unity of order q - 1 with a
    p-group of exponent q^{m-1}.

    :param x: The field element.
    :type x: FiniteFieldElement
    :param precision: The truncation length m.
    :type precision: int
    :return: The multiplicative lift of x.
    :rtype: GaloisRingElement
    """
    ring = galois_ring(x.params, precision)
    return GaloisRingElement(ring, x.coords) ** (x.params.order ** (precision - 1))
