# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import functools
from dataclasses import dataclass

import galois


@functools.lru_cache(maxsize=None)
def modulus_coefficients(p: int, d: int) -> tuple[int, ...]:
    """
    Returns the defining polynomial of F_{p^d}, lowest coefficient first.

    The polynomial is the lexicographically least monic irreducible of degree d
    over F_p, so the same (p, d) always yields the same field presentation.
    For d = 1 this is X itself.

    :param p: The characteristic.
    :type p: int
    :param d: The extension degree.
    :type d: int
    :return: The d + 1 coefficients of the monic modulus, ascending.
    :rtype: tuple[int, ...]
    """
    poly = galois.irreducible_poly(p, d, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs))


@functools.lru_cache(maxsize=None)
def _galois_field(p: int, d: int) -> type[galois.FieldArray]:
    if d == 1:
        return galois.GF(p)
    prime_field = galois.GF(p)
    irreducible = galois.Poly(list(reversed(modulus_coefficients(p, d))), field=prime_field)
    return galois.GF(p**d, irreducible_poly=irreducible)


@dataclass(frozen=True, order=True)
class FieldParams:
    """
    The finite field F_{p^d}, presented as F_p[u]/(f) with f from
    :func:`modulus_coefficients`.
    """

    #: The characteristic.
    p: int
    #: The degree over the prime field.
    d: int = 1

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"Extension degree must be positive, got {self.d}")
        if not galois.is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime")

    @property
    def order(self) -> int:
        """The number of field elements q = p^d."""
        return self.p**self.d

    @property
    def modulus(self) -> tuple[int, ...]:
        """Coefficients of the defining polynomial, ascending."""
        return modulus_coefficients(self.p, self.d)

    def extension(self, e: int) -> "FieldParams":
        """
        Returns the degree-e extension F_{p^{de}}.

        :param e: Relative degree.
        :type e: int
        :rtype: FieldParams
        """
        return FieldParams(self.p, self.d * e)

    def galois_field(self) -> type[galois.FieldArray]:
        """
        Returns the galois FieldArray class of this field, using the same
        modulus, so integer encodings agree with
        :meth:`FiniteFieldElement.to_int`.
        """
        return _galois_field(self.p, self.d)

    def to_dict(self) -> dict:
        return {"p": self.p, "d": self.d}

    def __str__(self) -> str:
        return f"F_{self.p}" if self.d == 1 else f"F_{self.p}^{self.d}"
