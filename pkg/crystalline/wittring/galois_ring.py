# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Truncated Witt vectors W_m(F_{p^d}) realized as the Galois ring GR(p^m, d).

The ring is Z/p^m[u]/(f_hat) where f_hat is the lift of the field modulus whose
roots are Teichmueller representatives. With that choice the Witt Frobenius is
simply u -> u^p.
"""

import functools
import logging
from typing import TYPE_CHECKING, Iterable, Sequence

from crystalline.shared import NonUnit, ParamMismatch, PrecisionIncrease, PrecisionOverflow
from crystalline.shared.caps import active_caps

from .field_params import FieldParams

if TYPE_CHECKING:
    from .finite_field_element import FiniteFieldElement

logger = logging.getLogger(__name__)


def _mulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], n: int) -> list[int]:
    """Product of two coordinate vectors in Z/n[X]/(modulus), modulus monic."""
    d = len(modulus) - 1
    if d == 1:
        return [(a[0] * b[0]) % n]
    product = [0] * (2 * d - 1)
    for i, a_i in enumerate(a):
        if a_i:
            for j, b_j in enumerate(b):
                product[i + j] += a_i * b_j
    for k in range(2 * d - 2, d - 1, -1):
        c = product[k] % n
        if c:
            for i in range(d):
                product[k - d + i] -= c * modulus[i]
    return [x % n for x in product[:d]]


def _powmod(a: Sequence[int], e: int, modulus: Sequence[int], n: int) -> list[int]:
    d = len(modulus) - 1
    result = [1 % n] + [0] * (d - 1)
    base = list(a)
    while e > 0:
        if e & 1:
            result = _mulmod(result, base, modulus, n)
        e >>= 1
        if e:
            base = _mulmod(base, base, modulus, n)
    return result


def _generator(modulus: Sequence[int], n: int) -> list[int]:
    """Coordinates of X modulo a monic modulus."""
    d = len(modulus) - 1
    if d == 1:
        return [(-modulus[0]) % n]
    return [0, 1] + [0] * (d - 2)


def _int_valuation(c: int, p: int, cap: int) -> int:
    if c == 0:
        return cap
    v = 0
    while c % p == 0 and v < cap:
        c //= p
        v += 1
    return v


def teichmuller_modulus(params: FieldParams, precision: int) -> tuple[int, ...]:
    """
    Lifts the field modulus to Z/p^m[X] so that its roots are Teichmueller.

    The roots are the conjugates tau^{p^i} of tau = X^{q^{m-1}} computed in
    Z/p^m[X]/(any lift); their elementary symmetric functions are Frobenius
    invariant, hence constants.

    :param params: The residue field.
    :type params: FieldParams
    :param precision: The truncation length m.
    :type precision: int
    :return: Coefficients of the monic lift, ascending.
    :rtype: tuple[int, ...]
    """
    p, d = params.p, params.d
    n = p**precision
    naive = params.modulus
    tau = _powmod(_generator(naive, n), params.order ** (precision - 1), naive, n)
    one = [1 % n] + [0] * (d - 1)
    zero = [0] * d
    # Polynomial in Y with coefficients in Z/p^m[X]/(naive), lowest degree first.
    product = [one]
    root = tau
    for _ in range(d):
        shifted = [zero] + product
        scaled = [_mulmod(root, c, naive, n) for c in product] + [zero]
        product = [[(s - t) % n for s, t in zip(hi, lo)] for hi, lo in zip(shifted, scaled)]
        root = _powmod(root, p, naive, n)
    if any(any(c[1:]) for c in product):
        raise ArithmeticError(f"Teichmueller lift of {naive} has non-constant coefficients")
    return tuple(c[0] for c in product)


class GaloisRing:
    """
    The ring GR(p^m, d) = W_m(F_{p^d}).

    Instances are shared: use :func:`galois_ring` instead of the constructor.

    :param params: The residue field.
    :type params: FieldParams
    :param precision: The truncation length m >= 1.
    :type precision: int
    """

    def __init__(self, params: FieldParams, precision: int) -> None:
        if precision < 1:
            raise ValueError(f"Precision must be at least 1, got {precision}")
        #: The residue field F_{p^d}.
        self.params = params
        #: The truncation length m.
        self.precision = precision
        #: p^m, the characteristic of the ring.
        self.modulus = params.p**precision
        #: The Teichmueller lift f_hat of the field modulus, ascending.
        self.lift = teichmuller_modulus(params, precision)
        u_p = _powmod(_generator(self.lift, self.modulus), params.p, self.lift, self.modulus)
        self._frobenius_images = tuple(
            tuple(_powmod(u_p, i, self.lift, self.modulus)) for i in range(params.d)
        )
        logger.debug("Built GR(%d^%d, %d) with lift %s", params.p, precision, params.d, self.lift)

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def d(self) -> int:
        return self.params.d

    def __repr__(self) -> str:
        return f"GaloisRing(p={self.p}, d={self.d}, m={self.precision})"

    def element(self, coords: Iterable[int] | int) -> "GaloisRingElement":
        """
        Builds an element from coordinates in the basis 1, u, ..., u^{d-1}.

        An integer is read as a constant.
        """
        if isinstance(coords, int):
            coords = [coords] + [0] * (self.d - 1)
        return GaloisRingElement(self, coords)

    @functools.cached_property
    def zero(self) -> "GaloisRingElement":
        return self.element(0)

    @functools.cached_property
    def one(self) -> "GaloisRingElement":
        return self.element(1)

    @functools.cached_property
    def generator(self) -> "GaloisRingElement":
        """The class u of X, a Teichmueller element."""
        return GaloisRingElement(self, _generator(self.lift, self.modulus))

    def from_int_encoding(self, value: int) -> "GaloisRingElement":
        """
        Inverse of :meth:`GaloisRingElement.to_int`: digit i in base p^m is
        coordinate i.
        """
        coords = []
        for _ in range(self.d):
            value, c = divmod(value, self.modulus)
            coords.append(c)
        return GaloisRingElement(self, coords)

    def elements(self) -> Iterable["GaloisRingElement"]:
        """Iterates over all (p^m)^d elements. Only sensible for tiny rings."""
        for value in range(self.modulus**self.d):
            yield self.from_int_encoding(value)

    def _mul(self, a: Sequence[int], b: Sequence[int]) -> list[int]:
        return _mulmod(a, b, self.lift, self.modulus)

    def _frobenius(self, coords: Sequence[int]) -> list[int]:
        n = self.modulus
        result = [0] * self.d
        for c, image in zip(coords, self._frobenius_images):
            if c:
                for i, x in enumerate(image):
                    result[i] += c * x
        return [x % n for x in result]


def galois_ring(params: FieldParams, precision: int) -> GaloisRing:
    """
    Returns the shared :class:`GaloisRing` for (p, d, m).

    :param params: The residue field.
    :type params: FieldParams
    :param precision: The truncation length.
    :type precision: int
    :rtype: GaloisRing
    """
    caps = active_caps()
    if params.p**precision >= caps.max_modulus:
        raise PrecisionOverflow(
            f"p^m = {params.p}^{precision} is not below the cap {caps.max_modulus}"
        )
    return _shared_ring(params, precision)


@functools.lru_cache(maxsize=None)
def _shared_ring(params: FieldParams, precision: int) -> GaloisRing:
    return GaloisRing(params, precision)


class GaloisRingElement:
    """
    An element of W_m(F_{p^d}), stored as coordinates modulo p^m in the basis
    1, u, ..., u^{d-1}. Elements are immutable.
    """

    __slots__ = ("ring", "coords")

    def __init__(self, ring: GaloisRing, coords: Iterable[int]) -> None:
        coords = tuple(int(c) % ring.modulus for c in coords)
        if len(coords) != ring.d:
            raise ValueError(f"Expected {ring.d} coordinates, got {len(coords)}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GaloisRingElement is immutable")

    @property
    def params(self) -> FieldParams:
        return self.ring.params

    @property
    def precision(self) -> int:
        return self.ring.precision

    def _coerce(self, other: "GaloisRingElement | int") -> "GaloisRingElement":
        if isinstance(other, int):
            return self.ring.element(other)
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        if other.ring is not self.ring and (
            other.params != self.params or other.precision != self.precision
        ):
            raise ParamMismatch(f"Cannot combine elements of {self.ring} and {other.ring}")
        return other

    def __add__(self, other: "GaloisRingElement | int") -> "GaloisRingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaloisRingElement(self.ring, (a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other: "GaloisRingElement | int") -> "GaloisRingElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaloisRingElement(self.ring, (a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other: int) -> "GaloisRingElement":
        return self._coerce(other) - self

    def __neg__(self) -> "GaloisRingElement":
        return GaloisRingElement(self.ring, (-a for a in self.coords))

    def __mul__(self, other: "GaloisRingElement | int") -> "GaloisRingElement":
        if isinstance(other, int):
            return GaloisRingElement(self.ring, (a * other for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaloisRingElement(self.ring, self.ring._mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GaloisRingElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return GaloisRingElement(
            self.ring, _powmod(self.coords, exponent, self.ring.lift, self.ring.modulus)
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coords == self.ring.element(other).coords
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        return (
            self.params == other.params
            and self.precision == other.precision
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.params, self.precision, self.coords))

    def __repr__(self) -> str:
        if self.ring.d == 1:
            return f"{self.coords[0]} (mod {self.params.p}^{self.precision})"
        return f"{list(self.coords)} in GR({self.params.p}^{self.precision}, {self.params.d})"

    def is_zero(self) -> bool:
        return not any(self.coords)

    def valuation(self) -> int:
        """
        The p-adic valuation, capped at the precision m.

        :return: Largest v <= m with self = 0 mod p^v; m for zero, meaning
            "undetermined, at least m".
        :rtype: int
        """
        p, m = self.params.p, self.precision
        return min(_int_valuation(c, p, m) for c in self.coords)

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def inverse(self) -> "GaloisRingElement":
        """
        Multiplicative inverse.

        :raises NonUnit: If the element is divisible by p.
        """
        if not self.is_unit():
            raise NonUnit(f"{self!r} is not a unit")
        unit_group_order = (self.params.order - 1) * self.params.order ** (self.precision - 1)
        return self ** (unit_group_order - 1)

    def divide_by_p_power(self, v: int) -> "GaloisRingElement":
        """
        Exact division by p^v, lifted with zeros in the lost top digits.

        :raises ArithmeticError: If some coordinate is not divisible by p^v.
        """
        factor = self.params.p**v
        if any(c % factor for c in self.coords):
            raise ArithmeticError(f"{self!r} is not divisible by p^{v}")
        return GaloisRingElement(self.ring, (c // factor for c in self.coords))

    def frobenius(self, k: int = 1) -> "GaloisRingElement":
        """
        Applies the Witt Frobenius sigma^k, u -> u^{p^k}.

        :param k: Power of sigma, reduced modulo d.
        :type k: int
        """
        coords: Sequence[int] = self.coords
        for _ in range(k % self.params.d):
            coords = self.ring._frobenius(coords)
        return GaloisRingElement(self.ring, coords)

    def residue(self) -> "FiniteFieldElement":
        """The reduction modulo p."""
        from .finite_field_element import FiniteFieldElement

        return FiniteFieldElement(self.params, (c % self.params.p for c in self.coords))

    def change_precision(self, precision: int) -> "GaloisRingElement":
        """
        Truncation to W_{m'}.

        :raises PrecisionIncrease: If m' > m.
        """
        if precision > self.precision:
            raise PrecisionIncrease(
                f"Cannot raise precision from {self.precision} to {precision}; use lift()"
            )
        return GaloisRingElement(galois_ring(self.params, precision), self.coords)

    def lift(self, precision: int) -> "GaloisRingElement":
        """
        Reads the stored coordinates as a representative at precision m' >= m.
        """
        if precision < self.precision:
            return self.change_precision(precision)
        return GaloisRingElement(galois_ring(self.params, precision), self.coords)

    def to_int(self) -> int:
        """Packs the coordinates as digits base p^m."""
        value = 0
        for c in reversed(self.coords):
            value = value * self.ring.modulus + c
        return value

    def to_dict(self) -> dict:
        return {
            "p": self.params.p,
            "d": self.params.d,
            "m": self.precision,
            "coords": list(self.coords),
        }


def gr_add(a: GaloisRingElement, b: GaloisRingElement) -> GaloisRingElement:
    return a + b


def gr_mul(a: GaloisRingElement, b: GaloisRingElement) -> GaloisRingElement:
    return a * b


def gr_inv(a: GaloisRingElement) -> GaloisRingElement:
    return a.inverse()


def frobenius(a: GaloisRingElement, k: int = 1) -> GaloisRingElement:
    return a.frobenius(k)


def valuation(a: GaloisRingElement) -> int:
    return a.valuation()


def residue(a: GaloisRingElement) -> "FiniteFieldElement":
    return a.residue()


def change_precision(a: GaloisRingElement, precision: int) -> GaloisRingElement:
    return a.change_precision(precision)

