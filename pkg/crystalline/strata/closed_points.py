# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Closed points of affine k-space over F_q, one representative per orbit of
the q-power Frobenius.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from crystalline.shared.caps import active_caps
from crystalline.wittring import FieldParams, FiniteFieldElement

if TYPE_CHECKING:
    from .family import FamilyCrystal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedPoint:
    """
    A point of A^k with coordinates in F_{q^e}, e the exact degree of the
    field the coordinates generate over F_q.
    """

    #: The base field F_q of the family.
    base: FieldParams
    #: Extension degree e over F_q.
    degree: int
    #: Coordinates in F_{q^e}.
    coords: tuple[FiniteFieldElement, ...]
    #: True for the lexicographically least tuple of its Frobenius orbit.
    representative: bool = True

    @property
    def params(self) -> FieldParams:
        """The residue field F_{q^e}."""
        return self.base.extension(self.degree)

    @property
    def key(self) -> tuple[int, ...]:
        """Integer encodings of the coordinates; the order used for representatives."""
        return tuple(x.to_int() for x in self.coords)

    def conjugate(self, j: int = 1) -> "ClosedPoint":
        """The point with every coordinate raised to q^j."""
        coords = tuple(x.frobenius(self.base.d * j) for x in self.coords)
        representative = j % self.degree == 0 and self.representative
        return ClosedPoint(self.base, self.degree, coords, representative)

    def conjugates(self) -> list["ClosedPoint"]:
        return [self.conjugate(j) for j in range(self.degree)]

    def to_dict(self) -> dict:
        return {"degree": self.degree, "coords": [list(x.coords) for x in self.coords]}

    def __str__(self) -> str:
        values = ", ".join(
            str(x.coords[0]) if len(x.coords) == 1 else str(list(x.coords)) for x in self.coords
        )
        return f"({values}) over {self.params}"


def _proper_divisors(e: int) -> list[int]:
    return [f for f in range(1, e) if e % f == 0]


def _points_of_degree(base: FieldParams, nvars: int, degree: int) -> list[ClosedPoint]:
    params = base.extension(degree)
    field = params.galois_field()
    size = params.order
    count = size**nvars
    keys = np.arange(count, dtype=np.int64)
    # most significant coordinate first, so key order is lexicographic order
    digits = np.stack([(keys // size ** (nvars - 1 - i)) % size for i in range(nvars)], axis=1)
    tuples = field(digits)
    weights = np.array([size ** (nvars - 1 - i) for i in range(nvars)], dtype=np.int64)
    conjugate_keys = [keys]
    conjugate = tuples
    for _ in range(1, degree):
        conjugate = conjugate**base.order
        conjugate_keys.append(conjugate.view(np.ndarray).astype(np.int64) @ weights)
    table = np.stack(conjugate_keys, axis=0)
    exact = np.ones(count, dtype=bool)
    for f in _proper_divisors(degree):
        exact &= table[f] != keys
    least = table.min(axis=0) == keys
    selected = np.nonzero(exact & least)[0]
    return [
        ClosedPoint(
            base,
            degree,
            tuple(FiniteFieldElement.from_int(params, int(c)) for c in digits[index]),
        )
        for index in selected
    ]


def closed_points(base: FieldParams, nvars: int, max_degree: int) -> list[ClosedPoint]:
    """
    Lists one representative of every Frobenius orbit of A^k(F_{q^e}) for
    e = 1, ..., D, ordered by degree and then by the integer encoding of the
    coordinates.

    A tuple has exact degree e iff it is not fixed by the q^f-power for any
    proper divisor f of e. Its orbit then has e elements, and the
    representative is the one with the least key.

    :param base: F_q.
    :type base: FieldParams
    :param nvars: k.
    :type nvars: int
    :param max_degree: D >= 1.
    :type max_degree: int
    :raises CapExceeded: If sum_e q^{e k} exceeds max_points.
    :rtype: list[ClosedPoint]
    """
    if max_degree < 1:
        raise ValueError(f"Maximal degree must be positive, got {max_degree}")
    if nvars < 0:
        raise ValueError(f"Number of variables must be nonnegative, got {nvars}")
    caps = active_caps()
    caps.check("max_variables", nvars)
    caps.check("max_points", sum(base.order ** (e * nvars) for e in range(1, max_degree + 1)))
    if nvars == 0:
        return [ClosedPoint(base, 1, ())]
    points = list(
        itertools.chain.from_iterable(
            _points_of_degree(base, nvars, e) for e in range(1, max_degree + 1)
        )
    )
    logger.debug(
        "%d closed points of degree <= %d on A^%d over %s", len(points), max_degree, nvars, base
    )
    return points


def enumerate_closed_points(family: "FamilyCrystal", max_degree: int) -> list[ClosedPoint]:
    """The closed points of the family's base of degree at most D."""
    return closed_points(family.base, len(family.variables), max_degree)
