# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Homogeneous Artin-Schreier systems x = A x^[p] over F_q and the F_p-dimension
of their solution space over an algebraic closure.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import galois
import numpy as np

from crystalline.shared import NotStabilized, ParamMismatch
from crystalline.shared.caps import active_caps
from crystalline.wittring import (
    FieldParams,
    FiniteFieldElement,
    embed_field,
    stable_rank,
    to_galois,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ASInstance:
    """The system x = A x^[p] with A an n x n matrix over F_q."""

    params: FieldParams
    matrix: tuple[tuple[FiniteFieldElement, ...], ...]

    def __post_init__(self) -> None:
        if not self.matrix or any(len(row) != len(self.matrix) for row in self.matrix):
            raise ValueError("Artin-Schreier matrix must be square and nonempty")
        for row in self.matrix:
            for x in row:
                if x.params != self.params:
                    raise ParamMismatch(f"Entry {x!r} does not live in {self.params}")
        active_caps().check("max_rank", self.n)

    @classmethod
    def from_rows(
        cls, params: FieldParams, rows: Sequence[Sequence[FiniteFieldElement | int]]
    ) -> "ASInstance":
        """Builds an instance; integers are read as prime field constants."""
        def convert(x: FiniteFieldElement | int) -> FiniteFieldElement:
            return x if isinstance(x, FiniteFieldElement) else FiniteFieldElement(params, x)

        return cls(params, tuple(tuple(convert(x) for x in row) for row in rows))

    @classmethod
    def random(cls, params: FieldParams, n: int, rng: np.random.Generator) -> "ASInstance":
        """An n x n system with entries drawn uniformly from F_q."""
        keys = rng.integers(0, params.order, size=(n, n))
        return cls.from_rows(
            params, [[FiniteFieldElement.from_int(params, int(k)) for k in row] for row in keys]
        )

    @property
    def n(self) -> int:
        return len(self.matrix)

    def field_matrix(self) -> galois.FieldArray:
        return to_galois(self.params, self.matrix)

    def base_change(self, e: int) -> "ASInstance":
        """The same system over F_{q^e}."""
        target = self.params.extension(e)
        rows = tuple(tuple(embed_field(x, target) for x in row) for row in self.matrix)
        return ASInstance(target, rows)

    def to_dict(self) -> dict:
        return {
            "p": self.params.p,
            "d": self.params.d,
            "n": self.n,
            "A": [[list(x.coords) for x in row] for row in self.matrix],
        }


def as_dimension(instance: ASInstance) -> int:
    """
    dim_{F_p} of the solutions of x = A x^[p] over an algebraic closure.

    The map x -> A x^[p] is p-linear; its fixed points span the part on which
    it is bijective. That part has dimension the rank of
    A * A^[p] * ... * A^[p^{s-1}] for s large, and s = n d factors suffice.

    :param instance: The system.
    :type instance: ASInstance
    :return: An integer in [0, n].
    :rtype: int
    """
    params = instance.params
    return stable_rank(params, instance.field_matrix(), 1, instance.n * params.d)


def _all_vectors(field: type[galois.FieldArray], n: int) -> galois.FieldArray:
    size = field.order
    keys = np.arange(size**n, dtype=np.int64)
    digits = np.stack([(keys // size ** (n - 1 - i)) % size for i in range(n)], axis=1)
    return field(digits)


def _solutions(instance: ASInstance, e: int) -> galois.FieldArray:
    extended = instance.base_change(e)
    matrix = extended.field_matrix()
    vectors = _all_vectors(extended.params.galois_field(), instance.n)
    images = (matrix @ (vectors ** instance.params.p).T).T
    return vectors[np.all(images == vectors, axis=1)]


def _kernel_count(instance: ASInstance, e: int) -> int:
    # x -> x - A x^[p] is F_p-linear on F_{q^e}^n; the solutions are its kernel
    extended = instance.base_change(e)
    p, n, degree = instance.params.p, instance.n, extended.params.d
    active_caps().check("max_linear_dimension", n * degree)
    field = extended.params.galois_field()
    matrix = extended.field_matrix()
    columns: list[np.ndarray] = []
    for i in range(n):
        for k in range(degree):
            beta = field(p**k)
            image = -matrix[:, i] * beta**p
            image[i] += beta
            columns.append(image.vector().view(np.ndarray).reshape(-1))
    prime = FieldParams(p).galois_field()
    rank = int(np.linalg.matrix_rank(prime(np.stack(columns, axis=1))))
    return p ** (n * degree - rank)


def solution_count(instance: ASInstance, e: int) -> int:
    """
    The number of solutions of x = A x^[p] in F_{q^e}^n.

    Small cases are enumerated; beyond max_brute_force vectors the count is
    p^k with k the F_p-dimension of the kernel of x -> x - A x^[p].

    :raises CapExceeded: If the kernel system exceeds max_linear_dimension.
    :rtype: int
    """
    if instance.params.extension(e).order ** instance.n <= active_caps().max_brute_force:
        return len(_solutions(instance, e))
    return _kernel_count(instance, e)


def solution_space(instance: ASInstance, e: int) -> list[tuple[FiniteFieldElement, ...]]:
    """
    All solutions of x = A x^[p] in F_{q^e}^n, by exhaustive search.

    :raises CapExceeded: If q^{e n} exceeds max_brute_force.
    :rtype: list[tuple[FiniteFieldElement, ...]]
    """
    target = instance.params.extension(e)
    active_caps().check("max_brute_force", target.order**instance.n)
    return [
        tuple(FiniteFieldElement.from_int(target, int(x)) for x in row)
        for row in _solutions(instance, e)
    ]


def _log_p(count: int, p: int) -> int | None:
    exponent = 0
    while count > 1 and count % p == 0:
        count //= p
        exponent += 1
    return exponent if count == 1 else None


def brute_force_as_dimension(instance: ASInstance, max_extension: int) -> int:
    """
    Counts solutions over F_{q^e} for e = 1, ..., e_max and returns log_p of
    the largest count.

    Every count is a power of p. The Frobenius x -> x^q acts on the full
    solution space F_p^D as an element of GL_D(F_p), whose order is at most
    p^D - 1 <= p^n - 1, so all solutions appear at some e <= p^n - 1. The
    answer is exact once e_max reaches that bound or a count reaches p^n.
    Below the bound the counts are accepted when the count at e_max does not
    exceed every earlier one.

    :param instance: The system.
    :type instance: ASInstance
    :param max_extension: e_max.
    :type max_extension: int
    :raises CapExceeded: If a count exceeds both enumeration and kernel caps.
    :raises NotStabilized: If the counts still grow at e_max; raise e_max then.
    :rtype: int
    """
    if max_extension < 1:
        raise ValueError(f"Maximal extension degree must be positive, got {max_extension}")
    p, n = instance.params.p, instance.n
    counts: list[int] = []
    for e in range(1, max_extension + 1):
        count = solution_count(instance, e)
        if _log_p(count, p) is None:
            field = instance.params.extension(e)
            raise NotStabilized(f"{count} solutions over {field} is no power of {p}")
        counts.append(count)
        if count == p**n:
            break
    logger.debug("solution counts for e = 1..%d: %s", len(counts), counts)
    best = max(counts)
    exact = best == p**n or len(counts) >= p**n - 1
    if not exact and (len(counts) == 1 or counts[-1] > max(counts[:-1])):
        raise NotStabilized(f"Counts {counts} still grow at e = {max_extension}")
    return _log_p(best, p)  # type: ignore[return-value]


def is_fp_linear(solutions: Sequence[tuple[FiniteFieldElement, ...]], p: int) -> bool:
    """True iff the set is closed under addition and under F_p-scaling."""
    members = set(solutions)
    for x in solutions:
        for c in range(p):
            if tuple(c * xi for xi in x) not in members:
                return False
        for y in solutions:
            if tuple(xi + yi for xi, yi in zip(x, y)) not in members:
                return False
    return True
