# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Seeded random crystals.

All randomness comes from a numpy ``Generator`` on the PCG64 bit generator and
is drawn with ``Generator.integers`` only, so a seed reproduces the same
crystals on every platform.
"""

import math
from fractions import Fraction

import numpy as np

from crystalline.wittring import (
    FieldParams,
    GaloisRing,
    GaloisRingElement,
    RingMatrix,
    galois_ring,
)

from .constructions import change_of_basis, direct_sum, standard_E
from .crystal import FCrystal, make_crystal


def make_rng(seed: int) -> np.random.Generator:
    """The generator used everywhere a seed is accepted."""
    return np.random.Generator(np.random.PCG64(seed))


def draw(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in [low, high)."""
    return int(rng.integers(low, high))


def random_element(ring: GaloisRing, rng: np.random.Generator) -> GaloisRingElement:
    return ring.element([draw(rng, 0, ring.modulus) for _ in range(ring.d)])


def random_unit(ring: GaloisRing, rng: np.random.Generator) -> GaloisRingElement:
    while True:
        x = random_element(ring, rng)
        if x.is_unit():
            return x


def random_invertible(ring: GaloisRing, size: int, rng: np.random.Generator) -> RingMatrix:
    """
    A random element of GL_size(GR(p^m, d)) as a product of a unit lower
    triangular and an upper triangular matrix with unit diagonal.
    """
    zero, one = ring.zero, ring.one
    lower = [
        [random_element(ring, rng) if j < i else (one if i == j else zero) for j in range(size)]
        for i in range(size)
    ]
    upper = [
        [
            random_element(ring, rng) if j > i else (random_unit(ring, rng) if i == j else zero)
            for j in range(size)
        ]
        for i in range(size)
    ]
    return RingMatrix(ring, lower) @ RingMatrix(ring, upper)


def random_crystal(
    rng: np.random.Generator,
    base: FieldParams,
    rank: int,
    precision: int,
    twist: int = 1,
    max_det_valuation: int = 4,
) -> FCrystal:
    """
    U * diag(p^{a_1}, ..., p^{a_r}) * V with random invertible U, V and
    sum(a_i) <= max_det_valuation. The Hodge slopes are the a_i.
    """
    ring = galois_ring(base, precision)
    exponents = []
    budget = max_det_valuation
    for _ in range(rank):
        a = draw(rng, 0, budget + 1)
        exponents.append(a)
        budget -= a
    diagonal = RingMatrix.diagonal(ring, [base.p**a for a in exponents])
    matrix = random_invertible(ring, rank, rng) @ diagonal @ random_invertible(ring, rank, rng)
    return make_crystal(base, twist, precision, matrix)


def random_slopes(
    rng: np.random.Generator, rank: int, max_numerator: int = 3
) -> list[tuple[int, int]]:
    """
    A random list of slopes a/b in lowest terms whose denominators sum to rank.
    """
    slopes = []
    left = rank
    while left > 0:
        b = draw(rng, 1, left + 1)
        coprime = [a for a in range(max_numerator + 1) if math.gcd(a, b) == 1]
        slopes.append((coprime[draw(rng, 0, len(coprime))], b))
        left -= b
    return slopes


def oracle_crystal(
    rng: np.random.Generator,
    base: FieldParams,
    slopes: list[tuple[int, int]],
    precision: int,
    twist: int = 1,
) -> FCrystal:
    """
    The direct sum of the E(a/b) in the random basis U: U^-1 * M * sigma^n(U).
    Its Newton slopes are known by construction.
    """
    summands = [standard_E(a, b, twist, base, precision) for a, b in slopes]
    crystal = summands[0]
    for summand in summands[1:]:
        crystal = direct_sum(crystal, summand)
    basis = random_invertible(galois_ring(base, precision), crystal.rank, rng)
    return change_of_basis(crystal, basis)


def slope_multiset(slopes: list[tuple[int, int]]) -> list[Fraction]:
    """Expands [(a, b), ...] to the sorted list of a/b repeated b times."""
    return sorted(Fraction(a, b) for a, b in slopes for _ in range(b))
