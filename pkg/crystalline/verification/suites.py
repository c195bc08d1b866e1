# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Seeded property suites over all sub-packages. Each suite draws its inputs
from a generator seeded with the suite seed, so a seed reproduces the exact
same checks.
"""

import functools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from crystalline.artinschreier import (
    ASInstance,
    as_dimension,
    brute_force_as_dimension,
    corollary3_crystal,
    is_fp_linear,
    lift_matrix,
    solution_space,
)
from crystalline.fcrystal import (
    FCrystal,
    draw,
    exterior_power,
    iterate,
    lift_precision,
    make_rng,
    oracle_crystal,
    random_crystal,
    random_element,
    random_invertible,
    random_slopes,
    random_unit,
    slope_multiset,
    standard_E,
    tensor_power,
    truncate,
)
from crystalline.polygons import (
    Polygon,
    PolygonKind,
    fixed_point_dimension,
    hodge_function,
    hodge_polygon,
    lies_above,
    newton_function,
    newton_polygon,
    p_rank,
)
from crystalline.shared import InsufficientPrecision
from crystalline.shared.caps import active_caps
from crystalline.strata import (
    FamilyCrystal,
    TeichmullerPolynomial,
    check_galois_invariance,
    check_p_rank_break_points,
    check_specialization,
    example_family,
    scan,
    verify_step1_identities,
)
from crystalline.wittring import (
    FieldParams,
    RingMatrix,
    embed,
    galois_ring,
    teichmuller,
)

logger = logging.getLogger(__name__)

#: Seed used when none is given.
DEFAULT_SEED = 20230601


@dataclass
class SuiteResult:
    """Outcome of one suite: the number of checks and the failed ones."""

    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, description: str) -> None:
        self.checks += 1
        if not condition:
            logger.warning("%s: %s", self.name, description)
            self.failures.append(description)

    def raises(
        self, error: type[Exception], function: Callable[[], object], description: str
    ) -> None:
        """Checks that calling function raises error."""
        try:
            function()
        except error:
            self.check(True, description)
            return
        self.check(False, description)

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
        }


def _fits(p: int, precision: int) -> bool:
    return p**precision < active_caps().max_modulus


@functools.lru_cache(maxsize=4)
def mazur_crystals(seed: int) -> tuple[FCrystal, ...]:
    """200 random crystals, r <= 4, p in {2, 3, 5}, d in {1, 2}, m <= 12."""
    rng = make_rng(seed)
    crystals = []
    for _ in range(200):
        base = FieldParams((2, 3, 5)[draw(rng, 0, 3)], draw(rng, 1, 3))
        rank = draw(rng, 1, 5)
        precision = draw(rng, 9, 13)
        crystals.append(
            random_crystal(rng, base, rank, precision, max_det_valuation=(precision - 1) // 2)
        )
    return tuple(crystals)


@functools.lru_cache(maxsize=4)
def oracle_crystals(seed: int) -> tuple[tuple[FCrystal, list[Fraction]], ...]:
    """100 change-of-basis conjugates of sums of E(a/b) with their slopes."""
    rng = make_rng(seed + 1)
    result = []
    for _ in range(100):
        base = FieldParams((2, 3)[draw(rng, 0, 2)], draw(rng, 1, 3))
        slopes = random_slopes(rng, draw(rng, 1, 5))
        precision = base.d * sum(a for a, _ in slopes) + 1
        result.append((oracle_crystal(rng, base, slopes, precision), slope_multiset(slopes)))
    return tuple(result)


@functools.lru_cache(maxsize=4)
def iterate_crystals(seed: int) -> tuple[tuple[FCrystal, list[Fraction]], ...]:
    """100 oracle crystals over F_2, F_3 and F_4, precise enough for F^3 and wedge^2."""
    rng = make_rng(seed + 2)
    result = []
    for index in range(100):
        d = 1 + index % 2
        base = FieldParams(2 if d == 2 else (2, 3)[draw(rng, 0, 2)], d)
        slopes = random_slopes(rng, draw(rng, 1, 5), max_numerator=2)
        # over F_4 the hulls end at twice the determinant valuation
        precision = 3 * d * sum(a for a, _ in slopes) + 2
        result.append((oracle_crystal(rng, base, slopes, precision), slope_multiset(slopes)))
    return tuple(result)


def _all_crystals(seed: int) -> Iterable[FCrystal]:
    yield from mazur_crystals(seed)
    for crystal, _ in oracle_crystals(seed):
        yield crystal


def suite_wittring(seed: int) -> SuiteResult:
    """Ring axioms, Frobenius, Teichmueller lifts, truncation and embeddings."""
    result = SuiteResult("wittring")
    rng = make_rng(seed)
    for p, d, m, wider in ((2, 1, 5, 2), (2, 2, 4, 4), (3, 2, 3, 4), (5, 1, 3, 3)):
        params = FieldParams(p, d)
        ring = galois_ring(params, m)
        target = FieldParams(p, wider)
        for _ in range(20):
            a, b, c = (random_element(ring, rng) for _ in range(3))
            label = f"GR({p}^{m}, {d}) at {a!r}, {b!r}"
            result.check((a * b) * c == a * (b * c), f"associativity in {label}")
            result.check(a * (b + c) == a * b + a * c, f"distributivity in {label}")
            result.check(a.frobenius(d) == a, f"sigma^d is the identity in {label}")
            result.check(
                (a * b).frobenius() == a.frobenius() * b.frobenius(),
                f"sigma is multiplicative in {label}",
            )
            result.check(
                (a + b).frobenius() == a.frobenius() + b.frobenius(),
                f"sigma is additive in {label}",
            )
            result.check(
                (a * b).valuation() == min(m, a.valuation() + b.valuation()),
                f"valuation is additive in {label}",
            )
            u = random_unit(ring, rng)
            result.check(u * u.inverse() == ring.one, f"inverse of {u!r}")
            x, y = a.residue(), b.residue()
            tx = teichmuller(x, m)
            result.check(tx.residue() == x, f"Teichmueller lift of {x!r} reduces to it")
            result.check(tx**params.order == tx, f"Teichmueller lift of {x!r} is fixed by x -> x^q")
            result.check(
                teichmuller(x * y, m) == tx * teichmuller(y, m),
                f"Teichmueller lift is multiplicative at {x!r}",
            )
            if m > 1:
                result.check(
                    (a * b).change_precision(m - 1)
                    == a.change_precision(m - 1) * b.change_precision(m - 1),
                    f"truncation is a ring map in {label}",
                )
            ea, eb = embed(a, target), embed(b, target)
            result.check(embed(a * b, target) == ea * eb, f"embedding of a product in {label}")
            result.check(embed(a + b, target) == ea + eb, f"embedding of a sum in {label}")
            result.check(
                embed(a.frobenius(), target) == embed(a, target).frobenius(),
                f"embedding commutes with sigma in {label}",
            )
    return result


def suite_e_lambda(seed: int) -> SuiteResult:
    """E(a/b) has the single slope a/b with multiplicity b."""
    result = SuiteResult("e_lambda")
    for base in (FieldParams(2, 1), FieldParams(2, 2)):
        for b in range(1, 5):
            for a in range(0, 7):
                if math.gcd(a, b) != 1:
                    continue
                crystal = standard_E(a, b, 1, base, a * b + 2)
                newton = newton_polygon(crystal)
                result.check(
                    newton.segments == ((Fraction(a, b), b),),
                    f"E({a}/{b}) over {base} has {newton}",
                )
    return result


def suite_worked_example(seed: int) -> SuiteResult:
    """
    The family F(e_1) = t e_1 + p e_2, F(e_2) = p e_1: slopes (1, 1) exactly at
    t = 0 and (0, 2) at every other point of degree <= 3.
    """
    result = SuiteResult("worked_example")
    nu1 = Polygon.from_slopes(PolygonKind.NEWTON, [1, 1])
    nu2 = Polygon.from_slopes(PolygonKind.NEWTON, [0, 2])
    for p in (2, 3, 5):
        family = example_family(p, 5)
        report = scan(family, 3)
        points = report.points
        origin = [point for point in points if point.degree == 1 and point.coords[0].is_zero()]
        result.check(not report.failures, f"p = {p}: every point evaluates")
        result.check(set(report.strata) == {nu1, nu2}, f"p = {p}: strata are {list(report.strata)}")
        result.check(report.stratum_of(nu1) == origin, f"p = {p}: S_nu1 is the origin")
        result.check(len(report.stratum_of(nu2)) == len(points) - 1, f"p = {p}: S_nu2 is the rest")
        result.check(
            report.p_rank_strata == {0: origin, 1: report.stratum_of(nu2)},
            f"p = {p}: p-rank strata",
        )
        result.check(check_p_rank_break_points(report), f"p = {p}: Y_t = S_(t, 0)")
        result.check(check_specialization(report, nu1), f"p = {p}: S_>=nu1 is consistent")
        zero = Polygon.from_slopes(PolygonKind.NEWTON, [0, 0])
        result.check(check_specialization(report, zero), f"p = {p}: S_>=0 is consistent")
        result.check(
            check_galois_invariance(family, [point for point in points if point.degree > 1][:4]),
            f"p = {p}: conjugate points agree",
        )
        result.check(verify_step1_identities(family, (1, 0), 2), f"p = {p}: identities at (1, 0)")
    return result


def suite_mazur(seed: int) -> SuiteResult:
    """Newton lies above Hodge with the same endpoint, the valuation of det."""
    result = SuiteResult("mazur")
    for index, crystal in enumerate(mazur_crystals(seed)):
        newton, hodge = newton_polygon(crystal), hodge_polygon(crystal)
        label = f"crystal {index} over {crystal.base}"
        result.check(lies_above(newton, hodge), f"{label}: {newton} is not above {hodge}")
        result.check(
            newton.height == hodge.height == crystal.meta.det_valuation,
            f"{label}: endpoints {newton.height}, {hodge.height}",
        )
    return result


def suite_oracle(seed: int) -> SuiteResult:
    """Computed slopes of conjugated sums of E(a/b) equal the constructed ones."""
    result = SuiteResult("oracle")
    for index, (crystal, slopes) in enumerate(oracle_crystals(seed)):
        newton = newton_polygon(crystal)
        result.check(list(newton.slopes) == slopes, f"crystal {index}: {newton} != {slopes}")
    return result


def suite_iterate_exterior(seed: int) -> SuiteResult:
    """NP(F^s) = s NP(F) and the slopes of wedge^2 are the pairwise sums."""
    result = SuiteResult("iterate_exterior")
    for index, (crystal, slopes) in enumerate(iterate_crystals(seed)):
        for s in (1, 2, 3):
            newton = newton_polygon(iterate(crystal, s))
            result.check(
                list(newton.slopes) == [s * x for x in slopes],
                f"crystal {index}: F^{s} has {newton}",
            )
        if crystal.rank >= 2:
            sums = sorted(slopes[i] + slopes[j] for i in range(len(slopes)) for j in range(i))
            wedge = newton_polygon(exterior_power(crystal, 2))
            result.check(list(wedge.slopes) == sums, f"crystal {index}: wedge^2 has {wedge}")
    return result


def suite_integrality(seed: int) -> SuiteResult:
    """Every Newton break point has integer coordinates."""
    result = SuiteResult("integrality")
    for crystal in _all_crystals(seed):
        y = Fraction(0)
        for slope, multiplicity in newton_polygon(crystal).segments:
            y += slope * multiplicity
            result.check(y.denominator == 1, f"break point with ordinate {y}")
    return result


def random_step1_family(
    rng: np.random.Generator, p: int, rank: int, precision: int
) -> FamilyCrystal:
    """
    An upper triangular family over A^1_{F_p} with diagonal entries among
    1, p, p^2, t + p, t + p^2, t^2 + p, conjugated by a random constant
    invertible matrix. Its Newton slopes are the valuations of the diagonal
    entries, so they are integers at every point.
    """
    base = FieldParams(p)
    ring = galois_ring(base, precision)
    t = TeichmullerPolynomial.variable(ring, 1, 0)

    def constant(value: int) -> TeichmullerPolynomial:
        return TeichmullerPolynomial.constant(ring, 1, value)

    def off_diagonal() -> TeichmullerPolynomial:
        return t if draw(rng, 0, 2) else constant(draw(rng, 0, p * p))

    diagonal = [constant(1), constant(p), constant(p * p), t + p, t + p * p, t * t + p]
    matrix = [
        [
            diagonal[draw(rng, 0, len(diagonal))]
            if i == j
            else (off_diagonal() if j > i else constant(0))
            for j in range(rank)
        ]
        for i in range(rank)
    ]
    basis = random_invertible(ring, rank, rng)
    inverse = basis.inverse()
    entries = tuple(
        tuple(
            sum(
                (
                    inverse[i, k] * matrix[k][h] * basis[h, j]
                    for k in range(rank)
                    for h in range(rank)
                ),
                constant(0),
            )
            for j in range(rank)
        )
        for i in range(rank)
    )
    return FamilyCrystal(base, ("t",), 1, precision, entries)


def suite_step1(seed: int) -> SuiteResult:
    """The break point identities on the worked example and on random families."""
    result = SuiteResult("step1")
    for p in (2, 3):
        family = example_family(p, 7)
        result.check(verify_step1_identities(family, (1, 0), 2), f"example family, p = {p}")
        result.check(verify_step1_identities(family, (0, 0), 1), f"example family, p = {p}, (0, 0)")
        result.check(verify_step1_identities(family, (Fraction(1, 2), 0), 1), f"p = {p}, (1/2, 0)")
    rng = make_rng(seed + 3)
    for index in range(25):
        p = (2, 3)[draw(rng, 0, 2)]
        rank = 2 + index % 2
        family = random_step1_family(rng, p, rank, 25)
        a = draw(rng, 1, rank + 1)
        b = draw(rng, 0, 2 * a + 1)
        result.check(
            verify_step1_identities(family, (a, b), 2), f"family {index}, p = {p}, ({a}, {b})"
        )
    return result


def suite_corollary3(seed: int) -> SuiteResult:
    """p-rank of the attached crystal = Artin-Schreier dimension = brute force count."""
    result = SuiteResult("corollary3")
    rng = make_rng(seed + 4)
    for index in range(100):
        p, d = ((2, 1), (2, 2), (3, 1))[draw(rng, 0, 3)]
        n = draw(rng, 1, 4)
        params = FieldParams(p, d)
        instance = ASInstance.random(params, n, rng)
        precision = d * n + 1
        dimension = as_dimension(instance)
        label = f"instance {index} over {params}, n = {n}"
        result.check(0 <= dimension <= n, f"{label}: dimension {dimension}")
        crystal = corollary3_crystal(instance, precision)
        result.check(p_rank(crystal) == dimension, f"{label}: p-rank")
        if n <= 2:
            oracle = brute_force_as_dimension(instance, p**n - 1)
            result.check(oracle == dimension, f"{label}: brute force gives {oracle}")
            solutions = solution_space(instance, 1)
            result.check(is_fp_linear(solutions, p), f"{label}: solutions are F_p-linear")
        if index % 10 == 0:
            g = lift_matrix(instance, precision)
            rows = [list(row) for row in g]
            rows[0][0] = rows[0][0] + p
            other = corollary3_crystal(instance, precision, RingMatrix(g.ring, rows))
            result.check(p_rank(other) == dimension, f"{label}: p-rank depends on the lift")
    return result


def suite_p_rank(seed: int) -> SuiteResult:
    """p-rank = stable rank of F mod p = largest x with (x, 0) a break point."""
    result = SuiteResult("p_rank")
    for index, crystal in enumerate(_all_crystals(seed)):
        newton = newton_polygon(crystal)
        t = p_rank(crystal)
        on_axis = max(v.x for v in newton.vertices() if v.y == 0)
        result.check(t == fixed_point_dimension(crystal), f"crystal {index}: fixed points")
        result.check(t == on_axis, f"crystal {index}: (x, 0) break points end at {on_axis}")
    return result


def suite_precision(seed: int) -> SuiteResult:
    """
    Doubling the precision keeps both polygons; at too small a precision the
    polygon is refused, never wrong.
    """
    result = SuiteResult("precision")
    for index, crystal in enumerate(_all_crystals(seed)):
        doubled = 2 * crystal.precision
        if not _fits(crystal.base.p, doubled):
            continue
        lifted = lift_precision(crystal, doubled)
        result.check(newton_polygon(lifted) == newton_polygon(crystal), f"crystal {index}: Newton")
        result.check(hodge_polygon(lifted) == hodge_polygon(crystal), f"crystal {index}: Hodge")
    for index, crystal in enumerate(mazur_crystals(seed)[:20]):
        expected = newton_polygon(crystal)
        for precision in range(1, crystal.precision):
            try:
                newton = newton_polygon(truncate(crystal, precision))
            except InsufficientPrecision:
                continue
            result.check(newton == expected, f"crystal {index} at m = {precision}: {newton}")
    base = FieldParams(2)
    result.raises(
        InsufficientPrecision, lambda: standard_E(1, 2, 1, base, 1), "E(1/2) at m = 1 is refused"
    )
    square = tensor_power(standard_E(1, 2, 1, base, 6), 2)
    result.raises(
        InsufficientPrecision, lambda: truncate(square, 1), "E(1/2)^2 at m = 1 is refused"
    )
    return result


def suite_polygon_functions(seed: int) -> SuiteResult:
    """Hodge_F(i) and Newton_F(i) are the least slopes of the exterior powers."""
    result = SuiteResult("polygon_functions")
    for index, (crystal, _) in enumerate(iterate_crystals(seed)[:40]):
        newton, hodge = newton_polygon(crystal), hodge_polygon(crystal)
        for i in range(crystal.rank + 1):
            label = f"crystal {index}, i = {i}"
            result.check(newton_function(crystal, i) == newton.ordinate(i), f"{label}: Newton_F")
            result.check(hodge_function(crystal, i) == hodge.ordinate(i), f"{label}: Hodge_F")
    return result


#: All suites in the order they run.
SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "wittring": suite_wittring,
    "e_lambda": suite_e_lambda,
    "worked_example": suite_worked_example,
    "mazur": suite_mazur,
    "oracle": suite_oracle,
    "iterate_exterior": suite_iterate_exterior,
    "integrality": suite_integrality,
    "step1": suite_step1,
    "corollary3": suite_corollary3,
    "p_rank": suite_p_rank,
    "precision": suite_precision,
    "polygon_functions": suite_polygon_functions,
}


def run_suites(
    names: Iterable[str] | None = None,
    seed: int = DEFAULT_SEED,
    progress: Callable[[SuiteResult], None] | None = None,
) -> list[SuiteResult]:
    """
    Runs the named suites in the given order, all of them in registry order by
    default.

    :raises KeyError: For an unknown suite name.
    """
    selected = list(SUITES) if names is None else list(names)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise KeyError(f"Unknown suites: {', '.join(unknown)}")
    results = []
    for name in selected:
        logger.info("running suite %s", name)
        results.append(SUITES[name](seed))
        if progress is not None:
            progress(results[-1])
    return results
