# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Newton polygon, break point and p-rank stratifications of a family, sampled
at its closed points.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import networkx as nx

from crystalline.polygons import BreakPoint, Polygon, has_break_point, lies_above, newton_polygon
from crystalline.shared import CrystallineError, RankMismatch

from .closed_points import ClosedPoint, enumerate_closed_points
from .family import FamilyCrystal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointRecord:
    """The outcome of evaluating a family at one closed point."""

    point: ClosedPoint
    newton: Polygon | None = None
    p_rank: int | None = None
    #: The error raised at this point, if any; newton and p_rank are None then.
    error: CrystallineError | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> dict:
        return {
            "point": self.point.to_dict(),
            "newton": None if self.newton is None else self.newton.segments_list(),
            "p_rank": self.p_rank,
            "error": None
            if self.error is None
            else {"type": type(self.error).__name__, "message": str(self.error)},
        }


def _group(pairs: Iterable[tuple[object, ClosedPoint]]) -> dict:
    groups: dict = {}
    for key, point in pairs:
        groups.setdefault(key, []).append(point)
    return groups


@dataclass(frozen=True)
class StratumReport:
    """
    Per-point records of a scan and the stratifications derived from them.
    Every grouping lists points in enumeration order.
    """

    family: FamilyCrystal
    max_degree: int
    records: tuple[PointRecord, ...]

    @property
    def successes(self) -> list[PointRecord]:
        return [record for record in self.records if record.ok]

    @property
    def failures(self) -> list[PointRecord]:
        return [record for record in self.records if not record.ok]

    @property
    def points(self) -> list[ClosedPoint]:
        return [record.point for record in self.successes]

    @property
    def strata(self) -> dict[Polygon, list[ClosedPoint]]:
        """S_nu for every observed Newton polygon nu, in order of first observation."""
        return _group((record.newton, record.point) for record in self.successes)

    @property
    def break_point_strata(self) -> dict[BreakPoint, list[ClosedPoint]]:
        """S_P for every observed break point P, sorted by P."""
        groups = _group(
            (vertex, record.point)
            for record in self.successes
            for vertex in record.newton.vertices()  # type: ignore[union-attr]
        )
        return dict(sorted(groups.items()))

    @property
    def p_rank_strata(self) -> dict[int, list[ClosedPoint]]:
        """Y_t for every observed p-rank t, sorted by t."""
        groups = _group((record.p_rank, record.point) for record in self.successes)
        return dict(sorted(groups.items()))

    @property
    def degree_polygons(self) -> dict[int, list[Polygon]]:
        """The polygons first observed at each extension degree."""
        seen: set[Polygon] = set()
        result: dict[int, list[Polygon]] = {e: [] for e in range(1, self.max_degree + 1)}
        for record in self.successes:
            if record.newton not in seen:
                seen.add(record.newton)  # type: ignore[arg-type]
                result[record.point.degree].append(record.newton)  # type: ignore[arg-type]
        return result

    @property
    def stabilized_degree(self) -> int | None:
        """
        The least degree after which no new polygon shows up, or None if no
        point was evaluated successfully.
        """
        degrees = [e for e, polygons in self.degree_polygons.items() if polygons]
        return max(degrees) if degrees else None

    def stratum_of(self, polygon: Polygon) -> list[ClosedPoint]:
        return self.strata.get(polygon, [])

    def to_dict(self) -> dict:
        return {
            "family": self.family.to_dict(),
            "max_degree": self.max_degree,
            "points": [record.to_dict() for record in self.records],
            "strata": [
                {"newton": polygon.segments_list(), "points": [p.to_dict() for p in points]}
                for polygon, points in self.strata.items()
            ],
            "break_point_strata": [
                {"break_point": vertex.to_list(), "points": [p.to_dict() for p in points]}
                for vertex, points in self.break_point_strata.items()
            ],
            "p_rank_strata": [
                {"p_rank": t, "points": [p.to_dict() for p in points]}
                for t, points in self.p_rank_strata.items()
            ],
            "degree_polygons": [
                {"degree": e, "newton": [polygon.segments_list() for polygon in polygons]}
                for e, polygons in self.degree_polygons.items()
            ],
            "stabilized_degree": self.stabilized_degree,
            "errors": len(self.failures),
        }


def evaluate_point(family: FamilyCrystal, point: ClosedPoint) -> PointRecord:
    """
    Evaluates the family at one point. Errors of the library are recorded in
    the result, everything else propagates.
    """
    try:
        newton = newton_polygon(family.evaluate_at(point))
    except CrystallineError as error:
        logger.info("%s at %s: %s", type(error).__name__, point, error)
        return PointRecord(point, error=error)
    return PointRecord(point, newton, newton.multiplicity(0))


def scan(
    family: FamilyCrystal,
    max_degree: int,
    jobs: int = 1,
    progress: Callable[[PointRecord], None] | None = None,
) -> StratumReport:
    """
    Evaluates the family at every closed point of degree at most D.

    Points are evaluated on a thread pool; records are merged in enumeration
    order whatever the completion order.

    :param family: The family.
    :type family: FamilyCrystal
    :param max_degree: D.
    :type max_degree: int
    :param jobs: Number of worker threads.
    :type jobs: int
    :param progress: Called once per record, in enumeration order.
    :type progress: Callable[[PointRecord], None] | None
    :raises CapExceeded: If there are too many points.
    :raises CrystallineError: The first point's error if every point failed.
    :rtype: StratumReport
    """
    points = enumerate_closed_points(family, max_degree)
    records = []
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as executor:
        for record in executor.map(lambda point: evaluate_point(family, point), points):
            records.append(record)
            if progress is not None:
                progress(record)
    if records and all(not record.ok for record in records):
        raise records[0].error  # type: ignore[misc]
    report = StratumReport(family, max_degree, tuple(records))
    logger.debug(
        "scan over %d points: %d strata, %d errors",
        len(records),
        len(report.strata),
        len(report.failures),
    )
    return report


def specialization_stratum(report: StratumReport, polygon: Polygon) -> list[ClosedPoint]:
    """
    S_{>= nu}: the sampled points whose Newton polygon lies above nu.

    :raises RankMismatch: If nu has a different rank than the family.
    """
    if polygon.rank != report.family.rank:
        raise RankMismatch(f"Polygon of rank {polygon.rank} for a rank-{report.family.rank} family")
    return [
        record.point
        for record in report.successes
        if lies_above(record.newton, polygon)  # type: ignore[arg-type]
    ]


def specialization_graph(report: StratumReport, extra: Sequence[Polygon] = ()) -> nx.DiGraph:
    """
    The observed polygons (and extra ones) ordered by specialization: an edge
    nu -> nu' when nu' lies above nu, transitively reduced. Node attribute
    "points" counts the sampled points in S_nu.

    :rtype: nx.DiGraph
    """
    strata = report.strata
    graph = nx.DiGraph()
    for polygon in itertools.chain(strata, extra):
        graph.add_node(polygon, points=len(strata.get(polygon, [])))
    for lower, upper in itertools.permutations(graph.nodes, 2):
        if lower.rank == upper.rank and lies_above(upper, lower):
            graph.add_edge(lower, upper)
    reduced = nx.transitive_reduction(graph)
    reduced.add_nodes_from(graph.nodes(data=True))
    return reduced


def check_specialization(report: StratumReport, polygon: Polygon) -> bool:
    """
    Pointwise consistency of S_{>= nu}: every sampled point whose polygon
    lies above some nu' lying above nu belongs to S_{>= nu}, and lies_above is
    transitive on the observed polygons together with nu. Closedness itself
    cannot be decided from samples; the stratum is logged for inspection.

    :rtype: bool
    """
    members = set(specialization_stratum(report, polygon))
    logger.info("S_>=%s: %s", polygon, ", ".join(str(p) for p in members) or "empty")
    strata = report.strata
    for observed, points in strata.items():
        if lies_above(observed, polygon) and not members.issuperset(points):
            return False
        if not lies_above(observed, polygon) and members.intersection(points):
            return False
    polygons = [p for p in itertools.chain(strata, [polygon]) if p.rank == polygon.rank]
    for a, b, c in itertools.permutations(polygons, 3):
        if lies_above(a, b) and lies_above(b, c) and not lies_above(a, c):
            return False
    return nx.is_directed_acyclic_graph(specialization_graph(report, [polygon]))


def check_p_rank_break_points(report: StratumReport) -> bool:
    """
    Y_t = S_{(t, 0)} at every sampled point: (t, 0) is a break point exactly
    for t = 0 and t = p-rank.
    """
    for record in report.successes:
        newton = record.newton
        on_axis = {v.x for v in newton.vertices() if v.y == 0}  # type: ignore[union-attr]
        if on_axis != {0, record.p_rank}:
            return False
        if not has_break_point(newton, (record.p_rank, 0)):  # type: ignore[arg-type]
            return False
    return True


def check_galois_invariance(family: FamilyCrystal, points: Iterable[ClosedPoint]) -> bool:
    """
    Evaluates every Frobenius conjugate of each point; all of them must give
    the same Newton polygon, or fail with the same error class.
    """
    for point in points:
        outcomes = set()
        for conjugate in point.conjugates():
            record = evaluate_point(family, conjugate)
            outcomes.add(record.newton if record.ok else type(record.error))
        if len(outcomes) != 1:
            logger.info("conjugates of %s disagree: %s", point, outcomes)
            return False
    return True
