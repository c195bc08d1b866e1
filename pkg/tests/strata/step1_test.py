# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest
from fractions import Fraction

from crystalline.fcrystal import direct_sum, exterior_power, iterate, standard_E
from crystalline.polygons import newton_polygon
from crystalline.strata import (
    FamilyCrystal,
    TeichmullerPolynomial,
    constant_family,
    enumerate_closed_points,
    example_family,
    nu1_ordinates,
    nu2_ordinates,
    step1_report,
    verify_step1_identities,
)
from crystalline.wittring import FieldParams, galois_ring


class Step1Test(unittest.TestCase):
    """
    Tests for the break point identities on [[t, p], [p, 0]]
    """

    @classmethod
    def setUpClass(cls):
        cls.family = example_family(2, 5)

    def test_ordinary_break_point(self):
        """
        S_(1, 0) is the ordinary locus and both identities hold
        """
        report = step1_report(self.family, (1, 0), 2)
        self.assertTrue(report.passed)
        self.assertEqual([point.key for point in report.stratum if point.degree == 1], [(1,)])
        self.assertEqual(len(report.stratum), 2)
        origin = report.records[0]
        self.assertFalse(origin.in_stratum)
        self.assertTrue(origin.above_nu1)
        self.assertTrue(origin.above_nu2)
        self.assertTrue(origin.identity1)
        self.assertTrue(origin.identity2)

    def test_endpoint(self):
        """
        The right endpoint is a break point everywhere
        """
        report = step1_report(self.family, (2, 2), 2)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.stratum), 3)
        self.assertIsNone(report.records[0].identity2)

    def test_empty_stratum(self):
        """
        (1, 1) is never a vertex of a rank-2 polygon of height 2
        """
        report = step1_report(self.family, (1, 1), 2, jobs=2)
        self.assertTrue(report.passed)
        self.assertEqual(report.stratum, [])

    def test_trivial_memberships(self):
        """
        Break points that need no evaluation
        """
        self.assertEqual(step1_report(self.family, (Fraction(1, 2), 0), 1).stratum, [])
        self.assertEqual(len(step1_report(self.family, (0, 0), 1).stratum), 2)
        self.assertEqual(step1_report(self.family, (0, 1), 1).stratum, [])
        self.assertEqual(step1_report(self.family, (3, 0), 1).stratum, [])
        self.assertTrue(verify_step1_identities(self.family, (3, 0), 1))

    def test_extremal_polygons(self):
        """
        nu_1 passes through (1, b), nu_2 through (1, b + 1)
        """
        self.assertEqual(nu1_ordinates(1, 3, Fraction(6)), [0, 1, 3, 6])
        self.assertEqual(nu2_ordinates(1, 3, Fraction(6)), [0, 2, 4, 6])
        self.assertEqual(nu1_ordinates(0, 2, Fraction(2)), [0, 0, 2])

    def test_to_dict(self):
        """
        Serialized report
        """
        data = step1_report(self.family, (1, 0), 1).to_dict()
        self.assertEqual(list(data), ["break_point", "passed", "stratum", "points"])
        self.assertEqual(data["break_point"], ["1", "0"])
        self.assertEqual(data["points"][1]["identity1"], True)


class FractionalWedgeTest(unittest.TestCase):
    """
    Tests for break points whose exterior power has slopes with denominator 2
    """

    @classmethod
    def setUpClass(cls):
        # [[t, 2], [1, 0]] (+) [2]: slopes (1/2, 1/2, 1) at t = 0 and (0, 1, 1) elsewhere
        base = FieldParams(2)
        ring = galois_ring(base, 10)
        t = TeichmullerPolynomial.variable(ring, 1, 0)
        constant = lambda value: TeichmullerPolynomial.constant(ring, 1, value)  # noqa: E731
        entries = (
            (t, constant(2), constant(0)),
            (constant(1), constant(0), constant(0)),
            (constant(0), constant(0), constant(2)),
        )
        cls.family = FamilyCrystal(base, ("t",), 1, 10, entries)

    def test_identities(self):
        """
        Both identities hold for (2, 1), which is a vertex only at the origin
        """
        report = step1_report(self.family, (2, 1), 2)
        self.assertTrue(report.passed)
        self.assertEqual([point.key for point in report.stratum], [(0,)])
        origin = report.records[0]
        self.assertTrue(origin.wedge_break_point)
        self.assertTrue(origin.above_nu1)
        self.assertFalse(origin.above_nu2)
        self.assertFalse(report.records[1].above_nu1)

    def test_scaling_is_the_iterate(self):
        """
        Clearing the denominator c = 2 gives the polygon of the second iterate
        """
        origin = enumerate_closed_points(self.family, 1)[0]
        wedge = exterior_power(self.family.evaluate_at(origin), 2)
        polygon = newton_polygon(wedge)
        self.assertEqual(polygon.slopes, (1, Fraction(3, 2), Fraction(3, 2)))
        self.assertEqual(newton_polygon(iterate(wedge, 2)), polygon.scaled(2))

    def test_constant_family(self):
        """
        A constant E(1/2) (+) E(1) lies in S_(2, 1) everywhere
        """
        base = FieldParams(2)
        crystal = direct_sum(standard_E(1, 2, 1, base, 10), standard_E(1, 1, 1, base, 10))
        report = step1_report(constant_family(crystal), (2, 1), 2)
        self.assertTrue(report.passed)
        self.assertEqual(len(report.stratum), len(report.records))


if __name__ == "__main__":
    unittest.main()
