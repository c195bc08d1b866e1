# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.polygons import newton_polygon
from crystalline.shared import CapExceeded, NotACrystal, ParamMismatch
from crystalline.strata import (
    ClosedPoint,
    FamilyCrystal,
    TeichmullerPolynomial,
    closed_points,
    constant_family,
    example_family,
)
from crystalline.fcrystal import standard_E
from crystalline.wittring import FieldParams, galois_ring


class TeichmullerPolynomialTest(unittest.TestCase):
    """
    Tests for polynomial arithmetic over W_m(F_q)
    """

    def setUp(self):
        self.ring = galois_ring(FieldParams(3), 3)
        self.t = TeichmullerPolynomial.variable(self.ring, 1, 0)

    def test_arithmetic(self):
        """
        Expanding a square and cancelling terms
        """
        t = self.t
        self.assertEqual((t + 1) ** 2, t * t + 2 * t + 1)
        self.assertEqual((t - t).terms, ())
        self.assertEqual((1 - t) + t, TeichmullerPolynomial.constant(self.ring, 1, 1))
        self.assertEqual(((t + 1) ** 2).degree, 2)
        self.assertTrue(TeichmullerPolynomial.constant(self.ring, 1, 5).is_constant())

    def test_repeated_exponents(self):
        """
        Repeated exponent vectors are added up
        """
        poly = TeichmullerPolynomial(self.ring, 1, [((1,), 2), ((1,), 7)])
        self.assertEqual(poly, 9 * self.t)

    def test_evaluate(self):
        """
        Evaluation at ring elements, also after embedding into an extension
        """
        poly = self.t**2 + 3 * self.t
        self.assertEqual(poly.evaluate([self.ring.element(2)]), self.ring.element(10))
        extension = galois_ring(FieldParams(3, 2), 3)
        u = extension.generator
        self.assertEqual(poly.evaluate([u]), u * u + 3 * u)

    def test_invalid(self):
        """
        Bad exponents, foreign coefficients and mutation are rejected
        """
        with self.assertRaises(ValueError):
            TeichmullerPolynomial(self.ring, 1, [((1, 0), 1)])
        with self.assertRaises(ValueError):
            TeichmullerPolynomial(self.ring, 1, [((-1,), 1)])
        other = galois_ring(FieldParams(3), 4)
        with self.assertRaises(ParamMismatch):
            TeichmullerPolynomial(self.ring, 1, [((0,), other.one)])
        with self.assertRaises(AttributeError):
            self.t.nvars = 2
        with self.assertRaises(ValueError):
            self.t ** (-1)


class FamilyCrystalTest(unittest.TestCase):
    """
    Tests for families and their specializations
    """

    def test_example_family(self):
        """
        [[t, p], [p, 0]] specializes to slopes (1, 1) at t = 0 and (0, 2) elsewhere
        """
        family = example_family(3, 5)
        points = closed_points(family.base, 1, 1)
        polygons = [newton_polygon(family.evaluate_at(point)) for point in points]
        self.assertEqual([str(polygon) for polygon in polygons], ["(1, 1)", "(0, 2)", "(0, 2)"])

    def test_extension_point(self):
        """
        A degree-2 point specializes to a crystal over F_{q^2}
        """
        family = example_family(2, 4)
        point = closed_points(family.base, 1, 2)[-1]
        crystal = family.evaluate_at(point)
        self.assertEqual(crystal.base, FieldParams(2, 2))
        self.assertEqual(str(newton_polygon(crystal)), "(0, 2)")

    def test_not_a_crystal(self):
        """
        A determinant vanishing at a point raises there
        """
        ring = galois_ring(FieldParams(2), 3)
        t = TeichmullerPolynomial.variable(ring, 1, 0)
        family = FamilyCrystal(FieldParams(2), ("t",), 1, 3, ((t,),))
        point = closed_points(family.base, 1, 1)[0]
        with self.assertRaises(NotACrystal):
            family.evaluate_at(point)

    def test_point_mismatch(self):
        """
        Points must lie on the family's base
        """
        family = example_family(2, 4)
        point = closed_points(FieldParams(3), 1, 1)[0]
        with self.assertRaises(ParamMismatch):
            family.evaluate_at(point)

    def test_constant_family(self):
        """
        A constant family has the same polygon everywhere
        """
        crystal = standard_E(1, 2, 1, FieldParams(2), 4)
        family = constant_family(crystal)
        for point in closed_points(family.base, 1, 2):
            self.assertEqual(str(newton_polygon(family.evaluate_at(point))), "(1/2, 1/2)")

    def test_lift_precision(self):
        """
        Lifting and truncating keep the matrix coordinates
        """
        family = example_family(2, 4)
        self.assertEqual(family.lift_precision(8).precision, 8)
        self.assertEqual(family.lift_precision(8).lift_precision(4), family)

    def test_entry_degree_cap(self):
        """
        Entries of too large a degree are refused
        """
        ring = galois_ring(FieldParams(2), 3)
        t = TeichmullerPolynomial.variable(ring, 1, 0)
        with self.assertRaises(CapExceeded):
            FamilyCrystal(FieldParams(2), ("t",), 1, 3, ((t**17 + 1,),))

    def test_to_dict(self):
        """
        Serialized family lists its variables
        """
        data = example_family(2, 4).to_dict()
        self.assertEqual(data["vars"], ["t"])
        self.assertEqual(data["rank"], 2)
        self.assertIsInstance(closed_points(FieldParams(2), 1, 1)[0], ClosedPoint)


if __name__ == "__main__":
    unittest.main()
