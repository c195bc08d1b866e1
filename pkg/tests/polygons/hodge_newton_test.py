# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest
from fractions import Fraction

from crystalline.fcrystal import direct_sum, make_crystal, standard_E, tensor_power, unit_crystal
from crystalline.polygons import (
    Polygon,
    PolygonKind,
    fixed_point_dimension,
    hodge_function,
    hodge_polygon,
    is_divisible_by,
    is_topologically_nilpotent,
    is_unit_root,
    lies_above,
    newton_function,
    newton_polygon,
    p_rank,
)
from crystalline.shared import InsufficientPrecision
from crystalline.wittring import FieldParams, galois_ring


class HodgeNewtonTest(unittest.TestCase):
    """
    Tests for Hodge and Newton polygons of explicit crystals
    """

    def test_standard_e(self):
        """
        E(a/b) has one slope a/b with multiplicity b
        """
        for base in (FieldParams(2), FieldParams(2, 2)):
            for a, b in ((0, 1), (1, 2), (2, 3), (3, 4), (5, 1)):
                newton = newton_polygon(standard_E(a, b, 1, base, a * b + 2))
                self.assertEqual(newton.segments, ((Fraction(a, b), b),))

    def test_standard_e_twisted(self):
        """
        The slope of E(a/b) does not depend on the twist
        """
        crystal = standard_E(1, 2, 3, FieldParams(3, 2), 4)
        self.assertEqual(newton_polygon(crystal).slopes, (Fraction(1, 2), Fraction(1, 2)))

    def test_hodge_of_e(self):
        """
        The Hodge polygon of E(1/2) has slopes 0 and 1
        """
        crystal = standard_E(1, 2, 1, FieldParams(2), 4)
        self.assertEqual(hodge_polygon(crystal), Polygon.from_slopes(PolygonKind.HODGE, [0, 1]))

    def test_worked_example(self):
        """
        [[t, p], [p, 0]] at t = 1 has slopes 0 and 2, at t = 0 slopes 1 and 1
        """
        base = FieldParams(2)
        at_one = make_crystal(base, 1, 5, [[1, 2], [2, 0]])
        at_zero = make_crystal(base, 1, 5, [[0, 2], [2, 0]])
        self.assertEqual(newton_polygon(at_one).segments_list(), [[0, 1, 1], [2, 1, 1]])
        self.assertEqual(newton_polygon(at_zero).segments_list(), [[1, 1, 2]])
        self.assertEqual(hodge_polygon(at_zero).segments_list(), [[1, 1, 2]])

    def test_mazur(self):
        """
        Newton lies above Hodge with the same endpoint
        """
        crystal = make_crystal(FieldParams(3), 1, 6, [[1, 3, 0], [0, 0, 9], [3, 1, 3]])
        newton, hodge = newton_polygon(crystal), hodge_polygon(crystal)
        self.assertTrue(lies_above(newton, hodge))
        self.assertEqual(newton.height, hodge.height)

    def test_extension_entries(self):
        """
        Entries outside the prime field are handled by iterating
        """
        ring = galois_ring(FieldParams(2, 2), 5)
        u = ring.generator
        crystal = make_crystal(FieldParams(2, 2), 1, 5, [[u, 2], [2 * u, 0]])
        self.assertEqual(newton_polygon(crystal).slopes, (0, 2))

    def test_insufficient_precision(self):
        """
        An uncertified hull raises instead of answering
        """
        square = tensor_power(standard_E(1, 2, 1, FieldParams(2), 6), 2)
        self.assertEqual(newton_polygon(square).slopes, (1, 1, 1, 1))
        base = FieldParams(2, 3)
        u = galois_ring(base, 3).generator
        crystal = make_crystal(base, 1, 3, [[0, 2], [2 * u, 0]])
        with self.assertRaises(InsufficientPrecision):
            newton_polygon(crystal)
        u = galois_ring(base, 4).generator
        crystal = make_crystal(base, 1, 4, [[0, 2], [2 * u, 0]])
        self.assertEqual(newton_polygon(crystal).slopes, (1, 1))

    def test_exact_end_point(self):
        """
        The last vertex is e v(det M) even where det L vanishes modulo p^m
        """
        u = galois_ring(FieldParams(2, 2), 2).generator
        crystal = make_crystal(FieldParams(2, 2), 1, 2, [[u, 0], [0, 2]])
        self.assertEqual(crystal.meta.linearization_length, 2)
        self.assertEqual(newton_polygon(crystal).slopes, (0, 1))

    def test_polygon_functions(self):
        """
        Hodge_F(i) and Newton_F(i) are the ordinates
        """
        base = FieldParams(2)
        crystal = direct_sum(standard_E(1, 2, 1, base, 8), standard_E(2, 1, 1, base, 8))
        newton, hodge = newton_polygon(crystal), hodge_polygon(crystal)
        for i in range(4):
            self.assertEqual(newton_function(crystal, i), newton.ordinate(i))
            self.assertEqual(hodge_function(crystal, i), hodge.ordinate(i))


class PRankTest(unittest.TestCase):
    """
    Tests for p-ranks and the slope predicates
    """

    def test_p_rank(self):
        """
        p-rank counts the slope 0 and equals the fixed point dimension
        """
        base = FieldParams(2)
        crystal = direct_sum(unit_crystal(base, 4, rank=2), standard_E(1, 2, 1, base, 4))
        self.assertEqual(p_rank(crystal), 2)
        self.assertEqual(fixed_point_dimension(crystal), 2)

    def test_predicates(self):
        """
        Unit-root and topologically nilpotent crystals
        """
        base = FieldParams(3)
        self.assertTrue(is_unit_root(unit_crystal(base, 2, rank=3)))
        self.assertFalse(is_unit_root(standard_E(1, 2, 1, base, 3)))
        self.assertTrue(is_topologically_nilpotent(standard_E(1, 2, 1, base, 3)))
        self.assertFalse(is_topologically_nilpotent(unit_crystal(base, 2)))

    def test_divisibility(self):
        """
        F^s(M) lies in p^{floor(s/2)} M for E(1/2)
        """
        crystal = standard_E(1, 2, 1, FieldParams(2), 8)
        self.assertTrue(is_divisible_by(crystal, Fraction(1, 2), 6))
        self.assertFalse(is_divisible_by(crystal, 1, 2))
        with self.assertRaises(InsufficientPrecision):
            is_divisible_by(crystal, 2, 4)


if __name__ == "__main__":
    unittest.main()
