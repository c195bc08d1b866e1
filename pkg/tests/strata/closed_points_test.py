# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.shared import CapExceeded, ResourceCaps, reset_caps
from crystalline.strata import closed_points, enumerate_closed_points, example_family
from crystalline.wittring import FieldParams


class ClosedPointsTest(unittest.TestCase):
    """
    Tests for the enumeration of Frobenius orbit representatives
    """

    def tearDown(self):
        reset_caps()

    def test_counts(self):
        """
        Orbits of exact degree e number (q^{ek} - smaller fields) / e
        """
        points = closed_points(FieldParams(2), 1, 3)
        self.assertEqual([point.degree for point in points], [1, 1, 2, 3, 3])
        self.assertEqual(len(closed_points(FieldParams(3), 2, 1)), 9)
        self.assertEqual(len(closed_points(FieldParams(2), 2, 2)), 4 + 6)
        self.assertEqual(len(closed_points(FieldParams(2, 2), 1, 2)), 4 + 6)

    def test_family_points(self):
        """
        The points of a family are those of its base affine space
        """
        family = example_family(3, 2)
        points = enumerate_closed_points(family, 2)
        self.assertEqual(points, closed_points(FieldParams(3), 1, 2))
        self.assertEqual(len(points), 3 + 3)

    def test_representatives(self):
        """
        Each representative is the least key of its orbit
        """
        for point in closed_points(FieldParams(2), 2, 3):
            keys = [conjugate.key for conjugate in point.conjugates()]
            self.assertEqual(point.key, min(keys))
            self.assertEqual(len(set(keys)), point.degree)
            self.assertTrue(point.representative)
            if point.degree > 1:
                self.assertFalse(point.conjugate(1).representative)

    def test_order(self):
        """
        Points are ordered by degree and then by key
        """
        points = closed_points(FieldParams(3), 1, 2)
        for degree in (1, 2):
            keys = [point.key for point in points if point.degree == degree]
            self.assertEqual(keys, sorted(keys))
        self.assertEqual([point.key for point in points[:3]], [(0,), (1,), (2,)])

    def test_zero_variables(self):
        """
        A^0 has exactly one point
        """
        points = closed_points(FieldParams(5), 0, 3)
        self.assertEqual(len(points), 1)
        self.assertEqual(points[0].coords, ())

    def test_invalid(self):
        """
        D must be positive and the point count is capped
        """
        with self.assertRaises(ValueError):
            closed_points(FieldParams(2), 1, 0)
        reset_caps(ResourceCaps(max_points=10))
        self.assertEqual(len(closed_points(FieldParams(2), 1, 2)), 3)
        with self.assertRaises(CapExceeded):
            closed_points(FieldParams(2), 1, 3)
        with self.assertRaises(CapExceeded):
            closed_points(FieldParams(2), 3, 1)

    def test_to_dict(self):
        """
        Coordinates serialize as coordinate lists over F_p
        """
        point = closed_points(FieldParams(2), 1, 2)[-1]
        self.assertEqual(point.to_dict()["degree"], 2)
        self.assertEqual(len(point.to_dict()["coords"][0]), 2)


if __name__ == "__main__":
    unittest.main()
