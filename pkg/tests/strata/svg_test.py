# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest
from fractions import Fraction

from crystalline.polygons import Polygon, PolygonKind
from crystalline.strata import polygon_svg


class PolygonSvgTest(unittest.TestCase):
    """
    Tests for the SVG rendering of polygons
    """

    def setUp(self):
        self.polygons = [
            Polygon.from_slopes(PolygonKind.NEWTON, [Fraction(0), Fraction(2)]),
            Polygon.from_slopes(PolygonKind.NEWTON, [Fraction(1), Fraction(1)]),
        ]

    def test_document(self):
        """
        The output is an SVG document carrying the labels
        """
        svg = polygon_svg(self.polygons, ["(0, 2) (2)", "(1, 1) (1)"])
        self.assertIn("<svg", svg)
        self.assertIn("(0, 2) (2)", svg)
        self.assertIn("(1, 1) (1)", svg)

    def test_stable(self):
        """
        Equal input gives byte-identical output
        """
        self.assertEqual(polygon_svg(self.polygons), polygon_svg(self.polygons))

    def test_invalid(self):
        """
        Empty input and mismatched labels are rejected
        """
        with self.assertRaises(ValueError):
            polygon_svg([])
        with self.assertRaises(ValueError):
            polygon_svg(self.polygons, ["only one"])


if __name__ == "__main__":
    unittest.main()
