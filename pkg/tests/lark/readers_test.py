# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import pathlib
import unittest

from crystalline.artinschreier import as_dimension
from crystalline.lark import (
    ASDescription,
    CrystalDescription,
    FamilyDescription,
    load_as_input,
    load_as_instance,
    load_crystal,
    load_family,
    read_as_input,
    read_description,
)
from crystalline.polygons import newton_polygon
from crystalline.shared import DescriptionError, NotACrystal
from crystalline.strata import example_family
from crystalline.wittring import FieldParams

PATH = pathlib.Path(__file__).parent.absolute()


class CrystalDescriptionTest(unittest.TestCase):
    """
    Tests for reading single crystals
    """

    def test_standard(self):
        """
        The standard key builds E(a/b)
        """
        crystal = load_crystal(PATH / "models/e_half.json").build()
        self.assertEqual(crystal.rank, 2)
        self.assertEqual(str(newton_polygon(crystal)), "(1/2, 1/2)")

    def test_matrix(self):
        """
        Relaxed syntax with comments and trailing commas
        """
        description = load_crystal(PATH / "models/example_crystal.json")
        self.assertEqual(description.m, 5)
        crystal = description.build()
        self.assertEqual(newton_polygon(crystal).segments_list(), [[0, 1, 1], [2, 1, 1]])
        self.assertEqual(description.build(8).precision, 8)

    def test_entry_forms(self):
        """
        Coordinate lists, coords objects and expressions
        """
        crystal = load_crystal(PATH / "models/extension_crystal.json").build()
        self.assertEqual(crystal.base, FieldParams(2, 2))
        u = crystal.ring.generator
        self.assertEqual(crystal.matrix[0, 0], u)
        self.assertEqual(crystal.matrix[1, 0], 2 * u)
        self.assertEqual(crystal.matrix[1, 1], 0)
        self.assertEqual(newton_polygon(crystal).slopes, (0, 2))

    def test_malformed(self):
        """
        A missing comma is reported at the next key
        """
        with self.assertRaises(DescriptionError) as context:
            load_crystal(PATH / "models/malformed.json")
        self.assertEqual((context.exception.line, context.exception.column), (4, 3))

    def test_invalid_fields(self):
        """
        Inconsistent descriptions are refused
        """
        for text in (
            "{p: 2, m: 3}",
            "{p: 2, m: 3, standard: [1, 2], matrix: [[1]]}",
            "{p: 2, m: 3, rank: 2, matrix: [[1]]}",
            "{p: 2, m: 3, matrix: [[1, 0]]}",
            "{p: 2, m: 3, matrix: [[1]], extra: 1}",
            "{p: 2, m: 0, matrix: [[1]]}",
            "[1, 2]",
        ):
            with self.assertRaises(DescriptionError):
                read_description(text, CrystalDescription)

    def test_invalid_entries(self):
        """
        Entries must be ring elements over a valid field
        """
        with self.assertRaises(DescriptionError):
            read_description("{p: 2, m: 3, matrix: [[true]]}", CrystalDescription).build()
        with self.assertRaises(DescriptionError):
            read_description("{p: 2, m: 3, matrix: [[[1, 0]]]}", CrystalDescription).build()
        with self.assertRaises(DescriptionError):
            read_description("{p: 4, m: 3, matrix: [[1]]}", CrystalDescription).build()

    def test_not_a_crystal(self):
        """
        A vanishing determinant is not a description error
        """
        description = read_description("{p: 2, m: 2, matrix: [[2, 0], [0, 2]]}", CrystalDescription)
        with self.assertRaises(NotACrystal):
            description.build()


class FamilyDescriptionTest(unittest.TestCase):
    """
    Tests for reading families
    """

    def test_example_family(self):
        """
        The file describes [[t, p], [p, 0]]
        """
        description = load_family(PATH / "models/example_family.json")
        self.assertEqual(description.variables, ["t"])
        self.assertEqual(description.build(), example_family(2, 5))
        self.assertEqual(description.build(7).precision, 7)

    def test_monomials(self):
        """
        Entries may be lists of monomials
        """
        text = '{p: 3, m: 2, vars: ["x", "y"], matrix: [[[{exponents: [1, 2], coeff: 2}]]]}'
        family = read_description(text, FamilyDescription).build()
        self.assertEqual(family.entries[0][0].terms[0][0], (1, 2))
        self.assertEqual(family.entries[0][0].terms[0][1], 2)

    def test_invalid(self):
        """
        Bad monomials and variable names
        """
        for text in (
            '{p: 3, vars: ["p"], matrix: [[1]]}',
            '{p: 3, vars: ["t", "t"], matrix: [[1]]}',
            "{p: 3, matrix: [[[{exponents: [1, 1], coeff: 1}]]]}",
            "{p: 3, matrix: [[[{exponents: [1]}]]]}",
            '{p: 3, matrix: [["s"]]}',
        ):
            with self.assertRaises(DescriptionError):
                read_description(text, FamilyDescription).build()


class ASDescriptionTest(unittest.TestCase):
    """
    Tests for reading Artin-Schreier systems and families
    """

    def test_instance(self):
        """
        The A key holds the matrix
        """
        instance = load_as_instance(PATH / "models/as_identity.json").build()
        self.assertEqual(instance.n, 2)
        self.assertEqual(as_dimension(instance), 2)

    def test_dispatch(self):
        """
        Files with A are systems, files with matrix are families
        """
        self.assertIsInstance(load_as_input(PATH / "models/as_identity.json"), ASDescription)
        description = load_as_input(PATH / "models/as_family.json")
        self.assertIsInstance(description, FamilyDescription)
        family = description.build_as_family()
        self.assertEqual(family.base, FieldParams(3))
        self.assertEqual(family.n, 1)
        self.assertIsInstance(read_as_input("{p: 2, A: [[1]]}"), ASDescription)

    def test_invalid(self):
        """
        n must match the matrix
        """
        with self.assertRaises(DescriptionError):
            read_as_input("{p: 2, n: 2, A: [[1]]}")
        with self.assertRaises(DescriptionError):
            read_as_input("[[1]]")


if __name__ == "__main__":
    unittest.main()
