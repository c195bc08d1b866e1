# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.fcrystal import entry_field_degree, make_crystal, standard_E
from crystalline.shared import NotACrystal, ParamMismatch
from crystalline.wittring import FieldParams, RingMatrix, galois_ring


class FCrystalTest(unittest.TestCase):
    """
    Tests for crystal validation and metadata
    """

    def test_not_a_crystal(self):
        """
        det(M) = 0 modulo p^m is rejected
        """
        with self.assertRaises(NotACrystal):
            make_crystal(FieldParams(2), 1, 3, [[1, 2], [2, 4]])
        with self.assertRaises(NotACrystal):
            make_crystal(FieldParams(3), 1, 2, [[9]])

    def test_mismatch(self):
        """
        The matrix must live at the crystal's precision
        """
        matrix = RingMatrix(galois_ring(FieldParams(2), 4), [[1]])
        with self.assertRaises(ParamMismatch):
            make_crystal(FieldParams(2), 1, 3, matrix)

    def test_meta(self):
        """
        det valuation, linearization length and the precision guarantee
        """
        crystal = make_crystal(FieldParams(2), 1, 5, [[0, 2], [1, 0]])
        self.assertEqual(crystal.meta.det_valuation, 1)
        self.assertEqual(crystal.meta.linearization_length, 1)
        self.assertEqual(crystal.meta.guaranteed_slope_precision, 2)

    def test_meta_extension(self):
        """
        Entries outside the prime field need e = d / gcd(d, n) iterations
        """
        ring = galois_ring(FieldParams(2, 2), 4)
        u = ring.generator
        crystal = make_crystal(FieldParams(2, 2), 1, 4, [[u, 0], [0, 2]])
        self.assertEqual(entry_field_degree(crystal.matrix), 2)
        self.assertEqual(crystal.meta.linearization_length, 2)
        self.assertEqual(crystal.meta.guaranteed_slope_precision, 2)
        twisted = make_crystal(FieldParams(2, 2), 2, 4, [[u, 0], [0, 2]])
        self.assertEqual(twisted.meta.linearization_length, 1)

    def test_apply(self):
        """
        F(x) = M sigma^n(x) in the column convention
        """
        ring = galois_ring(FieldParams(2, 2), 3)
        u = ring.generator
        crystal = make_crystal(FieldParams(2, 2), 1, 3, [[0, 2], [1, 0]])
        self.assertEqual(crystal.apply([u, ring.zero]), (ring.zero, u * u))
        self.assertEqual(crystal.apply([ring.zero, ring.one]), (ring.element(2), ring.zero))

    def test_standard_e_matrix(self):
        """
        E(2/3) is the companion matrix of T^3 - p^2
        """
        crystal = standard_E(2, 3, 1, FieldParams(3), 4)
        expected = RingMatrix(crystal.ring, [[0, 0, 9], [1, 0, 0], [0, 1, 0]])
        self.assertEqual(crystal.matrix, expected)
        self.assertEqual(crystal.meta.det_valuation, 2)

    def test_to_dict(self):
        """
        Serialized form lists entries with their coordinates
        """
        data = make_crystal(FieldParams(2), 1, 2, [[1]]).to_dict()
        self.assertEqual(list(data), ["p", "d", "m", "n", "rank", "matrix"])
        self.assertEqual(data["matrix"], [[{"p": 2, "d": 1, "m": 2, "coords": [1]}]])


if __name__ == "__main__":
    unittest.main()
