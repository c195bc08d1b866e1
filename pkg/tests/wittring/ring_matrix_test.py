# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.shared import NonUnit
from crystalline.wittring import (
    FieldParams,
    FiniteFieldElement,
    RingMatrix,
    galois_ring,
    stable_rank,
    to_galois,
)


class RingMatrixTest(unittest.TestCase):
    """
    Tests for matrices over Z/p^m and GR(p^m, d)
    """

    def setUp(self):
        self.ring = galois_ring(FieldParams(2), 5)

    def test_charpoly(self):
        """
        det(X - A) of [[1, 2], [3, 4]] is X^2 - 5X - 2
        """
        matrix = RingMatrix(self.ring, [[1, 2], [3, 4]])
        self.assertEqual(matrix.charpoly(), [1, -5, -2])
        self.assertEqual(matrix.det(), -2)

    def test_charpoly_zero_divisors(self):
        """
        Berkowitz works although p is a zero divisor
        """
        matrix = RingMatrix(self.ring, [[0, 2, 0], [0, 0, 2], [4, 0, 0]])
        self.assertEqual(matrix.charpoly(), [1, 0, 0, -16])
        self.assertEqual(matrix.det().valuation(), 4)

    def test_inverse(self):
        """
        Gauss-Jordan with unit pivots
        """
        matrix = RingMatrix(self.ring, [[2, 1], [1, 0]])
        self.assertEqual(matrix @ matrix.inverse(), RingMatrix.identity(self.ring, 2))
        with self.assertRaises(NonUnit):
            RingMatrix(self.ring, [[2, 0], [0, 1]]).inverse()

    def test_elementary_divisors(self):
        """
        Smith normal form exponents are invariant under unimodular changes
        """
        diagonal = RingMatrix.diagonal(self.ring, [1, 4, 2])
        basis = RingMatrix(self.ring, [[1, 1, 0], [0, 1, 1], [1, 0, 2]])
        self.assertEqual(diagonal.elementary_divisor_valuations(), [0, 1, 2])
        self.assertEqual((basis @ diagonal).elementary_divisor_valuations(), [0, 1, 2])
        self.assertEqual((basis @ diagonal).det_valuation(), 3)

    def test_undetermined_divisor(self):
        """
        A divisor vanishing modulo p^m is reported as m
        """
        matrix = RingMatrix.diagonal(self.ring, [1, 0])
        self.assertEqual(matrix.elementary_divisor_valuations(), [0, 5])

    def test_compound(self):
        """
        The second compound of a 3 x 3 diagonal matrix holds the pairwise products
        """
        matrix = RingMatrix.diagonal(self.ring, [1, 2, 4])
        self.assertEqual(matrix.compound(2), RingMatrix.diagonal(self.ring, [2, 4, 8]))
        self.assertEqual(matrix.compound(0), RingMatrix(self.ring, [[1]]))

    def test_kron(self):
        """
        Kronecker products of diagonal matrices
        """
        a = RingMatrix.diagonal(self.ring, [1, 2])
        b = RingMatrix.diagonal(self.ring, [1, 4])
        self.assertEqual(a.kron(b), RingMatrix.diagonal(self.ring, [1, 4, 2, 8]))

    def test_frobenius(self):
        """
        Frobenius acts entrywise
        """
        ring = galois_ring(FieldParams(2, 2), 2)
        u = ring.generator
        matrix = RingMatrix(ring, [[u, 0], [1, u * u]])
        self.assertEqual(matrix.frobenius(), RingMatrix(ring, [[u * u, 0], [1, u]]))
        self.assertEqual(matrix.frobenius(2), matrix)


class FieldLinalgTest(unittest.TestCase):
    """
    Tests for the stable rank of p-linear maps
    """

    def test_nilpotent(self):
        """
        A nilpotent matrix has stable rank 0
        """
        field = FieldParams(3)
        rows = [[FiniteFieldElement(field, c) for c in row] for row in [[0, 1], [0, 0]]]
        self.assertEqual(stable_rank(field, to_galois(field, rows), 1, 2), 0)

    def test_twisted(self):
        """
        [[0, u], [1, 0]] over F_4 is bijective
        """
        field = FieldParams(2, 2)
        zero, one = FiniteFieldElement(field, 0), FiniteFieldElement(field, 1)
        u = FiniteFieldElement(field, [0, 1])
        array = to_galois(field, [[zero, u], [one, zero]])
        self.assertEqual(stable_rank(field, array, 1, 4), 2)


if __name__ == "__main__":
    unittest.main()
