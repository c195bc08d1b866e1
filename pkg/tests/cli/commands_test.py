# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.cli import ExitCode, PrecisionCapReached, escalate, exit_code
from crystalline.shared import (
    CapExceeded,
    DescriptionError,
    InsufficientPrecision,
    NotACrystal,
    NotStabilized,
    PrecisionOverflow,
)


class EscalateTest(unittest.TestCase):
    """
    Tests for precision doubling
    """

    def test_doubling(self):
        """
        The precision doubles until the computation succeeds
        """
        tried = []

        def compute(precision):
            tried.append(precision)
            if precision < 10:
                raise InsufficientPrecision(f"m = {precision}")
            return precision * 2

        self.assertEqual(escalate(compute, 3, 64), (24, 12))
        self.assertEqual(tried, [3, 6, 12])

    def test_cap(self):
        """
        Doubling stops at the cap
        """

        def compute(precision):
            raise InsufficientPrecision(f"m = {precision}")

        with self.assertRaises(PrecisionCapReached):
            escalate(compute, 4, 15)

    def test_not_a_crystal(self):
        """
        A determinant that vanishes at every precision up to the cap is final
        """
        tried = []

        def compute(precision):
            tried.append(precision)
            raise NotACrystal("det = 0")

        with self.assertRaises(NotACrystal):
            escalate(compute, 4, 64)
        self.assertEqual(tried, [4, 8, 16, 32, 64])

    def test_truncated_determinant(self):
        """
        A determinant that vanishes modulo p^m only is retried
        """

        def compute(precision):
            if precision < 8:
                raise NotACrystal(f"det = 0 mod p^{precision}")
            return precision

        self.assertEqual(escalate(compute, 2, 64), (8, 8))

    def test_overflow_after_not_a_crystal(self):
        """
        The modulus cap ends the doubling with the last NotACrystal
        """

        def compute(precision):
            if precision > 16:
                raise PrecisionOverflow(f"m = {precision}")
            raise NotACrystal("det = 0")

        with self.assertRaises(NotACrystal):
            escalate(compute, 4, 64)

        def overflow(precision):
            raise PrecisionOverflow(f"m = {precision}")

        with self.assertRaises(PrecisionOverflow):
            escalate(overflow, 4, 64)


class ExitCodeTest(unittest.TestCase):
    """
    Tests for the mapping of errors to exit codes
    """

    def test_mapping(self):
        """
        Every error class has its exit code
        """
        self.assertEqual(exit_code(NotACrystal("")), ExitCode.NOT_A_CRYSTAL)
        self.assertEqual(exit_code(InsufficientPrecision("")), ExitCode.PRECISION_EXHAUSTED)
        self.assertEqual(exit_code(PrecisionCapReached("")), ExitCode.PRECISION_EXHAUSTED)
        self.assertEqual(exit_code(PrecisionOverflow("")), ExitCode.PRECISION_EXHAUSTED)
        self.assertEqual(exit_code(CapExceeded("")), ExitCode.CAP_EXCEEDED)
        self.assertEqual(exit_code(NotStabilized("")), ExitCode.CAP_EXCEEDED)
        self.assertEqual(exit_code(DescriptionError("")), ExitCode.DESCRIPTION_ERROR)
        self.assertEqual(exit_code(FileNotFoundError("x")), ExitCode.DESCRIPTION_ERROR)


if __name__ == "__main__":
    unittest.main()
