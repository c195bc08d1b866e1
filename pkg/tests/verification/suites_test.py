# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import unittest

from crystalline.fcrystal import make_rng
from crystalline.strata import verify_step1_identities
from crystalline.verification import (
    DEFAULT_SEED,
    SUITES,
    SuiteResult,
    random_step1_family,
    run_suites,
)


class SuiteResultTest(unittest.TestCase):
    """
    Tests for the bookkeeping of suite checks
    """

    def test_checks(self):
        """
        Failed checks are collected by description
        """
        result = SuiteResult("demo")
        result.check(True, "holds")
        result.check(False, "fails")
        result.raises(ZeroDivisionError, lambda: 1 // 0, "divides by zero")
        result.raises(ZeroDivisionError, lambda: 1 // 1, "does not divide by zero")
        self.assertFalse(result.passed)
        self.assertEqual(
            result.to_dict(),
            {
                "suite": "demo",
                "passed": False,
                "checks": 4,
                "failures": ["fails", "does not divide by zero"],
            },
        )


class SuitesTest(unittest.TestCase):
    """
    Tests for the registry and the fast suites
    """

    def test_registry(self):
        """
        Suites are registered in running order
        """
        self.assertEqual(list(SUITES)[:3], ["wittring", "e_lambda", "worked_example"])
        self.assertEqual(len(SUITES), 12)
        with self.assertRaises(KeyError):
            run_suites(["nonsense"])

    def test_fast_suites(self):
        """
        Ring arithmetic, the standard crystals and the worked example
        """
        seen = []
        results = run_suites(["worked_example", "wittring", "e_lambda"], progress=seen.append)
        self.assertEqual([r.name for r in results], ["worked_example", "wittring", "e_lambda"])
        self.assertEqual(seen, results)
        for result in results:
            self.assertTrue(result.passed, result.failures)
            self.assertGreater(result.checks, 0)

    def test_reproducible(self):
        """
        A seed reproduces the same checks
        """
        first = run_suites(["wittring"], seed=DEFAULT_SEED)[0]
        second = run_suites(["wittring"], seed=DEFAULT_SEED)[0]
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_random_step1_family(self):
        """
        Random upper triangular families satisfy the identities
        """
        first = random_step1_family(make_rng(4), 2, 3, 25)
        second = random_step1_family(make_rng(4), 2, 3, 25)
        self.assertEqual(first, second)
        self.assertTrue(verify_step1_identities(first, (1, 0), 1))
        self.assertTrue(verify_step1_identities(first, (2, 1), 1))


if __name__ == "__main__":
    unittest.main()
