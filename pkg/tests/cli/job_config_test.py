# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import pathlib
import unittest

from pydantic import ValidationError

from crystalline.cli import Command, JobConfig
from crystalline.verification import DEFAULT_SEED


class JobConfigTest(unittest.TestCase):
    """
    Tests for the validated command line configuration
    """

    def test_defaults(self):
        """
        Defaults of a polygon job
        """
        config = JobConfig(command="polygon", input="crystal.json")
        self.assertEqual(config.command, Command.POLYGON)
        self.assertEqual(config.input, pathlib.Path("crystal.json"))
        self.assertEqual(config.max_degree, 2)
        self.assertEqual(config.precision_cap, 64)
        self.assertEqual(config.seed, DEFAULT_SEED)
        self.assertIsNone(config.precision)

    def test_break_point(self):
        """
        --verify-step1 takes a,b
        """
        config = JobConfig(command="strata", input="family.json", verify_step1="1,0")
        self.assertEqual(config.verify_step1, (1, 0))
        with self.assertRaises(ValidationError):
            JobConfig(command="strata", input="family.json", verify_step1="1")
        with self.assertRaises(ValidationError):
            JobConfig(command="strata", input="family.json", verify_step1="a,b")

    def test_positive(self):
        """
        Degrees, precisions and job counts are positive
        """
        for field in ("max_degree", "precision", "precision_cap", "jobs"):
            with self.assertRaises(ValidationError):
                JobConfig(command="polygon", input="crystal.json", **{field: 0})

    def test_consistent(self):
        """
        The cap must allow the starting precision, inputs are required
        """
        with self.assertRaises(ValidationError):
            JobConfig(command="polygon", input="crystal.json", precision=8, precision_cap=4)
        with self.assertRaises(ValidationError):
            JobConfig(command="strata")
        self.assertIsNone(JobConfig(command="verify").input)

    def test_suites(self):
        """
        Suite names are checked against the registry
        """
        self.assertEqual(JobConfig(command="verify", suite=["mazur"]).suite, ["mazur"])
        with self.assertRaises(ValidationError):
            JobConfig(command="verify", suite=["nonsense"])

    def test_frozen(self):
        """
        Unknown fields are refused and the config is immutable
        """
        with self.assertRaises(ValidationError):
            JobConfig(command="verify", colour=True)
        config = JobConfig(command="verify")
        with self.assertRaises(ValidationError):
            config.seed = 1


if __name__ == "__main__":
    unittest.main()
