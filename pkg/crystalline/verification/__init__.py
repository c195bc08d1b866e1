# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Seeded verification suites, runnable through ``crystalline verify``.
"""

from .suites import DEFAULT_SEED, SUITES, SuiteResult, random_step1_family, run_suites
