# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Artin-Schreier systems x = A x^[p], their stratification and the attached
crystals whose p-rank equals the solution dimension.
"""

from .instance import (
    ASInstance,
    as_dimension,
    brute_force_as_dimension,
    is_fp_linear,
    solution_count,
    solution_space,
)
from .corollary3 import corollary3_crystal, corollary3_family, lift_matrix
from .stratify import ASFamily, ASRecord, ArtinSchreierReport, as_stratify
