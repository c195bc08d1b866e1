# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
F^n-crystals over finite fields at finite precision.
"""

from .crystal import CrystalMeta, FCrystal, entry_field_degree, make_crystal
from .constructions import (
    base_change,
    change_of_basis,
    direct_sum,
    exterior_power,
    iterate,
    iterate_matrix,
    lift_precision,
    standard_E,
    tensor_power,
    tensor_product,
    truncate,
    unit_crystal,
)
from .random_crystals import (
    draw,
    make_rng,
    oracle_crystal,
    random_crystal,
    random_element,
    random_invertible,
    random_slopes,
    random_unit,
    slope_multiset,
)
