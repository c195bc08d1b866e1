# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Families of crystals over affine space and their stratifications.
"""

from .closed_points import ClosedPoint, closed_points, enumerate_closed_points
from .family import (
    FamilyCrystal,
    TeichmullerPolynomial,
    constant_family,
    evaluate_at,
    example_family,
)
from .scan import (
    PointRecord,
    StratumReport,
    check_galois_invariance,
    check_p_rank_break_points,
    check_specialization,
    evaluate_point,
    scan,
    specialization_graph,
    specialization_stratum,
)
from .step1 import (
    Step1Record,
    Step1Report,
    nu1_ordinates,
    nu2_ordinates,
    step1_report,
    verify_step1_identities,
)
from .svg import polygon_svg
