# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Hodge and Newton polygons, break points and p-ranks.
"""

from .polygon import BreakPoint, Polygon, PolygonKind, break_points, has_break_point, lies_above
from .hodge import hodge_function, hodge_polygon
from .newton import is_topologically_nilpotent, is_unit_root, newton_function, newton_polygon
from .p_rank import fixed_point_dimension, is_divisible_by, p_rank
