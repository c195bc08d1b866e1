# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Types shared by all sub-packages: the error hierarchy and the resource caps.
"""

from .errors import (
    CapExceeded,
    CrystallineError,
    DescriptionError,
    IndexOutOfRange,
    InsufficientPrecision,
    InvalidSlope,
    NonUnit,
    NotACrystal,
    NotASubfield,
    NotStabilized,
    ParamMismatch,
    PrecisionIncrease,
    PrecisionOverflow,
    RankMismatch,
)
from .caps import ResourceCaps, active_caps, reset_caps
