# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
The ``crystalline`` command line.
"""

from .job_config import Command, JobConfig
from .commands import (
    ExitCode,
    Outcome,
    PrecisionCapReached,
    cmd_asdim,
    cmd_polygon,
    cmd_strata,
    cmd_verify,
    escalate,
    exit_code,
    run,
)
