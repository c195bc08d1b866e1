# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

import pathlib
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from crystalline.shared.caps import ResourceCaps, active_caps
from crystalline.verification import DEFAULT_SEED, SUITES


class Command(Enum):
    """Sub-commands of the ``crystalline`` executable."""

    #: Polygons, break points and p-rank of one crystal.
    POLYGON = "polygon"
    #: Newton polygon strata of a family.
    STRATA = "strata"
    #: Artin-Schreier dimension of a system, or strata of a family of systems.
    ASDIM = "asdim"
    #: Built-in verification suites.
    VERIFY = "verify"


class JobConfig(BaseModel):
    """One invocation of the command line, validated."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    #: Description file; required for every command but verify.
    input: pathlib.Path | None = None
    #: JSON destination; None writes to stdout.
    output: pathlib.Path | None = None
    #: D, the largest degree of the sampled closed points.
    max_degree: int = 2
    #: Starting precision m; None takes m from the description.
    precision: int | None = None
    #: Escalation stops before the precision would exceed this.
    precision_cap: int = 64
    #: Worker threads for point scans.
    jobs: int = 1
    seed: int = DEFAULT_SEED
    #: SVG destination of the observed Newton polygons.
    plot: pathlib.Path | None = None
    #: Break point (a, b) for the identity check of strata.
    verify_step1: tuple[int, int] | None = None
    cross_check: bool = False
    suite: list[str] = Field(default_factory=list)
    list_suites: bool = False
    verbose: bool = False
    caps: ResourceCaps = Field(default_factory=active_caps)

    @field_validator("verify_step1", mode="before")
    @classmethod
    def _break_point(cls, value: object) -> object:
        if isinstance(value, str):
            parts = value.split(",")
            if len(parts) != 2:
                raise ValueError(f"expected a,b, got {value!r}")
            return tuple(int(part) for part in parts)
        return value

    @field_validator("suite")
    @classmethod
    def _known_suites(cls, value: list[str]) -> list[str]:
        unknown = [name for name in value if name not in SUITES]
        if unknown:
            raise ValueError(f"unknown suites {unknown}, choose from {list(SUITES)}")
        return value

    @field_validator("max_degree", "precision", "precision_cap", "jobs")
    @classmethod
    def _positive(cls, value: int | None) -> int | None:
        if value is not None and value <= 0:
            raise ValueError(f"must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "JobConfig":
        if self.precision is not None and self.precision_cap < self.precision:
            raise ValueError(
                f"precision cap {self.precision_cap} is below the precision {self.precision}"
            )
        if self.command != Command.VERIFY and self.input is None:
            raise ValueError(f"{self.command.value} needs an input file")
        return self
