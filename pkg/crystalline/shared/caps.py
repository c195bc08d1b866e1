# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Configurable resource caps.

The caps keep every computation at desk scale. Defaults can be overridden
through the ``CRYSTALLINE_CAPS`` environment variable, either as a JSON object
(``{"max_rank": 6}``) or as comma-separated pairs (``max_rank=6,max_points=1000``).
"""

import json
import os
import threading

from pydantic import BaseModel, ConfigDict, field_validator

from .errors import CapExceeded

#: Name of the environment variable read by :meth:`ResourceCaps.from_env`.
CAPS_ENV_VAR = "CRYSTALLINE_CAPS"


class ResourceCaps(BaseModel):
    """Upper bounds enforced by the library."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    #: Largest rank of an input crystal or family.
    max_rank: int = 8
    #: Largest rank of a derived crystal (exterior and tensor powers), C(8,4).
    max_derived_rank: int = 70
    #: Exclusive bound on p^m.
    max_modulus: int = 2**63
    #: Largest number of field tuples enumerated by a point scan.
    max_points: int = 2**16
    #: Largest number of family variables.
    max_variables: int = 2
    #: Largest total degree of a family entry.
    max_entry_degree: int = 16
    #: Largest number of vectors enumerated by the Artin-Schreier oracle.
    max_brute_force: int = 2**16
    #: Largest F_p-dimension of the linear system x - A x^[p] the oracle solves.
    max_linear_dimension: int = 256

    @field_validator("*")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"Resource caps must be positive, got {value}")
        return value

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> "ResourceCaps":
        """
        Reads the caps from the environment.

        :param environ: Mapping to read from, defaults to os.environ.
        :type environ: dict[str, str] | None
        :return: Defaults overridden by the environment variable, if set.
        :rtype: ResourceCaps
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(CAPS_ENV_VAR, "").strip()
        if not raw:
            return cls()
        if raw.startswith("{"):
            return cls(**json.loads(raw))
        values: dict[str, int] = {}
        for pair in raw.split(","):
            if not pair.strip():
                continue
            key, _, value = pair.partition("=")
            values[key.strip()] = int(value.strip())
        return cls(**values)

    def check(self, name: str, value: int) -> None:
        """
        Raises CapExceeded if value is larger than the cap called name.

        :param name: Field name of the cap, e.g. "max_rank".
        :type name: str
        :param value: The requested size.
        :type value: int
        """
        cap = getattr(self, name)
        if value > cap:
            raise CapExceeded(f"{name} is {cap}, requested {value}")


_caps: ResourceCaps | None = None
_caps_lock = threading.Lock()


def active_caps() -> ResourceCaps:
    """
    Returns the process-wide caps, reading the environment on first use.

    :return: The active resource caps.
    :rtype: ResourceCaps
    """
    global _caps
    if _caps is None:
        with _caps_lock:
            if _caps is None:
                _caps = ResourceCaps.from_env()
    return _caps


def reset_caps(caps: ResourceCaps | None = None) -> None:
    """
    Replaces the process-wide caps. None re-reads the environment on next use.

    :param caps: The new caps.
    :type caps: ResourceCaps | None
    """
    global _caps
    with _caps_lock:
        _caps = caps
