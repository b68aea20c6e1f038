"""Enumeration caps and run configuration."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .errors import StrataError

SUBGROUP_CAP = 40320  # 8!
DOUBLE_COSET_CAP = 10**6
COMPLEX_MAX_N = 6
BRUTE_FORCE_MAX_N = 8

CAP_ENV_VAR = "BARCODE_STRATA_CAP"


def _env_cap() -> int | None:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise StrataError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise StrataError(f"{CAP_ENV_VAR} must be >= 1, got {value}")
    return value


def subgroup_cap() -> int:
    return _env_cap() or SUBGROUP_CAP


def double_coset_cap() -> int:
    return _env_cap() or DOUBLE_COSET_CAP


@dataclass
class Config:
    """Options shared by CLI subcommands.

    ``tol`` merges coordinates closer than ``tol`` (single linkage) before
    tie detection; 0 means exact float equality.
    """
    tol: float = 0.0
    subgroup_cap: int = field(default_factory=subgroup_cap)
    double_coset_cap: int = field(default_factory=double_coset_cap)
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self):
        if not self.tol >= 0:
            raise StrataError(f"tolerance must be >= 0, got {self.tol}")
        if self.subgroup_cap < 1 or self.double_coset_cap < 1:
            raise StrataError("enumeration caps must be >= 1")
        if self.output_format not in ("json", "csv"):
            raise StrataError(f"unknown output format {self.output_format!r}")
