# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Tolerances, limits and run configuration.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, field_validator

__all__ = (
    "UNITARY_TOL",
    "NORM_TOL",
    "RECONSTRUCTION_TOL",
    "MAX_TOTAL_DIM",
    "DEFAULT_SEED",
    "SEED_ENV",
    "LOG_LEVEL_ENV",
    "RunConfig",
)

# algebraic identities (unitarity, norm preservation, gate equalities)
UNITARY_TOL = 1e-10
NORM_TOL = 1e-10

# compiled circuits accumulate rounding over up to ~1e4 gate products
RECONSTRUCTION_TOL = 1e-8

# largest amplitude vector a Register may describe
MAX_TOTAL_DIM = 1 << 28

DEFAULT_SEED = 0
SEED_ENV = "QUDITKIT_SEED"
LOG_LEVEL_ENV = "QUDITKIT_LOG_LEVEL"


class RunConfig(BaseModel):
    """Inputs of the ``run`` subcommand."""

    model_config = ConfigDict(frozen=True)

    circuit: Path
    digits: tuple[int, ...] | None = None
    shots: int = 0
    seed: int = DEFAULT_SEED
    output_format: Literal["json", "csv"] = "json"

    @field_validator("shots")
    def _validate_shots(cls, value: int) -> int:
        if value < 0:
            raise ValueError("shots must be >= 0 (0 means exact amplitudes)")
        return value
