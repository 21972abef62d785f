# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Two-level rotations that carry a vector onto the top basis level.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..config import NORM_TOL
from ..errors import DimensionError, NumericValidationError
from ..gates import rot_x

__all__ = ("RotationParams", "decompose_ud", "rotation_product")

# amplitudes below this are treated as exact zeros
_ZERO = 1e-14


class RotationParams(BaseModel):
    """Arguments of one ``rot_x(d, l, x, y)``."""

    model_config = ConfigDict(frozen=True)

    l: int
    x: complex
    y: complex


def decompose_ud(alpha: Sequence[complex], d: int) -> list[RotationParams]:
    """Rotations sending ``alpha`` to ``|d-1>``, in application order.

    Step ``l`` zeroes level ``l - 1`` into level ``l``. It is skipped when level
    ``l - 1`` already holds no amplitude.
    """
    v = np.array(alpha, dtype=np.complex128)
    if v.shape != (d,):
        raise DimensionError(f"expected a length-{d} vector, got shape {v.shape}")
    norm = float(np.vdot(v, v).real)
    if abs(norm - 1.0) > NORM_TOL:
        raise NumericValidationError(f"vector norm {norm!r} is not 1")

    steps: list[RotationParams] = []
    for l in range(1, d):
        x, y = v[l], v[l - 1]
        if abs(y) < _ZERO:
            continue
        r = np.hypot(abs(x), abs(y))
        v[l - 1], v[l] = 0.0, r
        steps.append(RotationParams(l=l, x=complex(x), y=complex(y)))
    return steps


def rotation_product(steps: Sequence[RotationParams], d: int) -> np.ndarray:
    """Matrix of the rotations applied in order."""
    out = np.eye(d, dtype=np.complex128)
    for step in steps:
        out = rot_x(d, step.l, step.x, step.y).matrix @ out
    return out
