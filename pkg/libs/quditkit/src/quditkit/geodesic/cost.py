# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Penalised control cost and the bound formulas built on it.

Only the metric objects are provided; geodesics themselves are not solved.
"""

from __future__ import annotations

import numpy as np

from ..errors import InvalidParameterError
from .expansion import HamiltonianExpansion, Label, body_count

__all__ = (
    "metric_weight",
    "cost",
    "synthesis_gate_scaling",
    "projection_error_bound",
)


def _check_penalty(p: float) -> float:
    p = float(p)
    if p < 1:
        raise InvalidParameterError(f"penalty p must be >= 1, got {p}")
    return p


def metric_weight(label: Label, p: float) -> float:
    """Diagonal metric entry: 1 for one- and two-body terms, ``p^2`` otherwise."""
    p = _check_penalty(p)
    return 1.0 if body_count(label) <= 2 else p * p


def cost(expansion: HamiltonianExpansion, p: float) -> float:
    """``sqrt(sum_local h^2 + p^2 sum_many-body h^2)``."""
    p = _check_penalty(p)
    total = sum(
        metric_weight(label, p) * h * h for label, h in expansion.coeffs.items()
    )
    return float(np.sqrt(total))


def synthesis_gate_scaling(intervals: int, d: int, n: int) -> int:
    """``N^2 d^4 n^2``: squared inverse error for ``N`` geodesic intervals."""
    return intervals**2 * d**4 * n**2


def projection_error_bound(n: int, distance: float, p: float) -> float:
    """``3^n distance / p`` bound on ``||U - U_P||`` for the projected evolution."""
    p = _check_penalty(p)
    return 3**n * float(distance) / p
