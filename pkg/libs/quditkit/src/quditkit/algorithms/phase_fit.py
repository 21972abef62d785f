# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Qutrit phase read-out statistics and the least-squares phase estimator.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.optimize import minimize_scalar

from ..errors import InvalidParameterError, NumericValidationError

__all__ = (
    "GRID_POINTS",
    "MEASURED_COUNTS",
    "REFERENCE_ESTIMATES",
    "TRUE_PHASES",
    "PhaseFitResult",
    "control_probability",
    "phase_fit",
)

GRID_POINTS = 1 << 17

# normalised outcome frequencies (E0, E1, E2) per unitary and eigenstate
MEASURED_COUNTS: dict[str, tuple[float, float, float]] = {
    "U1|0>": (0.9948, 0.0023, 0.0029),
    "U1|1>": (0.0101, 0.9805, 0.0094),
    "U1|2>": (0.0122, 0.0120, 0.9758),
    "U2|0>": (0.878, 0.032, 0.090),
    "U2|1>": (0.316, 0.530, 0.154),
    "U2|2>": (0.143, 0.318, 0.539),
}

# reference estimates for the counts above, in units of pi
REFERENCE_ESTIMATES: dict[str, float] = {
    "U1|0>": 1.972,
    "U1|1>": 0.612,
    "U1|2>": 1.394,
    "U2|0>": 1.859,
    "U2|1>": 0.377,
    "U2|2>": 1.045,
}

# in units of pi
TRUE_PHASES: dict[str, float] = {
    "U1|0>": 0.0,
    "U1|1>": 2 / 3,
    "U1|2>": 4 / 3,
    "U2|0>": 0.0,
    "U2|1>": 0.3511,
    "U2|2>": 1.045,
}


class PhaseFitResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    phi_hat: float
    mse: float
    method: dict[str, float | int | str]

    @field_validator("mse")
    def _non_negative(cls, value: float) -> float:
        return max(value, 0.0)

    @property
    def phi_hat_over_pi(self) -> float:
        return self.phi_hat / np.pi


def control_probability(n, phi):
    """``|1 + e^{i a} + e^{2 i a}|^2 / 9`` with ``a = phi - 2 pi n / 3``.

    Vectorised over ``n`` and ``phi``.
    """
    n_arr = np.asarray(n)
    if np.any((n_arr < 0) | (n_arr > 2)):
        raise InvalidParameterError(f"outcome n must be 0, 1 or 2, got {n}")
    alpha = np.asarray(phi) - 2 * np.pi * n_arr / 3
    value = (3 + 4 * np.cos(alpha) + 2 * np.cos(2 * alpha)) / 9
    return float(value) if np.ndim(value) == 0 else value


def _mse(phi, counts: np.ndarray):
    phi = np.atleast_1d(phi)[:, None]
    model = control_probability(np.arange(3)[None, :], phi)
    return np.mean((counts[None, :] - model) ** 2, axis=1)


def phase_fit(
    counts: Sequence[float], grid_points: int = GRID_POINTS
) -> PhaseFitResult:
    """Phase minimising the mean-square error to ``C(n, phi)``.

    A uniform grid picks the basin (first minimum wins ties) and a
    golden-section search refines it.
    """
    counts = np.asarray(counts, dtype=np.float64)
    if counts.shape != (3,):
        raise InvalidParameterError(f"expected three counts, got shape {counts.shape}")
    if np.any(counts < 0):
        raise InvalidParameterError("counts must be non-negative")
    total = counts.sum()
    if total == 0:
        raise NumericValidationError("counts are all zero")
    counts = counts / total

    grid = np.arange(grid_points) * (2 * np.pi / grid_points)
    errors = _mse(grid, counts)
    best = int(np.argmin(errors))
    step = 2 * np.pi / grid_points
    phi, refined = grid[best], "grid"
    try:
        res = minimize_scalar(
            lambda x: float(_mse(x, counts)[0]),
            bracket=(phi - step, phi, phi + step),
            method="golden",
            options={"xtol": 1e-12},
        )
        if res.fun <= errors[best]:
            phi, refined = float(res.x), "golden"
    except (RuntimeError, ValueError):
        # flat neighbourhood: the grid point already is the minimum
        pass

    phi = float(np.mod(phi, 2 * np.pi))
    if 2 * np.pi - phi < 1e-9:
        phi = 0.0
    return PhaseFitResult(
        phi_hat=phi,
        mse=float(_mse(phi, counts)[0]),
        method={"grid_points": grid_points, "refinement": refined},
    )
