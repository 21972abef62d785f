# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Comparisons: density-matrix fidelity and equality up to global phase.
"""

from __future__ import annotations

import numpy as np

from ..config import UNITARY_TOL
from ..errors import DimensionError, NumericValidationError
from .gate import Gate

__all__ = ("fidelity", "equal_up_to_global_phase", "global_phase_distance")


def _as_matrix(value: Gate | np.ndarray) -> np.ndarray:
    if isinstance(value, Gate):
        return value.matrix
    return np.asarray(value, dtype=np.complex128)


def _check_density(rho: np.ndarray, label: str) -> None:
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DimensionError(f"{label} must be square, got shape {rho.shape}")
    if not np.allclose(rho, rho.conj().T, atol=UNITARY_TOL):
        raise NumericValidationError(f"{label} is not Hermitian")
    if np.linalg.eigvalsh(rho).min() < -1e-9:
        raise NumericValidationError(f"{label} is not positive semidefinite")


def fidelity(rho_th: np.ndarray, rho_expt: np.ndarray) -> float:
    """Normalised Hilbert-Schmidt overlap of two density matrices.

    ``tr(rho_th† rho_expt) / sqrt(tr(rho_th† rho_th) tr(rho_expt† rho_expt))``
    """
    rho_th = np.asarray(rho_th, dtype=np.complex128)
    rho_expt = np.asarray(rho_expt, dtype=np.complex128)
    if rho_th.shape != rho_expt.shape:
        raise DimensionError(
            f"density matrices differ in shape: {rho_th.shape} vs {rho_expt.shape}"
        )
    _check_density(rho_th, "rho_th")
    _check_density(rho_expt, "rho_expt")
    norm_th = np.sqrt(np.trace(rho_th.conj().T @ rho_th).real)
    norm_expt = np.sqrt(np.trace(rho_expt.conj().T @ rho_expt).real)
    if norm_th == 0 or norm_expt == 0:
        raise NumericValidationError("fidelity is undefined for a zero matrix")
    overlap = np.trace(rho_th.conj().T @ rho_expt).real
    return float(overlap / (norm_th * norm_expt))


def equal_up_to_global_phase(
    a: Gate | np.ndarray, b: Gate | np.ndarray, tol: float = 1e-8
) -> bool:
    """True iff ``|tr(A† B)| / size >= 1 - tol``."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare shapes {a.shape} and {b.shape}")
    overlap = abs(np.trace(a.conj().T @ b)) / a.shape[0]
    return bool(overlap >= 1.0 - tol)


def global_phase_distance(a: Gate | np.ndarray, b: Gate | np.ndarray) -> float:
    """Spectral-norm distance ``||A - e^{i phi} B||`` with ``phi = arg tr(B† A)``."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot compare shapes {a.shape} and {b.shape}")
    tr = np.trace(b.conj().T @ a)
    phase = np.exp(1j * np.angle(tr)) if abs(tr) > 0 else 1.0
    return float(np.linalg.norm(a - phase * b, ord=2))
