# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Expansion of Hermitian operators in tensor products of Gell-Mann matrices.

A term is labelled by one integer per site: 0 for the identity, ``k >= 1`` for
Gell-Mann element ``k``. Coefficients are taken against the un-normalised
products, ``h = tr(s H) / tr(s^2)``, so that ``H = h_0 I + sum h_s s``.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from ..config import UNITARY_TOL
from ..errors import DimensionError, NumericValidationError
from .gellmann import basis_with_identity

__all__ = (
    "Label",
    "HamiltonianExpansion",
    "body_count",
    "body_support",
    "expand",
    "reconstruct",
    "project_local",
    "body_weights",
)

Label = tuple[int, ...]


def body_support(label: Label) -> tuple[int, ...]:
    """Sites carrying a non-identity factor."""
    return tuple(site for site, k in enumerate(label) if k)


def body_count(label: Label) -> int:
    return len(body_support(label))


class HamiltonianExpansion(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    n: int
    coeffs: dict[Label, float]
    identity: float = 0.0

    @field_validator("coeffs", mode="before")
    def _as_labels(cls, value: Mapping) -> dict[Label, float]:
        return {tuple(int(k) for k in label): float(h) for label, h in value.items()}

    def nonzero(self, atol: float = 1e-12) -> dict[Label, float]:
        return {label: h for label, h in self.coeffs.items() if abs(h) > atol}

    def max_body(self, atol: float = 1e-12) -> int:
        return max((body_count(label) for label in self.nonzero(atol)), default=0)


def _product(d: int, label: Label) -> np.ndarray:
    basis = basis_with_identity(d)
    return reduce(np.kron, (basis[k] for k in label))


def expand(h: np.ndarray, d: int, n: int) -> HamiltonianExpansion:
    """Coefficients of every non-identity product term of ``h``."""
    h = np.asarray(h, dtype=np.complex128)
    size = d**n
    if h.shape != (size, size):
        raise DimensionError(f"expected a {size}x{size} matrix, got {h.shape}")
    if not np.allclose(h, h.conj().T, atol=UNITARY_TOL):
        raise NumericValidationError("expand needs a Hermitian matrix")

    basis = basis_with_identity(d)
    norms = [float(np.trace(b @ b).real) for b in basis]
    coeffs: dict[Label, float] = {}
    for label in itertools.product(range(len(basis)), repeat=n):
        if not any(label):
            continue
        sigma = _product(d, label)
        weight = float(np.prod([norms[k] for k in label]))
        coeffs[label] = float(np.trace(sigma @ h).real) / weight
    identity = float(np.trace(h).real) / size
    return HamiltonianExpansion(d=d, n=n, coeffs=coeffs, identity=identity)


def reconstruct(expansion: HamiltonianExpansion) -> np.ndarray:
    size = expansion.d**expansion.n
    out = expansion.identity * np.eye(size, dtype=np.complex128)
    for label, h in expansion.coeffs.items():
        if h:
            out += h * _product(expansion.d, label)
    return out


def project_local(expansion: HamiltonianExpansion) -> HamiltonianExpansion:
    """Drop every term acting on three or more sites."""
    coeffs = {
        label: (h if body_count(label) <= 2 else 0.0)
        for label, h in expansion.coeffs.items()
    }
    return expansion.model_copy(update={"coeffs": coeffs})


def body_weights(expansion: HamiltonianExpansion) -> dict[int, float]:
    """Squared coefficient mass per body count."""
    weights: dict[int, float] = {}
    for label, h in expansion.coeffs.items():
        body = body_count(label)
        weights[body] = weights.get(body, 0.0) + h * h
    return dict(sorted(weights.items()))
