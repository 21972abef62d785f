# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Generalized Pauli operators, displacements, Fourier and SUM gates.

Roots of unity are always evaluated as ``exp(2 pi i k / d)`` from an integer
``k`` reduced mod ``d``.
"""

from __future__ import annotations

from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..core import Gate
from ..errors import InvalidParameterError
from .registry import named_gate, register

__all__ = (
    "omega_power",
    "tau_power",
    "pauli_x",
    "pauli_z",
    "DisplacementIndex",
    "displacement",
    "weyl_heisenberg_group",
    "hadamard",
    "identity",
    "sum_gate",
    "q_gate",
    "p_gate",
    "permutation_matrix",
)


def check_dim(d: int) -> int:
    d = int(d)
    if d < 2:
        raise InvalidParameterError(f"qudit dimension must be >= 2, got {d}")
    return d


def check_level(d: int, level: int, label: str = "level") -> int:
    level = int(level)
    if not 0 <= level < d:
        raise InvalidParameterError(f"{label} {level} is outside [0, {d})")
    return level


def omega_power(d: int, k) -> np.ndarray | complex:
    """``omega^k`` with ``omega = exp(2 pi i / d)``; ``k`` may be an integer array."""
    return np.exp(2j * np.pi * (np.mod(k, d)) / d)


def tau_power(d: int, k) -> np.ndarray | complex:
    """``tau^k`` with ``tau = exp((d + 1) pi i / d)``."""
    return np.exp(1j * np.pi * np.mod(np.multiply(k, d + 1), 2 * d) / d)


def permutation_matrix(mapping) -> np.ndarray:
    """Matrix sending basis index ``k`` to ``mapping[k]``."""
    mapping = np.asarray(mapping)
    n = mapping.shape[0]
    matrix = np.zeros((n, n), dtype=np.complex128)
    matrix[mapping, np.arange(n)] = 1.0
    return matrix


@register()
def identity(d: int) -> Gate:
    d = check_dim(d)
    return named_gate("identity", (d,), np.eye(d), d=d)


@register()
def pauli_x(d: int) -> Gate:
    """``X|j> = |j + 1 mod d>``."""
    d = check_dim(d)
    return named_gate("pauli_x", (d,), permutation_matrix((np.arange(d) + 1) % d), d=d)


@register()
def pauli_z(d: int) -> Gate:
    """``Z|j> = omega^j |j>``."""
    d = check_dim(d)
    return named_gate("pauli_z", (d,), np.diag(omega_power(d, np.arange(d))), d=d)


class DisplacementIndex(BaseModel):
    """Label ``(x|z)`` of a displacement operator, reduced mod ``d``."""

    model_config = ConfigDict(frozen=True)

    x: int
    z: int
    d: int

    @model_validator(mode="after")
    def _check_range(self) -> DisplacementIndex:
        check_dim(self.d)
        check_level(self.d, self.x, "x")
        check_level(self.d, self.z, "z")
        return self


def _displacement_matrix(d: int, x: int, z: int) -> np.ndarray:
    shift = permutation_matrix((np.arange(d) + x) % d)
    clock = np.diag(omega_power(d, z * np.arange(d)))
    return tau_power(d, x * z) * (shift @ clock)


def displacement(idx: DisplacementIndex) -> Gate:
    """``D_(x|z) = tau^{xz} X^x Z^z``."""
    return named_gate(
        "displacement",
        (idx.d,),
        _displacement_matrix(idx.d, idx.x, idx.z),
        x=idx.x,
        z=idx.z,
        d=idx.d,
    )


@register("displacement")
def _displacement_builder(x: int, z: int, d: int) -> Gate:
    return displacement(DisplacementIndex(x=x, z=z, d=d))


@lru_cache(maxsize=16)
def weyl_heisenberg_group(d: int) -> Mapping[tuple[int, int], Gate]:
    """All ``d**2`` displacement operators keyed by ``(x, z)``."""
    d = check_dim(d)
    group = {
        (x, z): displacement(DisplacementIndex(x=x, z=z, d=d))
        for x in range(d)
        for z in range(d)
    }
    return MappingProxyType(group)


@register()
def hadamard(d: int) -> Gate:
    """``H|j> = d^{-1/2} sum_i omega^{ij} |i>``."""
    d = check_dim(d)
    k = np.arange(d)
    return named_gate(
        "hadamard", (d,), omega_power(d, np.outer(k, k)) / np.sqrt(d), d=d
    )


@register()
def sum_gate(d: int) -> Gate:
    """``SUM|i, j> = |i, i + j mod d>``."""
    d = check_dim(d)
    i, j = np.divmod(np.arange(d * d), d)
    return named_gate("sum_gate", (d, d), permutation_matrix(i * d + (i + j) % d), d=d)


@register()
def q_gate(d: int, i: int) -> Gate:
    """``Q[i]|j> = omega^{delta_ij} |j>``."""
    d = check_dim(d)
    i = check_level(d, i, "i")
    phases = np.ones(d, dtype=np.complex128)
    phases[i] = omega_power(d, 1)
    return named_gate("q_gate", (d,), np.diag(phases), d=d, i=i)


@register()
def p_gate(d: int, i: int) -> Gate:
    """``P[i]|j> = (-omega^2)^{delta_ij} |j>``."""
    d = check_dim(d)
    i = check_level(d, i, "i")
    phases = np.ones(d, dtype=np.complex128)
    phases[i] = -omega_power(d, 2)
    return named_gate("p_gate", (d,), np.diag(phases), d=d, i=i)
