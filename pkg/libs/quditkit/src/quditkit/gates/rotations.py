# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Single-qudit rotations, level permutations and raw unitaries.
"""

from __future__ import annotations

from typing import Any, Sequence

import numpy as np

from ..core import Gate
from ..errors import InvalidParameterError
from .pauli import check_dim, check_level, permutation_matrix
from .registry import as_complex, decode_matrix, encode_complex, named_gate, register

__all__ = (
    "rot_x",
    "phase_zd",
    "x_m",
    "level_swap",
    "qubit_hadamard",
    "rz_fourier",
    "unitary",
)


@register()
def rot_x(d: int, l: int, x: Any, y: Any) -> Gate:
    """Two-level rotation on levels ``l - 1`` and ``l``.

    The block is ``[[x, -y], [conj(y), conj(x)]] / sqrt(|x|^2 + |y|^2)``.
    """
    d = check_dim(d)
    l = int(l)
    if not 1 <= l <= d - 1:
        raise InvalidParameterError(f"rot_x level l={l} is outside [1, {d - 1}]")
    x, y = as_complex(x), as_complex(y)
    norm = np.hypot(abs(x), abs(y))
    if norm == 0:
        raise InvalidParameterError("rot_x needs (x, y) != (0, 0)")
    a, b = x / norm, y / norm
    matrix = np.eye(d, dtype=np.complex128)
    matrix[l - 1 : l + 1, l - 1 : l + 1] = [[a, -b], [b.conjugate(), a.conjugate()]]
    return named_gate(
        "rot_x", (d,), matrix, d=d, l=l, x=encode_complex(x), y=encode_complex(y)
    )


@register()
def phase_zd(d: int, theta: float) -> Gate:
    """``diag(1, ..., 1, exp(2 i theta))``: only ``|d-1>`` picks up a phase."""
    d = check_dim(d)
    theta = float(theta)
    phases = np.ones(d, dtype=np.complex128)
    phases[-1] = np.exp(2j * theta)
    return named_gate("phase_zd", (d,), np.diag(phases), d=d, theta=theta)


@register()
def level_swap(d: int, p: int, q: int) -> Gate:
    """Transposition ``|p> <-> |q>`` fixing every other level."""
    d = check_dim(d)
    p, q = check_level(d, p, "p"), check_level(d, q, "q")
    mapping = np.arange(d)
    mapping[[p, q]] = mapping[[q, p]]
    return named_gate("level_swap", (d,), permutation_matrix(mapping), d=d, p=p, q=q)


@register()
def x_m(d: int, m: int) -> Gate:
    """``X_m|0> = |m>``, ``X_m|m> = |0>``."""
    d = check_dim(d)
    m = int(m)
    if not 1 <= m < d:
        raise InvalidParameterError(f"x_m level m={m} is outside [1, {d})")
    mapping = np.arange(d)
    mapping[[0, m]] = [m, 0]
    return named_gate("x_m", (d,), permutation_matrix(mapping), d=d, m=m)


@register()
def qubit_hadamard(d: int) -> Gate:
    """Hadamard on levels 0 and 1, identity on the rest."""
    d = check_dim(d)
    matrix = np.eye(d, dtype=np.complex128)
    matrix[:2, :2] = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    return named_gate("qubit_hadamard", (d,), matrix, d=d)


@register()
def rz_fourier(d: int, k: int) -> Gate:
    """QFT phase gate ``R^d_k|j> = exp(2 pi i j / d^k) |j>``."""
    d = check_dim(d)
    k = int(k)
    if k < 1:
        raise InvalidParameterError(f"rz_fourier needs k >= 1, got {k}")
    j = np.arange(d)
    return named_gate(
        "rz_fourier", (d,), np.diag(np.exp(2j * np.pi * j / d**k)), d=d, k=k
    )


@register()
def unitary(matrix: Any, signature: Sequence[int] | None = None) -> Gate:
    """Raw gate; ``matrix`` may be an array or nested ``[re, im]`` pairs."""
    if isinstance(matrix, np.ndarray) and np.iscomplexobj(matrix):
        values = matrix
    else:
        arr = np.asarray(matrix)
        values = decode_matrix(matrix) if arr.ndim == 3 else arr
    return Gate.from_matrix(values, signature)
