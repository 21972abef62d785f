# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Quantum Fourier transform over ``n`` qudits of dimension ``d``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..core import Circuit, Gate, Register
from ..errors import InvalidParameterError
from ..gates import hadamard, mvcg, rz_fourier, swap_gate
from ..gates.pauli import check_dim

__all__ = ("dft_matrix", "qft_steps", "qft_circuit")


def dft_matrix(size: int) -> np.ndarray:
    """``F[k, j] = exp(2 pi i j k / size) / sqrt(size)``."""
    k = np.arange(size)
    return np.exp(2j * np.pi * np.mod(np.outer(k, k), size) / size) / np.sqrt(size)


def _controlled_rotation(d: int, k: int) -> Gate:
    """Control value ``j`` applies ``R^d_k`` ``j`` times to the target."""
    r = rz_fourier(d, k)
    return mvcg([r.power(j) for j in range(d)])


def qft_steps(d: int, sites: Sequence[int]) -> list[tuple[Gate, tuple[int, ...]]]:
    """QFT on ``sites`` (most significant first) as ``(gate, sites)`` pairs."""
    sites = list(sites)
    n = len(sites)
    h = hadamard(d)
    steps: list[tuple[Gate, tuple[int, ...]]] = []
    for l in range(n):
        steps.append((h, (sites[l],)))
        for m in range(l + 1, n):
            steps.append((_controlled_rotation(d, m - l + 1), (sites[m], sites[l])))
    # output digits come out least significant first
    for l in range(n // 2):
        steps.append((swap_gate(d), (sites[l], sites[n - 1 - l])))
    return steps


def qft_circuit(d: int, n: int) -> Circuit:
    """Circuit whose matrix equals ``dft_matrix(d**n)``."""
    d = check_dim(d)
    if n < 1:
        raise InvalidParameterError(f"qft_circuit needs n >= 1, got {n}")
    return Circuit.build(Register.uniform(d, n), qft_steps(d, range(n)))
