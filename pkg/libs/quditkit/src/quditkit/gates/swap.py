# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
SWAP constructions.
"""

from __future__ import annotations

import numpy as np

from ..core import Circuit, Gate, Register
from ..errors import InvalidParameterError
from .controlled import ctilde_x, gxor, k_d
from .pauli import check_dim, permutation_matrix
from .registry import named_gate, register

__all__ = ("swap_gate", "swap", "swap_gxor", "partial_swap")


@register()
def swap_gate(d: int) -> Gate:
    """Permutation matrix ``|i, j> -> |j, i>``."""
    d = check_dim(d)
    i, j = np.divmod(np.arange(d * d), d)
    return named_gate("swap_gate", (d, d), permutation_matrix(j * d + i), d=d)


def swap(d: int) -> Circuit:
    """Three ``C~X`` gates with the control alternating between the two sites."""
    gate = ctilde_x(check_dim(d))
    return Circuit.build(
        Register.uniform(d, 2), [(gate, (0, 1)), (gate, (1, 0)), (gate, (0, 1))]
    )


def swap_gxor(d: int) -> Circuit:
    """Three GXOR gates leave ``|-y, -x>``; a ``K_d`` on each site fixes the signs."""
    d = check_dim(d)
    g, k = gxor(d), k_d(d)
    return Circuit.build(
        Register.uniform(d, 2),
        [(g, (0, 1)), (g, (1, 0)), (g, (0, 1)), (k, (0,)), (k, (1,))],
    )


@register()
def partial_swap(dc: int, dt: int, dp: int) -> Gate:
    """Swap ``|i>|j>`` on a ``dc x dt`` system only when both ``i, j < dp``."""
    dc, dt, dp = check_dim(dc), check_dim(dt), int(dp)
    if not 1 <= dp <= min(dc, dt):
        raise InvalidParameterError(
            f"partial_swap needs 1 <= dp <= min(dc, dt) = {min(dc, dt)}, got {dp}"
        )
    i, j = np.divmod(np.arange(dc * dt), dt)
    inside = (i < dp) & (j < dp)
    mapping = np.where(inside, j * dt + i, i * dt + j)
    return named_gate(
        "partial_swap", (dc, dt), permutation_matrix(mapping), dc=dc, dt=dt, dp=dp
    )
