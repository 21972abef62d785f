# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Controlled and two-qudit arithmetic gates.

The control is always the first (most significant) site of the signature.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.linalg import block_diag

from ..core import Gate
from ..errors import DimensionError, InvalidParameterError
from .pauli import check_dim, check_level, hadamard, omega_power, permutation_matrix
from .registry import gate_spec, named_gate, register

__all__ = (
    "controlled",
    "mvcg",
    "ms_gate",
    "cx_d",
    "cx_d_dagger",
    "k_d",
    "gxor",
    "cz_d",
    "ctilde_x",
    "ctilde_from_fourier",
)


def _pairs(d: int) -> tuple[np.ndarray, np.ndarray]:
    return np.divmod(np.arange(d * d), d)


@register()
def controlled(R: Gate, m: int) -> Gate:
    """``C_m[R]``: ``R`` on the last site iff all ``m - 1`` controls are ``|d-1>``."""
    m = int(m)
    if m < 2:
        raise InvalidParameterError(f"controlled needs m >= 2, got {m}")
    if R.arity != 1:
        raise DimensionError("controlled expects a single-site gate")
    d = R.dim
    matrix = np.eye(d**m, dtype=np.complex128)
    matrix[-d:, -d:] = R.matrix
    return named_gate("controlled", (d,) * m, matrix, R=gate_spec(R), m=m)


@register()
def mvcg(ops: Sequence[Gate]) -> Gate:
    """Multi-value-controlled gate ``diag(U_0, ..., U_{d-1})``."""
    ops = list(ops)
    if len(ops) < 2:
        raise InvalidParameterError("mvcg needs one operation per control value (>= 2)")
    signature = ops[0].signature
    for value, op in enumerate(ops):
        if op.signature != signature:
            raise DimensionError(
                f"mvcg op {value} has signature {list(op.signature)}, "
                f"expected {list(signature)}"
            )
    matrix = block_diag(*(op.matrix for op in ops))
    return named_gate(
        "mvcg",
        (len(ops),) + signature,
        matrix,
        ops=[gate_spec(op) for op in ops],
    )


@register()
def ms_gate(d: int, control_value: int, U: Gate) -> Gate:
    """Apply ``U`` to the target only when the control is ``|control_value>``."""
    d = check_dim(d)
    control_value = check_level(d, control_value, "control value")
    if U.signature != (d,):
        raise DimensionError(f"ms_gate target must be a single d={d} site")
    blocks = [np.eye(d)] * d
    blocks[control_value] = U.matrix
    return named_gate(
        "ms_gate",
        (d, d),
        block_diag(*blocks),
        d=d,
        control_value=control_value,
        U=gate_spec(U),
    )


@register()
def cx_d(d: int) -> Gate:
    """``|x, y> -> |x, x + y>``."""
    d = check_dim(d)
    x, y = _pairs(d)
    return named_gate("cx_d", (d, d), permutation_matrix(x * d + (x + y) % d), d=d)


@register()
def cx_d_dagger(d: int) -> Gate:
    """``|x, y> -> |x, y - x>``."""
    d = check_dim(d)
    x, y = _pairs(d)
    return named_gate(
        "cx_d_dagger", (d, d), permutation_matrix(x * d + (y - x) % d), d=d
    )


@register()
def k_d(d: int) -> Gate:
    """``|x> -> |d - x mod d>``."""
    d = check_dim(d)
    return named_gate("k_d", (d,), permutation_matrix((-np.arange(d)) % d), d=d)


@register()
def gxor(d: int) -> Gate:
    """``|x, y> -> |x, x - y>``."""
    d = check_dim(d)
    x, y = _pairs(d)
    return named_gate("gxor", (d, d), permutation_matrix(x * d + (x - y) % d), d=d)


@register()
def cz_d(d: int) -> Gate:
    """``|x, y> -> omega^{xy} |x, y>``."""
    d = check_dim(d)
    x, y = _pairs(d)
    return named_gate("cz_d", (d, d), np.diag(omega_power(d, x * y)), d=d)


@register()
def ctilde_x(d: int) -> Gate:
    """``|x, y> -> |x, -x - y>``; an involution."""
    d = check_dim(d)
    x, y = _pairs(d)
    return named_gate(
        "ctilde_x", (d, d), permutation_matrix(x * d + (-x - y) % d), d=d
    )


@register()
def ctilde_from_fourier(d: int) -> Gate:
    """``(I ⊗ H) CZ (I ⊗ H)``, the Fourier-sandwiched controlled phase."""
    d = check_dim(d)
    fourier = np.kron(np.eye(d), hadamard(d).matrix)
    matrix = fourier @ cz_d(d).matrix @ fourier
    return named_gate("ctilde_from_fourier", (d, d), matrix, d=d)
