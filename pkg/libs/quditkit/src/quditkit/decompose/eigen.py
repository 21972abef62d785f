# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Eigen-operator factorisation and synthesis.

A unitary ``U = sum_j exp(i lam_j) |E_j><E_j|`` is the product of the commuting
eigen-operators ``Y_j = I + (exp(i lam_j) - 1) |E_j><E_j|``. Each ``Y_j`` is
synthesised as ``V_j^-1 Z V_j`` where ``V_j`` carries ``|E_j>`` to the top
basis state and ``Z`` phases that state alone.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, field_validator
from scipy.linalg import schur

from ..core import Gate, Register
from ..errors import DimensionError, InvalidParameterError, NumericValidationError
from ..gates import level_swap, phase_zd, rot_x
from .multicontrolled import ancilla_count, multicontrolled_ops
from .ops import ElementaryOp
from .unitary_d import RotationParams, decompose_ud

__all__ = (
    "EigenPair",
    "eigen_factor",
    "eigenoperator",
    "lift_two_level",
    "synthesize_eigenoperator",
)

# eigenphases closer than this to 0 (mod 2 pi) need no operator
_PHASE_TOL = 1e-12


class EigenPair(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lam: float
    eigvec: np.ndarray

    @field_validator("eigvec", mode="before")
    def _as_vector(cls, value) -> np.ndarray:
        vec = np.array(value, dtype=np.complex128)
        vec.setflags(write=False)
        return vec


def eigen_factor(u: Gate | np.ndarray) -> list[EigenPair]:
    """Eigenphases in ``[0, 2 pi)`` with an orthonormal eigenbasis.

    A complex Schur form is used so degenerate eigenvalues still come with
    orthonormal vectors.
    """
    matrix = u.matrix if isinstance(u, Gate) else np.asarray(u, dtype=np.complex128)
    if not isinstance(u, Gate):
        Gate.from_matrix(matrix)  # raises on non-unitary input
    t, z = schur(matrix, output="complex")
    off = np.max(np.abs(np.triu(t, 1))) if t.shape[0] > 1 else 0.0
    if off > 1e-8:
        raise NumericValidationError(f"matrix is not normal (Schur residue {off:.2e})")
    lams = np.mod(np.angle(np.diag(t)), 2 * np.pi)
    return [EigenPair(lam=float(lam), eigvec=z[:, j]) for j, lam in enumerate(lams)]


def eigenoperator(lam: float, eigvec: np.ndarray) -> np.ndarray:
    """``I + (exp(i lam) - 1) |v><v|``."""
    v = np.asarray(eigvec, dtype=np.complex128)
    return np.eye(v.shape[0]) + (np.exp(1j * lam) - 1) * np.outer(v, v.conj())


def lift_two_level(
    step: RotationParams, dims: Sequence[int], ancilla_sites: Sequence[int] = ()
) -> list[ElementaryOp]:
    """Realise a rotation between global levels ``l - 1`` and ``l`` with qudit ops.

    When the two levels differ only in the last digit the rotation is a
    controlled ``rot_x`` on the last site. Otherwise (a carry) the upper state is
    first moved next to the lower one by controlled transpositions.
    """
    register = Register(dims=dims)
    n, d = register.n_sites, register.dims[0]
    last = n - 1
    a = register.digits_of(step.l - 1)
    b = register.digits_of(step.l)

    if a[:-1] == b[:-1]:
        gate = rot_x(d, a[-1] + 1, step.x, step.y)
        controls = {s: a[s] for s in range(last)}
        return multicontrolled_ops(gate, last, controls, d, ancilla_sites)

    # a = (.., k, d-1, .., d-1) and b = (.., k+1, 0, .., 0)
    moves: list[ElementaryOp] = []
    current = list(b)
    for s in range(last):
        if current[s] == a[s]:
            continue
        controls = {t: current[t] for t in range(n) if t != s}
        swap = level_swap(d, current[s], a[s])
        moves += multicontrolled_ops(swap, s, controls, d, ancilla_sites)
        current[s] = a[s]

    # the moved state sits at |0> on the last site, a at |d-1>; park it at |d-2>
    # so the pair is adjacent, which flips the block orientation
    flip = [ElementaryOp.permutation(d, 0, d - 2, last)]
    gate = rot_x(d, d - 1, np.conj(step.x), -np.conj(step.y))
    controls = {s: a[s] for s in range(last)}
    body = multicontrolled_ops(gate, last, controls, d, ancilla_sites)
    undo = [op.inverse() for op in reversed(moves)]
    return moves + flip + body + flip + undo


def synthesize_eigenoperator(
    lam: float,
    eigvec: np.ndarray,
    register: Register,
    ancilla_sites: Sequence[int] | None = None,
) -> list[ElementaryOp]:
    """Op sequence realising ``I + (exp(i lam) - 1) |v><v|`` on ``register``.

    Ancillas (needed from three sites on) default to the sites right after the
    register.
    """
    if not register.is_uniform:
        raise DimensionError("eigen-operator synthesis needs equal site dimensions")
    n, d, size = register.n_sites, register.dims[0], register.total_dim
    vec = np.asarray(eigvec, dtype=np.complex128)
    if vec.shape != (size,):
        raise DimensionError(
            f"eigenvector of length {vec.shape[0]} for a register of size {size}"
        )
    if n > 1 and d < 3:
        raise InvalidParameterError("multi-qudit synthesis needs d >= 3")
    if ancilla_sites is None:
        ancilla_sites = range(n, n + (ancilla_count(n, d) if n > 1 else 0))
    ancilla_sites = list(ancilla_sites)

    lam = float(np.mod(lam, 2 * np.pi))
    if min(lam, 2 * np.pi - lam) < _PHASE_TOL:
        return []

    steps = decompose_ud(vec, size)
    forward: list[ElementaryOp] = []
    for step in steps:
        forward += lift_two_level(step, register.dims, ancilla_sites)
    phase = multicontrolled_ops(
        phase_zd(d, lam / 2), n - 1, {s: d - 1 for s in range(n - 1)}, d, ancilla_sites
    )
    ops = forward + phase + [op.inverse() for op in reversed(forward)]
    logger.debug(
        f"eigen-operator lam={lam:.6f}: {len(steps)} rotations, {len(ops)} ops"
    )
    return ops
