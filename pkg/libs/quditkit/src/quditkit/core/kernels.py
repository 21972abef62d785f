# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Gate application kernels.

Amplitudes are viewed as a tensor with one axis per site (plus an optional
trailing batch axis) and the gate is contracted against the target axes, so the
full embedded matrix is never materialised.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import DimensionError
from .gate import Gate, freeze
from .register import Register
from .state import State

__all__ = ("apply", "apply_matrix", "check_signature", "embed")


def check_signature(
    register: Register, gate: Gate, sites: Sequence[int]
) -> tuple[int, ...]:
    sites = register.check_sites(sites)
    if len(sites) != gate.arity:
        raise DimensionError(
            f"gate {gate.name or 'unitary'} acts on {gate.arity} sites, "
            f"got {len(sites)}"
        )
    for s, expected in zip(sites, gate.signature):
        if register.dims[s] != expected:
            raise DimensionError(
                f"site {s} has dimension {register.dims[s]}, gate "
                f"{gate.name or 'unitary'} expects {expected}"
            )
    return sites


def apply_matrix(
    tensor: np.ndarray,
    dims: Sequence[int],
    matrix: np.ndarray,
    sites: Sequence[int],
    diagonal: bool = False,
) -> np.ndarray:
    """Apply ``matrix`` at ``sites`` to amplitudes of shape ``(N,)`` or ``(N, B)``.

    Inputs are assumed validated; returns a new array of the same shape.
    """
    dims = tuple(dims)
    sites = list(sites)
    k = len(sites)
    sig = tuple(dims[s] for s in sites)
    batch = tensor.shape[1:]
    psi = tensor.reshape(dims + batch)

    if diagonal:
        # broadcast the diagonal over the untouched axes
        phases = np.diag(matrix).reshape(sig)
        order = np.argsort(sites)
        phases = np.transpose(phases, order)
        shape = [1] * psi.ndim
        for s in sites:
            shape[s] = dims[s]
        out = psi * phases.reshape(shape)
        return out.reshape(tensor.shape)

    op = matrix.reshape(sig + sig)
    out = np.tensordot(op, psi, axes=(list(range(k, 2 * k)), sites))
    out = np.moveaxis(out, list(range(k)), sites)
    return np.ascontiguousarray(out).reshape(tensor.shape)


def apply(state: State, gate: Gate, sites: Sequence[int]) -> State:
    """Return ``(gate at sites ⊗ identity elsewhere) |state>``."""
    sites = check_signature(state.register, gate, sites)
    out = apply_matrix(
        state.amplitudes, state.dims, gate.matrix, sites, diagonal=gate.is_diagonal
    )
    # unitarity of the gate keeps the norm, skip re-validation
    return State.model_construct(register=state.register, amplitudes=freeze(out))


def embed(gate: Gate, sites: Sequence[int], register: Register) -> np.ndarray:
    """Full ``N x N`` matrix of ``gate`` acting at ``sites``."""
    sites = check_signature(register, gate, sites)
    eye = np.eye(register.total_dim, dtype=np.complex128)
    return apply_matrix(eye, register.dims, gate.matrix, sites)
