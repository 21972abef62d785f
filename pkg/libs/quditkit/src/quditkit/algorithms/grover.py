# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Grover search on ``n`` qudits with phase-generalised reflections.

``R_s(phi) = 1 + (e^{i phi} - 1)|s><s|`` marks the target and
``R_a(phi) = F R_0(phi) F^dagger`` reflects about ``|a> = F|0...0>`` with
``F = H_d`` on every site.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..core import Register, State, apply, basis_state
from ..errors import InvalidParameterError
from ..gates import hadamard
from ..gates.pauli import check_dim

__all__ = ("GroverResult", "default_iterations", "closed_form_success", "grover")


class GroverResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    success_probability: float
    state: State
    iterations: int
    closed_form: float | None = None


def default_iterations(size: int) -> int:
    return int(round(np.pi / 4 * np.sqrt(size)))


def closed_form_success(size: int, iterations: int) -> float:
    """``sin^2((2k + 1) arcsin(N^{-1/2}))``."""
    theta = np.arcsin(1 / np.sqrt(size))
    return float(np.sin((2 * iterations + 1) * theta) ** 2)


def _phase_at(state: State, index: int, phi: float) -> State:
    amplitudes = np.array(state.amplitudes)
    amplitudes[index] *= np.exp(1j * phi)
    return State.model_construct(register=state.register, amplitudes=amplitudes)


def _layer(state: State, gate) -> State:
    for site in range(state.register.n_sites):
        state = apply(state, gate, (site,))
    return state


def grover(
    d: int,
    n: int,
    marked: Sequence[int],
    phis: tuple[float, float] = (np.pi, np.pi),
    iterations: int | None = None,
) -> GroverResult:
    d = check_dim(d)
    register = Register.uniform(d, n)
    target = register.index_of(marked)
    size = register.total_dim
    if iterations is None:
        iterations = default_iterations(size)
    if iterations < 0:
        raise InvalidParameterError(f"iterations must be >= 0, got {iterations}")
    phi_s, phi_a = phis

    f = hadamard(d)
    f_dag = f.adjoint()
    state = _layer(basis_state(register, (0,) * n), f)
    for _ in range(iterations):
        state = _phase_at(state, target, phi_s)
        state = _layer(_phase_at(_layer(state, f_dag), 0, phi_a), f)

    success = float(abs(state.amplitudes[target]) ** 2)
    closed = None
    if np.isclose(phi_s, np.pi) and np.isclose(phi_a, np.pi):
        closed = closed_form_success(size, iterations)
    logger.debug(f"grover N={size} k={iterations}: p={success:.12f}")
    return GroverResult(
        success_probability=success,
        state=state,
        iterations=iterations,
        closed_form=closed,
    )
