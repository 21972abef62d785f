# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Qudit phase estimation.

The first ``t`` sites (dimension ``d``) read the phase, the last site holds the
eigenvector of ``U``. Control site ``l`` (0-based) drives ``U^{k d^{t-1-l}}``
when it holds ``|k>``, then an inverse QFT turns the kicked-back phases into
the digits of ``R = r d^t``.
"""

from __future__ import annotations

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..core import Circuit, Gate, Register, State, marginal_probabilities
from ..errors import InvalidParameterError, NumericValidationError
from ..gates import hadamard, mvcg
from ..gates.pauli import check_dim
from .qft import qft_steps

__all__ = ("PhaseEstimationResult", "phase_estimation_circuit", "phase_estimate")

EIGEN_RESIDUAL_TOL = 1e-8


class PhaseEstimationResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    d: int
    digits: tuple[int, ...]
    probability: float
    distribution: np.ndarray
    phase: float

    @property
    def exact(self) -> bool:
        return self.probability >= 1.0 - 1e-9

    @property
    def value(self) -> int:
        """``R`` read as a base-``d`` integer."""
        return int(np.ravel_multi_index(self.digits, (self.d,) * len(self.digits)))


def phase_estimation_circuit(d: int, t: int, u: Gate) -> Circuit:
    """Circuit on dims ``[d] * t + [M]`` for an ``M x M`` unitary ``u``."""
    d = check_dim(d)
    if t < 1:
        raise InvalidParameterError(f"phase estimation needs t >= 1, got {t}")
    size = u.dim
    register = Register(dims=(d,) * t + (size,))
    steps = [(hadamard(d), (l,)) for l in range(t)]
    for l in range(t):
        base = np.linalg.matrix_power(u.matrix, d ** (t - 1 - l))
        powers, acc = [], np.eye(size, dtype=np.complex128)
        for _ in range(d):
            powers.append(Gate(signature=(size,), matrix=acc))
            acc = base @ acc
        steps.append((mvcg(powers), (l, t)))
    forward = Circuit.build(register, qft_steps(d, range(t)))
    return Circuit.build(register, steps).compose(forward.inverse())


def phase_estimate(
    d: int, t: int, u: Gate | np.ndarray, eigvec
) -> PhaseEstimationResult:
    """Estimate the eigenphase of ``eigvec`` as ``t`` base-``d`` digits."""
    if not isinstance(u, Gate):
        u = Gate.from_matrix(u)
    elif u.arity != 1:
        u = Gate.from_matrix(u.matrix)
    vec = np.asarray(eigvec, dtype=np.complex128)
    if vec.shape != (u.dim,):
        raise InvalidParameterError(f"eigenvector must have length {u.dim}")
    vec = vec / np.linalg.norm(vec)
    image = u.matrix @ vec
    eigenvalue = np.vdot(vec, image)
    residual = float(np.linalg.norm(image - eigenvalue * vec))
    if residual > EIGEN_RESIDUAL_TOL:
        raise NumericValidationError(
            f"input is not an eigenvector of U (residual {residual:.2e})"
        )

    circuit = phase_estimation_circuit(d, t, u)
    initial = np.zeros(d**t, dtype=np.complex128)
    initial[0] = 1.0
    state = State(register=circuit.register, amplitudes=np.kron(initial, vec))
    final = circuit.run(state)
    distribution = marginal_probabilities(final, range(t))
    best = int(np.argmax(distribution))
    digits = tuple(int(j) for j in np.unravel_index(best, (d,) * t))
    result = PhaseEstimationResult(
        d=d,
        digits=digits,
        probability=float(distribution[best]),
        distribution=distribution,
        phase=2 * np.pi * best / d**t,
    )
    logger.debug(f"phase estimate digits={digits} p={result.probability:.12f}")
    return result
