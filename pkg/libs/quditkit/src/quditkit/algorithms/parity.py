# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Parity of a permutation with a single oracle query.

Qutrit basis labels ``{1, 0, -1}`` sit at indices ``0, 1, 2``. Starting from the
Fourier state of ``|1>``, an even permutation (a cyclic shift of the labels)
only changes the global phase, while an odd one (a reflection) turns it into
the Fourier state of ``|-1>``; the inverse transform then reads ``|1>`` or
``|-1>``. For ``d >= 4`` the same circuit separates cyclic shifts
(``positive``) from reflections ``x -> c - x`` (``negative``).
"""

from __future__ import annotations

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..core import Gate, Register, State, probabilities
from ..errors import InvalidParameterError, NumericValidationError
from .oracles import PermutationOracle

__all__ = ("QUTRIT_LABELS", "ParityResult", "qutrit_fourier", "parity")

QUTRIT_LABELS = (1, 0, -1)


class ParityResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    outcome: int
    probability: float
    oracle_calls: int


def qutrit_fourier() -> np.ndarray:
    """Fourier transform over the labels ``(1, 0, -1)`` in that row order."""
    labels = np.array(QUTRIT_LABELS)
    return np.exp(2j * np.pi * np.outer(labels, labels) / 3) / np.sqrt(3)


def _fourier(d: int) -> np.ndarray:
    if d == 3:
        return qutrit_fourier()
    k = np.arange(d)
    return np.exp(2j * np.pi * np.mod(np.outer(k, k), d) / d) / np.sqrt(d)


def _classify(mapping: tuple[int, ...], d: int) -> str:
    c = mapping[0]
    if all(mapping[x] == (x + c) % d for x in range(d)):
        return "positive"
    if all(mapping[x] == (c - x) % d for x in range(d)):
        return "negative"
    raise InvalidParameterError(
        f"permutation {list(mapping)} is neither a cyclic shift nor a reflection"
    )


def parity(oracle: PermutationOracle) -> ParityResult:
    d = oracle.d
    if d == 2:
        raise InvalidParameterError(
            "parity needs d >= 3; shifts and reflections coincide at d = 2"
        )
    if d > 3:
        _classify(oracle.mapping, d)

    fourier = Gate(signature=(d,), matrix=_fourier(d))
    register = Register(dims=(d,))
    # Fourier state of label 1: column 0 for qutrits, column 1 otherwise
    start = State(register=register, amplitudes=fourier.matrix[:, 0 if d == 3 else 1])
    calls_before = oracle.calls
    state = oracle.apply(start, (0,))
    state = State.model_construct(
        register=register, amplitudes=fourier.matrix.conj().T @ state.amplitudes
    )
    probs = probabilities(state)
    outcome = int(np.argmax(probs))
    if probs[outcome] < 1.0 - 1e-10:
        raise NumericValidationError(
            f"parity read-out is not deterministic (p={probs[outcome]:.3e})"
        )

    if d == 3:
        label = {0: "even", 2: "odd"}[outcome]
    else:
        label = {1: "positive", d - 1: "negative"}[outcome]
    logger.debug(f"parity of {list(oracle.mapping)}: outcome {outcome} -> {label}")
    return ParityResult(
        label=label,
        outcome=outcome,
        probability=float(probs[outcome]),
        oracle_calls=oracle.calls - calls_before,
    )
