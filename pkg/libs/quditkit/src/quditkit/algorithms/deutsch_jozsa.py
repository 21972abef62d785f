# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Deutsch-Jozsa and Bernstein-Vazirani over qudits.

Both run the same circuit: Fourier transforms on ``r`` input qudits in ``|0>``
and on a target in ``|d-1>``, one query ``|x>|j> -> |x>|j + f(x)>``, then
inverse transforms on the inputs. The target is a shift eigenstate, so the
query kicks back ``omega^{f(x)}``; for an affine ``f`` the inputs end in
``|A_1, ..., A_r>`` and ``A_0`` survives only as a global phase.
"""

from __future__ import annotations

from typing import Sequence, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..core import Register, State, apply, basis_state, marginal_probabilities
from ..errors import InvalidParameterError, NumericValidationError
from ..gates import hadamard
from ..gates.pauli import check_dim
from .oracles import AffineOracle, TableOracle

__all__ = (
    "DeutschJozsaResult",
    "BernsteinVaziraniResult",
    "query_distribution",
    "deutsch_jozsa",
    "bernstein_vazirani",
)

Oracle = Union[AffineOracle, TableOracle]


class DeutschJozsaResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str
    coeffs: tuple[int, ...] | None
    zero_probability: float
    oracle_calls: int


class BernsteinVaziraniResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    string: tuple[int, ...]
    probability: float
    oracle_calls: int


def query_distribution(oracle: Oracle, d: int, r: int) -> np.ndarray:
    """Input-register distribution after one oracle query."""
    register = Register.uniform(d, r + 1)
    h = hadamard(d)
    state = basis_state(register, (0,) * r + (d - 1,))
    for site in range(r + 1):
        state = apply(state, h, (site,))
    state = oracle.apply(state, range(r + 1))
    h_inv = h.adjoint()
    for site in range(r):
        state = apply(state, h_inv, (site,))
    return marginal_probabilities(state, range(r))


def _peak(distribution: np.ndarray, d: int, r: int) -> tuple[tuple[int, ...], float]:
    best = int(np.argmax(distribution))
    digits = tuple(int(j) for j in np.unravel_index(best, (d,) * r))
    return digits, float(distribution[best])


def deutsch_jozsa(
    oracle: AffineOracle | TableOracle | Sequence[int],
    d: int | None = None,
    r: int | None = None,
) -> DeutschJozsaResult:
    """Classify ``f`` as constant or balanced with one query.

    A raw value table needs ``d`` and ``r`` and is checked against the promise
    first.
    """
    if not isinstance(oracle, (AffineOracle, TableOracle)):
        if d is None or r is None:
            raise InvalidParameterError("a raw function table needs d and r")
        oracle = TableOracle(d=d, r=r, values=tuple(int(v) for v in oracle))
    if isinstance(oracle, TableOracle):
        oracle.promise()
    d, r = oracle.d, oracle.r

    calls_before = oracle.calls
    distribution = query_distribution(oracle, d, r)
    zero = float(distribution[0])
    kind = "constant" if zero > 0.5 else "balanced"

    digits, peak = _peak(distribution, d, r)
    coeffs = digits if peak >= 1.0 - 1e-10 else None
    logger.debug(f"deutsch-jozsa d={d} r={r}: {kind}, coeffs={coeffs}")
    return DeutschJozsaResult(
        kind=kind,
        coeffs=coeffs,
        zero_probability=zero,
        oracle_calls=oracle.calls - calls_before,
    )


def bernstein_vazirani(d: int, n: int, g: Sequence[int]) -> BernsteinVaziraniResult:
    """Recover ``g`` from ``f(x) = g . x mod d`` with a single query."""
    d = check_dim(d)
    g = tuple(int(v) for v in g)
    if n < 1 or len(g) != n:
        raise InvalidParameterError(f"g must have n={n} >= 1 entries, got {len(g)}")
    for i, v in enumerate(g):
        if not 0 <= v < d:
            raise InvalidParameterError(f"g[{i}] = {v} is outside [0, {d})")
    oracle = AffineOracle(d=d, coeffs=(0,) + g)
    distribution = query_distribution(oracle, d, n)
    digits, peak = _peak(distribution, d, n)
    if peak < 1.0 - 1e-10:
        raise NumericValidationError(f"read-out is not deterministic (p={peak:.3e})")
    return BernsteinVaziraniResult(
        string=digits, probability=peak, oracle_calls=oracle.calls
    )
