# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Compile a unitary on ``n`` equal qudits into elementary operations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np
from loguru import logger

from ..config import RECONSTRUCTION_TOL
from ..core import Gate, Register, global_phase_distance
from ..errors import DimensionError, InvalidParameterError
from .eigen import eigen_factor, synthesize_eigenoperator
from .multicontrolled import ancilla_count
from .ops import (
    DecompositionReport,
    ElementaryOp,
    cancel_permutations,
    ops_to_circuit,
)

__all__ = (
    "gate_count_bound",
    "compile_unitary",
    "compile_many",
    "restricted_unitary",
)


def gate_count_bound(n: int, d: int) -> int:
    """``6 n d^{2n} + n d^n``."""
    return 6 * n * d ** (2 * n) + n * d**n


def restricted_unitary(
    ops: Sequence[ElementaryOp], register: Register, ancillas: int
) -> np.ndarray:
    """Matrix of ``ops`` on the subspace where every ancilla is ``|0>``."""
    extended = register.extended((register.dims[0],) * ancillas)
    full = ops_to_circuit(ops, extended).unitary()
    # ancillas are the least significant digits
    idx = np.arange(register.total_dim) * register.dims[0] ** ancillas
    return full[np.ix_(idx, idx)]


def _check_register(u: Gate, register: Register) -> int:
    if not register.is_uniform:
        raise DimensionError(
            f"compile needs equal site dimensions, got {list(register.dims)}"
        )
    d = register.dims[0]
    if d < 3:
        raise InvalidParameterError(f"compile needs d >= 3, got d={d}")
    if u.dim != register.total_dim:
        raise DimensionError(
            f"unitary of size {u.dim} for register of size {register.total_dim}"
        )
    return d


def compile_unitary(
    u: Gate | np.ndarray, register: Register, peephole: bool = True
) -> DecompositionReport:
    """Decompose ``u`` and verify the result against ``u`` up to global phase."""
    if not isinstance(u, Gate):
        u = Gate.from_matrix(u)
    d = _check_register(u, register)
    n, size = register.n_sites, register.total_dim

    # work in SU(N)
    global_phase = float(np.angle(np.linalg.det(u.matrix)) / size)
    special = u.matrix * np.exp(-1j * global_phase)

    r = ancilla_count(n, d) if n > 1 else 0
    ancilla_sites = list(range(n, n + r))
    ops: list[ElementaryOp] = []
    pairs = eigen_factor(special)
    for pair in pairs:
        ops += synthesize_eigenoperator(pair.lam, pair.eigvec, register, ancilla_sites)
    if peephole:
        before = len(ops)
        ops = cancel_permutations(ops)
        logger.debug(f"peephole removed {before - len(ops)} transpositions")

    error = global_phase_distance(u.matrix, restricted_unitary(ops, register, r))
    report = DecompositionReport(
        dims=register.dims,
        ancillas=r,
        ops=tuple(ops),
        gate_count=len(ops),
        bound=gate_count_bound(n, d),
        reconstruction_error=error,
        global_phase=global_phase,
    )
    logger.debug(
        f"compiled {size}x{size} unitary: {report.gate_count} ops "
        f"(bound {report.bound}), error {error:.3e}"
    )
    if not report.within_bound:
        logger.warning(
            f"gate count {report.gate_count} exceeds the bound {report.bound} "
            f"for n={n}, d={d}"
        )
    if error > RECONSTRUCTION_TOL:
        logger.warning(f"reconstruction error {error:.3e} above {RECONSTRUCTION_TOL}")
    return report


def compile_many(
    unitaries: Sequence[Gate | np.ndarray],
    register: Register,
    max_workers: int | None = None,
) -> list[DecompositionReport]:
    """Compile independent unitaries concurrently; results keep input order."""
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda u: compile_unitary(u, register), unitaries))
