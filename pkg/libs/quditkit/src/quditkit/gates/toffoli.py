# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Toffoli with a qutrit target.

The target's third level parks the ``|1>`` branch whenever the first control
is ``|0>``, so a single controlled-Z from the second control only fires when
both controls are set. Three two-qudit gates in total.
"""

from __future__ import annotations

from ..core import Circuit, Register
from ..errors import InvalidParameterError
from .controlled import mvcg
from .pauli import identity
from .rotations import qubit_hadamard, x_m

__all__ = ("toffoli_qutrit", "toffoli_gate_counts")


def toffoli_qutrit() -> Circuit:
    """Toffoli on dims ``[2, 2, 3]``: controls at sites 0 and 1, qutrit target at 2."""
    h = qubit_hadamard(3)
    x_a = x_m(3, 2)
    x_01 = x_m(3, 1)
    cnot = mvcg([identity(3), x_01])
    # Z on the target's qubit levels, |2> untouched
    cz = mvcg([identity(3), h @ x_01 @ h])

    park = [(x_a, (2,)), (cnot, (0, 2)), (x_01, (2,))]
    steps = (
        [(h, (2,))]
        + park
        + [(cz, (1, 2))]
        + list(reversed(park))
        + [(h, (2,))]
    )
    return Circuit.build(Register(dims=(2, 2, 3)), steps)


def toffoli_gate_counts(n: int) -> tuple[int, int, int]:
    """Two-body gate counts for an ``n``-control Toffoli.

    Returns ``(qudit_target, tree, qubit_best)`` = ``(2n - 1, 2n - 3, 12n - 11)``.
    """
    n = int(n)
    if n < 2:
        raise InvalidParameterError(f"toffoli_gate_counts needs n >= 2, got {n}")
    return 2 * n - 1, 2 * n - 3, 12 * n - 11
