# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Registers, states, gates, circuits and the kernels that connect them.
"""

from .circuit import Circuit, Step
from .compare import equal_up_to_global_phase, fidelity, global_phase_distance
from .gate import Gate, is_unitary
from .kernels import apply, embed
from .measure import (
    histogram,
    marginal_probabilities,
    measure_all,
    probabilities,
    sample,
)
from .register import Register
from .state import State, basis_state, uniform_state

__all__ = [
    "Circuit",
    "Step",
    "Gate",
    "Register",
    "State",
    "apply",
    "basis_state",
    "uniform_state",
    "embed",
    "is_unitary",
    "probabilities",
    "marginal_probabilities",
    "sample",
    "measure_all",
    "histogram",
    "fidelity",
    "equal_up_to_global_phase",
    "global_phase_distance",
]
