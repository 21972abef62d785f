# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Gate constructors.

Importing this package populates :data:`GATE_BUILDERS`, the name registry the
circuit file format resolves gate names against.
"""

from .controlled import (
    controlled,
    ctilde_from_fourier,
    ctilde_x,
    cx_d,
    cx_d_dagger,
    cz_d,
    gxor,
    k_d,
    ms_gate,
    mvcg,
)
from .pauli import (
    DisplacementIndex,
    displacement,
    hadamard,
    identity,
    omega_power,
    p_gate,
    pauli_x,
    pauli_z,
    q_gate,
    sum_gate,
    tau_power,
    weyl_heisenberg_group,
)
from .pi8 import (
    Pi8Params,
    clifford_hierarchy_check,
    is_prime,
    match_clifford_form,
    modinv,
    pi8_exponents,
    pi8_gate,
)
from .registry import GATE_BUILDERS, build_gate, gate_spec
from .rotations import (
    level_swap,
    phase_zd,
    qubit_hadamard,
    rot_x,
    rz_fourier,
    unitary,
    x_m,
)
from .swap import partial_swap, swap, swap_gate, swap_gxor
from .toffoli import toffoli_gate_counts, toffoli_qutrit

__all__ = [
    "GATE_BUILDERS",
    "build_gate",
    "gate_spec",
    "omega_power",
    "tau_power",
    "identity",
    "pauli_x",
    "pauli_z",
    "DisplacementIndex",
    "displacement",
    "weyl_heisenberg_group",
    "hadamard",
    "sum_gate",
    "q_gate",
    "p_gate",
    "Pi8Params",
    "is_prime",
    "modinv",
    "pi8_exponents",
    "pi8_gate",
    "match_clifford_form",
    "clifford_hierarchy_check",
    "rot_x",
    "phase_zd",
    "level_swap",
    "x_m",
    "qubit_hadamard",
    "rz_fourier",
    "unitary",
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
    "swap_gate",
    "swap",
    "swap_gxor",
    "partial_swap",
    "toffoli_qutrit",
    "toffoli_gate_counts",
]
