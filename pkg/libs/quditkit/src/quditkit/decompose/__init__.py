# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Compilation into ``{X^(l), Z_d(theta), C_2[R]}``.
"""

from .compiler import (
    compile_many,
    compile_unitary,
    gate_count_bound,
    restricted_unitary,
)
from .eigen import (
    EigenPair,
    eigen_factor,
    eigenoperator,
    lift_two_level,
    synthesize_eigenoperator,
)
from .multicontrolled import (
    MultiControlledExpansion,
    ancilla_count,
    expand_multicontrolled,
    multicontrolled_ops,
)
from .ops import DecompositionReport, ElementaryOp, cancel_permutations, ops_to_circuit
from .unitary_d import RotationParams, decompose_ud, rotation_product

__all__ = [
    "compile_unitary",
    "compile_many",
    "gate_count_bound",
    "restricted_unitary",
    "EigenPair",
    "eigen_factor",
    "eigenoperator",
    "lift_two_level",
    "synthesize_eigenoperator",
    "MultiControlledExpansion",
    "ancilla_count",
    "expand_multicontrolled",
    "multicontrolled_ops",
    "DecompositionReport",
    "ElementaryOp",
    "cancel_permutations",
    "ops_to_circuit",
    "RotationParams",
    "decompose_ud",
    "rotation_product",
]
