# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Gell-Mann basis, Hamiltonian expansion and penalised control cost.
"""

from .cost import cost, metric_weight, projection_error_bound, synthesis_gate_scaling
from .expansion import (
    HamiltonianExpansion,
    Label,
    body_count,
    body_support,
    body_weights,
    expand,
    project_local,
    reconstruct,
)
from .gellmann import BasisElement, basis_with_identity, gell_mann_basis

__all__ = [
    "BasisElement",
    "gell_mann_basis",
    "basis_with_identity",
    "HamiltonianExpansion",
    "Label",
    "body_count",
    "body_support",
    "body_weights",
    "expand",
    "project_local",
    "reconstruct",
    "cost",
    "metric_weight",
    "projection_error_bound",
    "synthesis_gate_scaling",
]
