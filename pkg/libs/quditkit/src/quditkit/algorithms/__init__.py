# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Qudit algorithms: parity, Deutsch-Jozsa, Bernstein-Vazirani, QFT, phase
estimation, Grover search and the qutrit phase estimator.
"""

from .deutsch_jozsa import (
    BernsteinVaziraniResult,
    DeutschJozsaResult,
    bernstein_vazirani,
    deutsch_jozsa,
    query_distribution,
)
from .grover import GroverResult, closed_form_success, default_iterations, grover
from .oracles import AffineOracle, PermutationOracle, TableOracle, permutation_sign
from .parity import QUTRIT_LABELS, ParityResult, parity, qutrit_fourier
from .phase_estimation import (
    PhaseEstimationResult,
    phase_estimate,
    phase_estimation_circuit,
)
from .phase_fit import (
    GRID_POINTS,
    MEASURED_COUNTS,
    REFERENCE_ESTIMATES,
    TRUE_PHASES,
    PhaseFitResult,
    control_probability,
    phase_fit,
)
from .qft import dft_matrix, qft_circuit, qft_steps

__all__ = [
    "AffineOracle",
    "PermutationOracle",
    "TableOracle",
    "permutation_sign",
    "QUTRIT_LABELS",
    "ParityResult",
    "parity",
    "qutrit_fourier",
    "DeutschJozsaResult",
    "BernsteinVaziraniResult",
    "deutsch_jozsa",
    "bernstein_vazirani",
    "query_distribution",
    "dft_matrix",
    "qft_steps",
    "qft_circuit",
    "PhaseEstimationResult",
    "phase_estimation_circuit",
    "phase_estimate",
    "GroverResult",
    "default_iterations",
    "closed_form_success",
    "grover",
    "GRID_POINTS",
    "MEASURED_COUNTS",
    "REFERENCE_ESTIMATES",
    "TRUE_PHASES",
    "PhaseFitResult",
    "control_probability",
    "phase_fit",
]
