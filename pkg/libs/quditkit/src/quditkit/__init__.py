# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
quditkit - mixed-dimension qudit simulation, gate construction and compilation.
"""

from loguru import logger

from .core import Circuit, Gate, Register, State, apply, basis_state
from .errors import (
    CircuitParseError,
    DimensionError,
    InvalidParameterError,
    NumericValidationError,
    PromiseViolationError,
    QuditKitError,
)

__version__ = "0.1.0"

logger.disable("quditkit")

__all__ = [
    "Circuit",
    "Gate",
    "Register",
    "State",
    "apply",
    "basis_state",
    "QuditKitError",
    "InvalidParameterError",
    "DimensionError",
    "NumericValidationError",
    "CircuitParseError",
    "PromiseViolationError",
]
