# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Exception hierarchy shared by every quditkit module.

None of these subclass ``ValueError``: pydantic re-raises them untouched from
validators, which lets the CLI map each family to its own exit code.
"""

from __future__ import annotations

__all__ = (
    "QuditKitError",
    "InvalidParameterError",
    "DimensionError",
    "NumericValidationError",
    "CircuitParseError",
    "PromiseViolationError",
)


class QuditKitError(Exception):
    """Base class for all quditkit failures."""

    exit_code: int = 1


class InvalidParameterError(QuditKitError):
    """A digit, level, control value or arity lies outside its allowed range."""

    exit_code = 2


class CircuitParseError(QuditKitError):
    """Circuit JSON or CSV input could not be parsed."""

    exit_code = 2

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class DimensionError(QuditKitError):
    """Site dimensions, gate signatures or matrix sizes disagree."""

    exit_code = 3


class NumericValidationError(QuditKitError):
    """Input fails a numerical contract (unitarity, normalisation, Hermiticity)."""

    exit_code = 4


class PromiseViolationError(QuditKitError):
    """An oracle breaks the promise an algorithm relies on."""

    exit_code = 4
