# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Pure state vectors over a Register.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..config import NORM_TOL
from ..errors import DimensionError, NumericValidationError
from .gate import freeze
from .register import Register

__all__ = ("State", "basis_state", "uniform_state")


class State(BaseModel):
    """Complex amplitude vector of length ``register.total_dim`` with unit norm."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    register: Register
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    def _validate_amplitudes(cls, value) -> np.ndarray:
        amplitudes = np.asarray(value, dtype=np.complex128)
        if amplitudes.ndim != 1:
            raise DimensionError(
                f"amplitudes must be a vector, got shape {amplitudes.shape}"
            )
        return freeze(amplitudes)

    @model_validator(mode="after")
    def _check_norm(self) -> State:
        if self.amplitudes.shape[0] != self.register.total_dim:
            raise DimensionError(
                f"{self.amplitudes.shape[0]} amplitudes for a register of total "
                f"dimension {self.register.total_dim}"
            )
        norm = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise NumericValidationError(
                f"state norm {norm!r} differs from 1 by more than {NORM_TOL}"
            )
        return self

    @classmethod
    def from_amplitudes(
        cls, register: Register, amplitudes: np.ndarray, normalize: bool = False
    ) -> State:
        amplitudes = np.asarray(amplitudes, dtype=np.complex128)
        if normalize:
            norm = np.linalg.norm(amplitudes)
            if norm == 0:
                raise NumericValidationError("cannot normalise the zero vector")
            amplitudes = amplitudes / norm
        return cls(register=register, amplitudes=amplitudes)

    @property
    def dims(self) -> tuple[int, ...]:
        return self.register.dims

    def amplitude(self, digits: Sequence[int]) -> complex:
        return complex(self.amplitudes[self.register.index_of(digits)])

    def overlap(self, other: State) -> complex:
        """``<self|other>``."""
        if self.register != other.register:
            raise DimensionError("states live on different registers")
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def basis_state(register: Register | Sequence[int], digits: Sequence[int]) -> State:
    """Computational basis state ``|digits>``."""
    if not isinstance(register, Register):
        register = Register(dims=register)
    amplitudes = np.zeros(register.total_dim, dtype=np.complex128)
    amplitudes[register.index_of(digits)] = 1.0
    return State(register=register, amplitudes=amplitudes)


def uniform_state(register: Register | Sequence[int]) -> State:
    if not isinstance(register, Register):
        register = Register(dims=register)
    n = register.total_dim
    return State(register=register, amplitudes=np.full(n, 1.0 / np.sqrt(n)))
