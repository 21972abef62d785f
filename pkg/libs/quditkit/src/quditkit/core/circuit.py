# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Circuits: an ordered list of gate applications over a declared register.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import DimensionError
from .gate import Gate, freeze
from .kernels import apply, apply_matrix, check_signature
from .register import Register
from .state import State

__all__ = ("Circuit", "Step")


class Step(BaseModel):
    model_config = ConfigDict(frozen=True)

    gate: Gate
    sites: tuple[int, ...]


class Circuit(BaseModel):
    """Ordered gate applications; steps run first to last."""

    model_config = ConfigDict(frozen=True)

    register: Register
    steps: tuple[Step, ...] = ()

    @model_validator(mode="after")
    def _check_steps(self) -> Circuit:
        for position, step in enumerate(self.steps):
            try:
                check_signature(self.register, step.gate, step.sites)
            except DimensionError as exc:
                raise DimensionError(f"step {position}: {exc}") from exc
        return self

    @classmethod
    def build(
        cls,
        register: Register | Sequence[int],
        steps: Iterable[tuple[Gate, Sequence[int]]] = (),
    ) -> Circuit:
        if not isinstance(register, Register):
            register = Register(dims=register)
        return cls(
            register=register,
            steps=tuple(Step(gate=g, sites=tuple(s)) for g, s in steps),
        )

    def __len__(self) -> int:
        return len(self.steps)

    def then(self, gate: Gate, sites: Sequence[int]) -> Circuit:
        return Circuit(
            register=self.register,
            steps=self.steps + (Step(gate=gate, sites=tuple(sites)),),
        )

    def compose(self, other: Circuit) -> Circuit:
        """``self`` followed by ``other``."""
        if other.register != self.register:
            raise DimensionError(
                f"cannot compose circuits on dims {list(self.register.dims)} "
                f"and {list(other.register.dims)}"
            )
        return Circuit(register=self.register, steps=self.steps + other.steps)

    def inverse(self) -> Circuit:
        return Circuit(
            register=self.register,
            steps=tuple(
                Step(gate=s.gate.adjoint(), sites=s.sites) for s in reversed(self.steps)
            ),
        )

    @property
    def two_qudit_count(self) -> int:
        return sum(1 for s in self.steps if len(s.sites) == 2)

    @property
    def gate_names(self) -> list[str]:
        return [s.gate.name or "unitary" for s in self.steps]

    def run(self, state: State) -> State:
        if state.register != self.register:
            raise DimensionError(
                f"state dims {list(state.dims)} differ from circuit dims "
                f"{list(self.register.dims)}"
            )
        for step in self.steps:
            state = apply(state, step.gate, step.sites)
        return state

    def unitary(self) -> np.ndarray:
        """Full matrix of the circuit, built column-wise with the state kernel."""
        dims = self.register.dims
        out = np.eye(self.register.total_dim, dtype=np.complex128)
        for step in self.steps:
            out = apply_matrix(
                out, dims, step.gate.matrix, step.sites, diagonal=step.gate.is_diagonal
            )
        return freeze(out)

    def as_gate(self) -> Gate:
        return Gate(signature=self.register.dims, matrix=self.unitary())
