# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Elementary operations of the universal set and the compile report.
"""

from __future__ import annotations

from typing import Any, Literal, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..core import Circuit, Gate, Register
from ..errors import DimensionError, InvalidParameterError
from ..gates import controlled, gate_spec, level_swap, phase_zd, rot_x
from ..gates.registry import as_complex

__all__ = (
    "OpKind",
    "ElementaryOp",
    "DecompositionReport",
    "ops_to_circuit",
    "cancel_permutations",
)

OpKind = Literal[
    "rot_x",
    "phase_zd",
    "controlled_rot",
    "controlled_phase",
    "permutation",
    "controlled_gate",
]

_SINGLE_KINDS = {"rot_x", "phase_zd"}
_CONTROLLED_KINDS = {"controlled_rot", "controlled_phase", "controlled_gate"}
_KIND_BY_NAME = {"rot_x": "rot_x", "phase_zd": "phase_zd", "level_swap": "permutation"}


class ElementaryOp(BaseModel):
    """One gate of ``{X^(l), Z_d(theta), C_2[R]}`` plus level permutations.

    ``target`` is the single-qudit gate; two ``sites`` mean it is controlled by
    ``sites[0]`` being ``|d-1>``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: OpKind
    target: Gate
    sites: tuple[int, ...]

    @model_validator(mode="after")
    def _check_kind(self) -> ElementaryOp:
        if self.target.arity != 1:
            raise DimensionError("elementary ops act with a single-site target gate")
        if len(self.sites) not in (1, 2) or len(set(self.sites)) != len(self.sites):
            raise DimensionError(f"invalid elementary op sites {list(self.sites)}")
        controlled_kind = len(self.sites) == 2
        if self.kind in _SINGLE_KINDS and controlled_kind:
            raise InvalidParameterError(f"{self.kind} acts on one site")
        if self.kind in _CONTROLLED_KINDS and not controlled_kind:
            raise InvalidParameterError(f"{self.kind} needs a control site")
        return self

    @classmethod
    def from_gate(
        cls, target: Gate, site: int, control: int | None = None
    ) -> ElementaryOp:
        """Wrap a single-qudit gate, picking the kind from its constructor name."""
        base = _KIND_BY_NAME.get(target.name or "")
        if control is None:
            if base is None:
                raise InvalidParameterError(
                    f"gate {target.name or 'unitary'} is not an elementary "
                    "single-qudit op"
                )
            return cls(kind=base, target=target, sites=(site,))
        kind = {
            "rot_x": "controlled_rot",
            "phase_zd": "controlled_phase",
            "permutation": "permutation",
        }.get(base, "controlled_gate")
        return cls(kind=kind, target=target, sites=(control, site))

    @classmethod
    def rotation(
        cls,
        d: int,
        l: int,
        x: complex,
        y: complex,
        site: int,
        control: int | None = None,
    ) -> ElementaryOp:
        return cls.from_gate(rot_x(d, l, x, y), site, control)

    @classmethod
    def phase(
        cls, d: int, theta: float, site: int, control: int | None = None
    ) -> ElementaryOp:
        return cls.from_gate(phase_zd(d, theta), site, control)

    @classmethod
    def permutation(
        cls, d: int, p: int, q: int, site: int, control: int | None = None
    ) -> ElementaryOp:
        return cls.from_gate(level_swap(d, p, q), site, control)

    @property
    def d(self) -> int:
        return self.target.dim

    @property
    def params(self) -> dict[str, Any]:
        return dict(self.target.params)

    @property
    def is_controlled(self) -> bool:
        return len(self.sites) == 2

    def to_gate(self) -> Gate:
        return controlled(self.target, 2) if self.is_controlled else self.target

    def matrix(self) -> np.ndarray:
        return self.to_gate().matrix

    def inverse(self) -> ElementaryOp:
        params = self.target.params
        if self.kind in ("rot_x", "controlled_rot"):
            x, y = as_complex(params["x"]), as_complex(params["y"])
            target = rot_x(self.d, params["l"], x.conjugate(), -y)
        elif self.kind in ("phase_zd", "controlled_phase"):
            target = phase_zd(self.d, -params["theta"])
        elif self.kind == "permutation":
            return self
        else:
            target = self.target.adjoint()
        return ElementaryOp(kind=self.kind, target=target, sites=self.sites)

    def relabel(self, mapping: Sequence[int]) -> ElementaryOp:
        """Rename site ``s`` to ``mapping[s]``."""
        return ElementaryOp(
            kind=self.kind,
            target=self.target,
            sites=tuple(mapping[s] for s in self.sites),
        )

    def permutation_key(self) -> tuple | None:
        if self.kind != "permutation":
            return None
        return self.sites, frozenset((self.params["p"], self.params["q"]))

    def to_step(self) -> dict[str, Any]:
        """Circuit-file step record."""
        spec = gate_spec(self.to_gate())
        return {
            "gate": spec["gate"],
            "params": spec["params"],
            "sites": list(self.sites),
        }


def cancel_permutations(ops: Sequence[ElementaryOp]) -> list[ElementaryOp]:
    """Drop adjacent pairs of identical transpositions."""
    out: list[ElementaryOp] = []
    for op in ops:
        key = op.permutation_key()
        if key is not None and out and out[-1].permutation_key() == key:
            out.pop()
            continue
        out.append(op)
    return out


def ops_to_circuit(ops: Sequence[ElementaryOp], register: Register) -> Circuit:
    return Circuit.build(register, [(op.to_gate(), op.sites) for op in ops])


class DecompositionReport(BaseModel):
    """Result of compiling a unitary into elementary operations."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dims: tuple[int, ...]
    ancillas: int
    ops: tuple[ElementaryOp, ...]
    gate_count: int
    bound: int
    reconstruction_error: float
    global_phase: float

    @model_validator(mode="after")
    def _check_counts(self) -> DecompositionReport:
        if self.gate_count != len(self.ops):
            raise InvalidParameterError("gate_count must equal the number of ops")
        if self.reconstruction_error < 0:
            raise InvalidParameterError("reconstruction_error must be >= 0")
        return self

    @property
    def within_bound(self) -> bool:
        return self.gate_count <= self.bound

    @property
    def register(self) -> Register:
        """Compiled register including trailing ancilla sites."""
        return Register(dims=self.dims + (self.dims[0],) * self.ancillas)

    @property
    def two_qudit_count(self) -> int:
        return sum(1 for op in self.ops if op.is_controlled)

    def circuit(self) -> Circuit:
        return ops_to_circuit(self.ops, self.register)

    def summary(self) -> dict[str, Any]:
        counts: dict[str, int] = {}
        for op in self.ops:
            counts[op.kind] = counts.get(op.kind, 0) + 1
        return {
            "dims": list(self.dims),
            "ancillas": self.ancillas,
            "gate_count": self.gate_count,
            "two_qudit_count": self.two_qudit_count,
            "bound": self.bound,
            "within_bound": self.within_bound,
            "reconstruction_error": self.reconstruction_error,
            "global_phase": self.global_phase,
            "counts_by_kind": dict(sorted(counts.items())),
        }
