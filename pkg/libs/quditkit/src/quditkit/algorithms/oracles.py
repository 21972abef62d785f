# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Classical function tables compiled into exact oracle unitaries.

Oracles count how often they are applied so algorithms can prove they used a
single query.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from pydantic import (
    BaseModel,
    PrivateAttr,
    ValidationInfo,
    field_validator,
    model_validator,
)

from ..core import Gate, State, apply
from ..errors import InvalidParameterError, PromiseViolationError
from ..gates.pauli import check_dim, permutation_matrix

__all__ = ("PermutationOracle", "AffineOracle", "TableOracle", "permutation_sign")


def permutation_sign(mapping: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones (cycle decomposition)."""
    seen = [False] * len(mapping)
    sign = 1
    for start in range(len(mapping)):
        if seen[start]:
            continue
        length, k = 0, start
        while not seen[k]:
            seen[k] = True
            k = mapping[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class _CountingOracle(BaseModel):
    _calls: int = PrivateAttr(default=0)

    @property
    def calls(self) -> int:
        return self._calls

    def reset(self) -> None:
        self._calls = 0

    def gate(self) -> Gate:
        raise NotImplementedError

    def apply(self, state: State, sites: Sequence[int]) -> State:
        """One oracle query."""
        self._calls += 1
        return apply(state, self.gate(), sites)


class PermutationOracle(_CountingOracle):
    """``U_f|x> = |f(x)>`` for a bijection ``f`` on ``{0, ..., d-1}``."""

    d: int
    mapping: tuple[int, ...]

    @model_validator(mode="after")
    def _check_bijection(self) -> PermutationOracle:
        check_dim(self.d)
        if len(self.mapping) != self.d or sorted(self.mapping) != list(range(self.d)):
            raise InvalidParameterError(
                f"mapping {list(self.mapping)} is not a bijection on range({self.d})"
            )
        return self

    @property
    def parity(self) -> str:
        return "even" if permutation_sign(self.mapping) > 0 else "odd"

    def gate(self) -> Gate:
        return Gate(signature=(self.d,), matrix=permutation_matrix(self.mapping))


def _phase_shift_gate(d: int, r: int, table: np.ndarray) -> Gate:
    """``|x>|j> -> |x>|j + f(x) mod d>`` over ``r`` input qudits and one target."""
    xs = np.repeat(np.arange(d**r), d)
    js = np.tile(np.arange(d), d**r)
    mapping = xs * d + (js + table[xs]) % d
    return Gate(signature=(d,) * (r + 1), matrix=permutation_matrix(mapping))


class AffineOracle(_CountingOracle):
    """``f(x) = A_0 + A_1 x_1 + ... + A_r x_r (mod d)``."""

    d: int
    coeffs: tuple[int, ...]

    @field_validator("coeffs", mode="before")
    def _reduce(cls, value, info: ValidationInfo) -> tuple[int, ...]:
        d = check_dim(info.data["d"])
        coeffs = tuple(int(a) % d for a in value)
        if len(coeffs) < 2:
            raise InvalidParameterError("need A_0 and at least one A_i")
        return coeffs

    @property
    def r(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs[1:])

    def table(self) -> np.ndarray:
        shape = (self.d,) * self.r
        digits = np.array(np.unravel_index(np.arange(self.d**self.r), shape))
        return (self.coeffs[0] + np.array(self.coeffs[1:]) @ digits) % self.d

    def gate(self) -> Gate:
        return _phase_shift_gate(self.d, self.r, self.table())


class TableOracle(_CountingOracle):
    """Arbitrary ``f: Z_d^r -> Z_d`` given by its value table (mixed-radix order)."""

    d: int
    r: int
    values: tuple[int, ...]

    @model_validator(mode="after")
    def _check_table(self) -> TableOracle:
        check_dim(self.d)
        if len(self.values) != self.d**self.r:
            raise InvalidParameterError(
                f"table needs {self.d ** self.r} entries, got {len(self.values)}"
            )
        if any(not 0 <= v < self.d for v in self.values):
            raise InvalidParameterError(f"table values must lie in [0, {self.d})")
        return self

    def table(self) -> np.ndarray:
        return np.asarray(self.values)

    def promise(self) -> str:
        """``"constant"`` or ``"balanced"``; anything else breaks the promise."""
        counts = np.bincount(self.table(), minlength=self.d)
        if np.count_nonzero(counts) == 1:
            return "constant"
        if np.all(counts == self.d ** (self.r - 1)):
            return "balanced"
        raise PromiseViolationError(
            "function is neither constant nor balanced "
            f"(value counts {counts.tolist()})"
        )

    def gate(self) -> Gate:
        return _phase_shift_gate(self.d, self.r, self.table())
