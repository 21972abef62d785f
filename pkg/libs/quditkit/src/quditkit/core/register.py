# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Mixed-radix registers.

Site 0 is the most significant digit, so the basis index of digits
``(j_0, ..., j_{n-1})`` is ``j_0 d_1...d_{n-1} + ... + j_{n-1}``.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from ..config import MAX_TOTAL_DIM
from ..errors import DimensionError, InvalidParameterError

__all__ = ("Register",)


class Register(BaseModel):
    """Ordered list of per-site dimensions."""

    model_config = ConfigDict(frozen=True)

    dims: tuple[int, ...]

    @field_validator("dims", mode="before")
    def _validate_dims(cls, value) -> tuple[int, ...]:
        dims = tuple(int(d) for d in value)
        if not dims:
            raise InvalidParameterError("a register needs at least one site")
        for site, d in enumerate(dims):
            if d < 2:
                raise InvalidParameterError(f"site {site} has dimension {d}; need >= 2")
        total = math.prod(dims)
        if total > MAX_TOTAL_DIM:
            raise DimensionError(
                f"total dimension {total} exceeds the supported maximum {MAX_TOTAL_DIM}"
            )
        return dims

    @classmethod
    def uniform(cls, d: int, n: int) -> Register:
        return cls(dims=(d,) * n)

    @property
    def n_sites(self) -> int:
        return len(self.dims)

    @property
    def total_dim(self) -> int:
        return math.prod(self.dims)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.dims)) == 1

    def index_of(self, digits: Sequence[int]) -> int:
        """Mixed-radix index of a digit string."""
        digits = tuple(int(j) for j in digits)
        if len(digits) != self.n_sites:
            raise DimensionError(
                f"expected {self.n_sites} digits for dims {list(self.dims)}, "
                f"got {len(digits)}"
            )
        for site, (j, d) in enumerate(zip(digits, self.dims)):
            if not 0 <= j < d:
                raise InvalidParameterError(
                    f"digit {j} at site {site} is outside [0, {d})"
                )
        return int(np.ravel_multi_index(digits, self.dims))

    def digits_of(self, index: int) -> tuple[int, ...]:
        """Inverse of :meth:`index_of`."""
        if not 0 <= index < self.total_dim:
            raise InvalidParameterError(
                f"index {index} is outside [0, {self.total_dim})"
            )
        return tuple(int(j) for j in np.unravel_index(index, self.dims))

    def sub_dims(self, sites: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.dims[s] for s in sites)

    def check_sites(self, sites: Sequence[int]) -> tuple[int, ...]:
        """Validate a list of site indices: in range and pairwise distinct."""
        sites = tuple(int(s) for s in sites)
        for s in sites:
            if not 0 <= s < self.n_sites:
                raise DimensionError(
                    f"site {s} does not exist in a {self.n_sites}-site register"
                )
        if len(set(sites)) != len(sites):
            raise DimensionError(f"sites {list(sites)} are not distinct")
        return sites

    def extended(self, extra: Sequence[int]) -> Register:
        """Register with additional trailing sites (ancillas)."""
        return Register(dims=self.dims + tuple(extra))
