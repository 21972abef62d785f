# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Generalized Gell-Mann basis of ``su(d)``.

Indices ``j, k`` are 1-based. Matrices keep their textbook normalisation:

* symmetric ``e_jk + e_kj`` for ``j < k``
* antisymmetric ``i (e_jk - e_kj)`` for ``j > k``
* diagonal ``diag(1, ..., 1, -j, 0, ..., 0)`` with ``j`` ones, ``1 <= j <= d-1``

Elements are numbered ``1 .. d^2 - 1`` in that order (symmetric, then
antisymmetric, then diagonal); label 0 is reserved for the identity.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import InvalidParameterError
from ..gates.pauli import check_dim

__all__ = ("BasisElement", "gell_mann_basis", "basis_with_identity")

Kind = Literal["symmetric", "antisymmetric", "diagonal"]


class BasisElement(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: int
    kind: Kind
    indices: tuple[int, ...]
    matrix: np.ndarray

    @property
    def norm_squared(self) -> float:
        """``tr(u^2)``."""
        return float(np.trace(self.matrix @ self.matrix).real)

    @property
    def name(self) -> str:
        return f"u[{','.join(map(str, self.indices))}]"

    def lift(self, site: int, n: int) -> tuple[int, ...]:
        """Product-basis label of this element acting on ``site`` of ``n`` sites."""
        if not 0 <= site < n:
            raise InvalidParameterError(f"site {site} is outside [0, {n})")
        return tuple(self.label if s == site else 0 for s in range(n))


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


@lru_cache(maxsize=16)
def gell_mann_basis(d: int) -> tuple[BasisElement, ...]:
    d = check_dim(d)
    elements: list[BasisElement] = []

    def add(kind: Kind, indices: tuple[int, ...], matrix: np.ndarray) -> None:
        elements.append(
            BasisElement(
                label=len(elements) + 1,
                kind=kind,
                indices=indices,
                matrix=_frozen(matrix),
            )
        )

    for j in range(1, d + 1):
        for k in range(j + 1, d + 1):
            m = np.zeros((d, d), dtype=np.complex128)
            m[j - 1, k - 1] = m[k - 1, j - 1] = 1
            add("symmetric", (j, k), m)
    for j in range(1, d + 1):
        for k in range(1, j):
            m = np.zeros((d, d), dtype=np.complex128)
            m[j - 1, k - 1] = 1j
            m[k - 1, j - 1] = -1j
            add("antisymmetric", (j, k), m)
    for j in range(1, d):
        diag = np.zeros(d, dtype=np.complex128)
        diag[:j] = 1
        diag[j] = -j
        add("diagonal", (j,), np.diag(diag))
    return tuple(elements)


@lru_cache(maxsize=16)
def basis_with_identity(d: int) -> tuple[np.ndarray, ...]:
    """Matrices indexed by label: identity at 0, then the Gell-Mann elements."""
    return (_frozen(np.eye(d, dtype=np.complex128)),) + tuple(
        e.matrix for e in gell_mann_basis(d)
    )
