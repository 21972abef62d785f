# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Gate: a unitary matrix annotated with the site dimensions it consumes.
"""

from __future__ import annotations

import math
from typing import Any, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import UNITARY_TOL
from ..errors import DimensionError, NumericValidationError

__all__ = ("Gate", "freeze", "is_unitary")


def freeze(array: np.ndarray) -> np.ndarray:
    """Complex read-only copy of ``array``."""
    out = np.array(array, dtype=np.complex128, copy=True)
    out.setflags(write=False)
    return out


def is_unitary(matrix: np.ndarray, atol: float = UNITARY_TOL) -> bool:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    eye = np.eye(matrix.shape[0])
    return bool(np.allclose(matrix @ matrix.conj().T, eye, rtol=0.0, atol=atol))


class Gate(BaseModel):
    """Unitary acting on sites whose dimensions are ``signature``.

    ``name`` and ``params`` record the constructor that built the gate so that
    circuits can be written back to the circuit-file format.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    signature: tuple[int, ...]
    matrix: np.ndarray
    name: str | None = None
    params: dict[str, Any] = Field(default_factory=dict)

    @field_validator("signature", mode="before")
    def _validate_signature(cls, value) -> tuple[int, ...]:
        if isinstance(value, int):
            value = (value,)
        signature = tuple(int(d) for d in value)
        if not signature or any(d < 2 for d in signature):
            raise DimensionError(f"invalid gate signature {list(signature)}")
        return signature

    @field_validator("matrix", mode="before")
    def _validate_matrix(cls, value) -> np.ndarray:
        matrix = np.asarray(value, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionError(f"gate matrix must be square, got {matrix.shape}")
        return freeze(matrix)

    @model_validator(mode="after")
    def _check_unitary(self) -> Gate:
        size = math.prod(self.signature)
        if self.matrix.shape[0] != size:
            raise DimensionError(
                f"matrix of size {self.matrix.shape[0]} does not match "
                f"signature {list(self.signature)} (size {size})"
            )
        if not is_unitary(self.matrix):
            raise NumericValidationError(
                f"matrix for gate {self.name or 'unitary'} is not unitary "
                f"within {UNITARY_TOL}"
            )
        return self

    @classmethod
    def from_matrix(
        cls, matrix: np.ndarray, signature: Sequence[int] | int | None = None
    ) -> Gate:
        """Raw gate; a missing signature means a single site of full size."""
        matrix = np.asarray(matrix, dtype=np.complex128)
        if signature is None:
            signature = (matrix.shape[0],)
        return cls(signature=signature, matrix=matrix)

    @classmethod
    def identity(cls, signature: Sequence[int] | int) -> Gate:
        if isinstance(signature, int):
            signature = (signature,)
        size = math.prod(signature)
        return cls(
            signature=signature,
            matrix=np.eye(size),
            name="identity" if len(signature) == 1 else None,
            params={"d": int(signature[0])} if len(signature) == 1 else {},
        )

    @property
    def arity(self) -> int:
        return len(self.signature)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_diagonal(self) -> bool:
        off = self.matrix - np.diag(np.diag(self.matrix))
        return not np.any(np.abs(off) > UNITARY_TOL)

    def adjoint(self) -> Gate:
        return Gate(signature=self.signature, matrix=self.matrix.conj().T)

    def power(self, k: int) -> Gate:
        if k < 0:
            return self.adjoint().power(-k)
        return Gate(
            signature=self.signature, matrix=np.linalg.matrix_power(self.matrix, k)
        )

    def __matmul__(self, other: Gate) -> Gate:
        """``A @ B`` applies ``B`` first, then ``A``."""
        if self.signature != other.signature:
            raise DimensionError(
                f"cannot compose signatures {list(self.signature)} "
                f"and {list(other.signature)}"
            )
        return Gate(signature=self.signature, matrix=self.matrix @ other.matrix)

    def tensor(self, other: Gate) -> Gate:
        """Kronecker product; ``self`` occupies the leading sites."""
        return Gate(
            signature=self.signature + other.signature,
            matrix=np.kron(self.matrix, other.matrix),
        )
