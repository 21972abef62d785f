# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Name -> constructor registry used by the circuit file format.

Constructors decorated with :func:`register` are addressable as
``{"gate": <name>, "params": {...}}``. Gate-valued parameters nest the same
way; complex scalars travel as ``[re, im]`` pairs and raw matrices as nested
``[re, im]`` lists.
"""

from __future__ import annotations

from typing import Any, Callable, Mapping

import numpy as np

from ..core import Gate
from ..errors import CircuitParseError, QuditKitError

__all__ = (
    "GATE_BUILDERS",
    "register",
    "named_gate",
    "gate_spec",
    "build_gate",
    "encode_matrix",
    "decode_matrix",
    "as_complex",
)

GATE_BUILDERS: dict[str, Callable[..., Gate]] = {}


def register(name: str | None = None):
    def decorator(fn: Callable[..., Gate]) -> Callable[..., Gate]:
        GATE_BUILDERS[name or fn.__name__] = fn
        return fn

    return decorator


def named_gate(name: str, signature, matrix: np.ndarray, **params: Any) -> Gate:
    return Gate(signature=signature, matrix=matrix, name=name, params=params)


def as_complex(value: Any) -> complex:
    """Accept ``complex``, real numbers or ``[re, im]`` pairs."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise CircuitParseError(f"complex value must be [re, im], got {value!r}")
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def encode_complex(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def encode_matrix(matrix: np.ndarray) -> list:
    matrix = np.asarray(matrix, dtype=np.complex128)
    return np.stack([matrix.real, matrix.imag], axis=-1).tolist()


def decode_matrix(value: Any) -> np.ndarray:
    try:
        raw = np.asarray(value, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise CircuitParseError(f"matrix is not numeric: {exc}") from exc
    if raw.ndim != 3 or raw.shape[-1] != 2:
        raise CircuitParseError(
            f"matrix must be a square grid of [re, im] pairs, got shape {raw.shape}"
        )
    return raw[..., 0] + 1j * raw[..., 1]


def gate_spec(gate: Gate) -> dict[str, Any]:
    """Serializable ``{"gate", "params"}`` record for ``gate``."""
    if gate.name is not None and gate.name in GATE_BUILDERS:
        return {"gate": gate.name, "params": dict(gate.params)}
    return {
        "gate": "unitary",
        "params": {
            "matrix": encode_matrix(gate.matrix),
            "signature": list(gate.signature),
        },
    }


def _decode_value(value: Any) -> Any:
    if isinstance(value, Mapping) and "gate" in value:
        return build_gate(value["gate"], value.get("params", {}))
    if isinstance(value, list) and value and all(
        isinstance(v, Mapping) and "gate" in v for v in value
    ):
        return [_decode_value(v) for v in value]
    return value


def build_gate(name: str, params: Mapping[str, Any] | None = None) -> Gate:
    """Instantiate a registered constructor from circuit-file parameters."""
    try:
        builder = GATE_BUILDERS[name]
    except KeyError:
        raise CircuitParseError(f"unknown gate {name!r}") from None
    if not isinstance(params or {}, Mapping):
        raise CircuitParseError(f"params of gate {name!r} must be an object")
    try:
        kwargs = {k: _decode_value(v) for k, v in (params or {}).items()}
        return builder(**kwargs)
    except QuditKitError:
        raise
    except (AttributeError, IndexError, KeyError, TypeError, ValueError) as exc:
        raise CircuitParseError(f"bad parameters for gate {name!r}: {exc}") from exc
