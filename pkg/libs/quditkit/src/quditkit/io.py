# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
File formats shared by the CLI and by scripts.

- circuit JSON: ``{"dims": [...], "steps": [{"gate", "params", "sites"}, ...]}``
- amplitude CSV: ``index, digits, re, im`` with hyphen-joined digits
- unitary CSV: ``row, col, re, im``, one line per matrix entry
- vector CSV: ``index, re, im``
- counts CSV: ``n, count``
- expansion JSON: ``{"d", "n", "identity", "coeffs": {"0-3": h, ...}}``

Floats are written with ``repr`` precision so every double round-trips.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

import numpy as np
from loguru import logger

from .core import Circuit, Gate, Register, State
from .errors import CircuitParseError, QuditKitError
from .gates import build_gate, gate_spec
from .geodesic import HamiltonianExpansion

__all__ = (
    "circuit_from_dict",
    "circuit_to_dict",
    "load_circuit",
    "save_circuit",
    "amplitudes_csv",
    "read_csv_rows",
    "load_matrix",
    "load_unitary",
    "unitary_csv",
    "load_vector",
    "load_counts",
    "expansion_to_dict",
    "expansion_from_dict",
    "load_expansion",
    "dump_json",
)


def dump_json(payload: Any) -> str:
    """Deterministic JSON: sorted keys, full double precision."""
    return json.dumps(_plain(payload), sort_keys=True, indent=2)


def _plain(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (np.floating, float)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    return value


# -- circuits ---------------------------------------------------------------


def _read_text(path: Path | str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CircuitParseError(f"cannot read file: {exc}", str(path)) from exc
    except UnicodeDecodeError as exc:
        raise CircuitParseError(
            f"not UTF-8 text at byte {exc.start}", str(path)
        ) from exc


def _int_list(value: Any, location: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in value
    ):
        raise CircuitParseError("expected a list of integers", location)
    return value


def circuit_from_dict(data: Any) -> Circuit:
    if not isinstance(data, Mapping):
        raise CircuitParseError("circuit must be a JSON object", "$")
    if "dims" not in data:
        raise CircuitParseError("missing field", "dims")
    register = Register(dims=tuple(_int_list(data["dims"], "dims")))

    raw_steps = data.get("steps", [])
    if not isinstance(raw_steps, list):
        raise CircuitParseError("expected a list", "steps")

    steps: list[tuple[Gate, tuple[int, ...]]] = []
    for i, raw in enumerate(raw_steps):
        where = f"steps[{i}]"
        if not isinstance(raw, Mapping):
            raise CircuitParseError("step must be an object", where)
        for field in ("gate", "sites"):
            if field not in raw:
                raise CircuitParseError("missing field", f"{where}.{field}")
        params = raw.get("params", {})
        if not isinstance(params, Mapping):
            raise CircuitParseError("params must be an object", f"{where}.params")
        try:
            gate = build_gate(str(raw["gate"]), params)
        except CircuitParseError as exc:
            raise CircuitParseError(str(exc), f"{where}.gate") from exc
        sites = tuple(_int_list(raw["sites"], f"{where}.sites"))
        steps.append((gate, sites))
    return Circuit.build(register, steps)


def circuit_to_dict(circuit: Circuit) -> dict[str, Any]:
    return {
        "dims": list(circuit.register.dims),
        "steps": [
            {**gate_spec(step.gate), "sites": list(step.sites)}
            for step in circuit.steps
        ],
    }


def load_circuit(path: Path | str) -> Circuit:
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc
    circuit = circuit_from_dict(data)
    logger.debug(f"loaded {path}: dims={circuit.register.dims} steps={len(circuit)}")
    return circuit


def save_circuit(circuit: Circuit, path: Path | str) -> None:
    Path(path).write_text(dump_json(circuit_to_dict(circuit)) + "\n", encoding="utf-8")


# -- CSV --------------------------------------------------------------------


def _write_rows(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def amplitudes_csv(state: State) -> str:
    dims = state.dims
    rows = []
    for index, amp in enumerate(state.amplitudes):
        digits = "-".join(str(int(k)) for k in np.unravel_index(index, dims))
        rows.append((index, digits, float(amp.real), float(amp.imag)))
    return _write_rows(("index", "digits", "re", "im"), rows)


def unitary_csv(matrix: np.ndarray) -> str:
    matrix = np.asarray(matrix, dtype=np.complex128)
    rows = (
        (r, c, float(matrix[r, c].real), float(matrix[r, c].imag))
        for r in range(matrix.shape[0])
        for c in range(matrix.shape[1])
    )
    return _write_rows(("row", "col", "re", "im"), rows)


def read_csv_rows(path: Path | str, columns: Sequence[str]) -> list[dict[str, str]]:
    """Rows of a headed CSV file, checking that ``columns`` are present."""
    reader = csv.DictReader(io.StringIO(_read_text(path)))
    missing = [c for c in columns if c not in (reader.fieldnames or ())]
    if missing:
        raise CircuitParseError(f"missing columns {missing}", f"{path}:1")
    return list(reader)


def _number(row: Mapping[str, str], column: str, kind, where: str):
    try:
        return kind(row[column])
    except (TypeError, ValueError):
        raise CircuitParseError(
            f"column {column!r} is not a valid {kind.__name__}: {row[column]!r}", where
        ) from None


def load_matrix(path: Path | str) -> np.ndarray:
    """Square matrix from ``row, col, re, im`` CSV; every entry must be present."""
    rows = read_csv_rows(path, ("row", "col", "re", "im"))
    size = int(round(np.sqrt(len(rows))))
    if size * size != len(rows) or size == 0:
        raise CircuitParseError(f"expected N^2 entries, got {len(rows)}", str(path))
    matrix = np.zeros((size, size), dtype=np.complex128)
    seen = np.zeros((size, size), dtype=bool)
    for line, row in enumerate(rows, start=2):
        where = f"{path}:{line}"
        r = _number(row, "row", int, where)
        c = _number(row, "col", int, where)
        if not (0 <= r < size and 0 <= c < size):
            raise CircuitParseError(f"entry ({r}, {c}) outside {size}x{size}", where)
        if seen[r, c]:
            raise CircuitParseError(f"duplicate entry ({r}, {c})", where)
        seen[r, c] = True
        matrix[r, c] = complex(
            _number(row, "re", float, where), _number(row, "im", float, where)
        )
    return matrix


def load_unitary(path: Path | str, signature: Sequence[int] | None = None) -> Gate:
    return Gate.from_matrix(load_matrix(path), signature)


def load_vector(path: Path | str) -> np.ndarray:
    rows = read_csv_rows(path, ("index", "re", "im"))
    if not rows:
        raise CircuitParseError("empty vector", str(path))
    vector = np.zeros(len(rows), dtype=np.complex128)
    for line, row in enumerate(rows, start=2):
        where = f"{path}:{line}"
        index = _number(row, "index", int, where)
        if not 0 <= index < len(rows):
            raise CircuitParseError(f"index {index} out of range", where)
        vector[index] = complex(
            _number(row, "re", float, where), _number(row, "im", float, where)
        )
    return vector


def load_counts(path: Path | str) -> np.ndarray:
    """Counts per control outcome ``n`` from an ``n, count`` CSV."""
    rows = read_csv_rows(path, ("n", "count"))
    counts = np.zeros(3, dtype=np.float64)
    for line, row in enumerate(rows, start=2):
        where = f"{path}:{line}"
        n = _number(row, "n", int, where)
        if not 0 <= n <= 2:
            raise CircuitParseError(f"outcome n must be 0, 1 or 2, got {n}", where)
        counts[n] += _number(row, "count", float, where)
    return counts


# -- expansions -------------------------------------------------------------


def expansion_to_dict(expansion: HamiltonianExpansion) -> dict[str, Any]:
    return {
        "d": expansion.d,
        "n": expansion.n,
        "identity": expansion.identity,
        "coeffs": {
            "-".join(str(k) for k in label): h
            for label, h in sorted(expansion.coeffs.items())
        },
    }


def expansion_from_dict(data: Any) -> HamiltonianExpansion:
    if not isinstance(data, Mapping):
        raise CircuitParseError("expansion must be a JSON object", "$")
    for field in ("d", "n", "coeffs"):
        if field not in data:
            raise CircuitParseError("missing field", field)
    if not isinstance(data["coeffs"], Mapping):
        raise CircuitParseError("expected an object", "coeffs")
    coeffs: dict[tuple[int, ...], float] = {}
    for key, value in data["coeffs"].items():
        try:
            label = tuple(int(k) for k in str(key).split("-"))
            coeffs[label] = float(value)
        except (TypeError, ValueError):
            raise CircuitParseError(
                f"bad term {key!r}: {value!r}", f"coeffs.{key}"
            ) from None
        if len(label) != data["n"]:
            raise CircuitParseError(
                f"label has {len(label)} sites, expected {data['n']}", f"coeffs.{key}"
            )
    try:
        return HamiltonianExpansion(
            d=data["d"],
            n=data["n"],
            coeffs=coeffs,
            identity=data.get("identity", 0.0),
        )
    except QuditKitError:
        raise
    except ValueError as exc:
        raise CircuitParseError(str(exc), "$") from exc


def load_expansion(path: Path | str) -> HamiltonianExpansion:
    text = _read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc
    return expansion_from_dict(data)
