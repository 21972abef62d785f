# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Expansion of ``C_m[R]`` into two-qudit controlled gates with ancillas.

Each ancilla is a counter that starts at ``|0>`` and climbs one level per
satisfied control through controlled level transpositions; its final step
jumps to ``|d-1>``. A counter therefore only reaches ``|d-1>`` when every
control it absorbed sat at ``|d-1>``. The first ancilla absorbs ``d - 1``
controls and every later one absorbs the previous ancilla plus ``d - 2`` new
controls, which needs ``ceil((m - 2) / (d - 2))`` ancillas for ``m - 1``
controls. The counters are uncomputed in reverse afterwards.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..core import Gate
from ..errors import DimensionError, InvalidParameterError
from .ops import ElementaryOp

__all__ = (
    "MultiControlledExpansion",
    "ancilla_count",
    "expand_multicontrolled",
    "multicontrolled_ops",
)


class MultiControlledExpansion(BaseModel):
    """Ops on local sites: controls ``0..m-2``, target ``m-1``, ancillas after."""

    model_config = ConfigDict(frozen=True)

    m: int
    d: int
    ancillas: int
    ops: tuple[ElementaryOp, ...]

    @property
    def n_sites(self) -> int:
        return self.m + self.ancillas


def ancilla_count(m: int, d: int) -> int:
    return max(0, math.ceil((m - 2) / (d - 2)))


def _counter_chain(
    controls: Sequence[int], ancillas: Sequence[int], d: int
) -> list[ElementaryOp]:
    """Compute ops that leave the last ancilla at ``|d-1>`` iff all controls are."""
    ops: list[ElementaryOp] = []
    pending = list(controls)
    previous: int | None = None
    for ancilla in ancillas:
        feeds = [previous] if previous is not None else []
        take = d - 1 - len(feeds)
        feeds += pending[:take]
        pending = pending[take:]
        for level, control in enumerate(feeds[:-1]):
            ops.append(ElementaryOp.permutation(d, level, level + 1, ancilla, control))
        ops.append(
            ElementaryOp.permutation(d, len(feeds) - 1, d - 1, ancilla, feeds[-1])
        )
        previous = ancilla
    if pending:
        raise InvalidParameterError(f"{len(pending)} controls left without an ancilla")
    return ops


def expand_multicontrolled(m: int, R: Gate, d: int) -> MultiControlledExpansion:
    """Realise ``C_m[R]`` with ``C_2`` gates; ``R`` acts on a ``d``-level target."""
    m, d = int(m), int(d)
    if d < 3:
        raise InvalidParameterError(
            "counter-chain expansion needs d >= 3; use standard qubit Toffoli "
            "constructions for d = 2"
        )
    if m < 2:
        raise InvalidParameterError(f"expand_multicontrolled needs m >= 2, got {m}")
    if R.signature != (d,):
        raise DimensionError(f"target gate must act on one d={d} site")

    target = m - 1
    if m == 2:
        ops = [ElementaryOp.from_gate(R, target, 0)]
        return MultiControlledExpansion(m=m, d=d, ancillas=0, ops=tuple(ops))

    r = ancilla_count(m, d)
    ancillas = list(range(m, m + r))
    compute = _counter_chain(list(range(m - 1)), ancillas, d)
    ops = compute + [ElementaryOp.from_gate(R, target, ancillas[-1])]
    ops += list(reversed(compute))
    logger.debug(f"C_{m}[{R.name or 'unitary'}] at d={d}: {len(ops)} ops, {r} ancillas")
    return MultiControlledExpansion(m=m, d=d, ancillas=r, ops=tuple(ops))


def multicontrolled_ops(
    R: Gate,
    target: int,
    controls: Mapping[int, int],
    d: int,
    ancilla_sites: Sequence[int] = (),
) -> list[ElementaryOp]:
    """``R`` on ``target`` conditioned on each ``controls[site] == value``.

    Controls waiting for a value other than ``d - 1`` are conjugated with the
    transposition ``|value> <-> |d-1>``.
    """
    if not controls:
        return [ElementaryOp.from_gate(R, target)]

    sites = list(controls)
    flips = [
        ElementaryOp.permutation(d, value, d - 1, site)
        for site, value in controls.items()
        if value != d - 1
    ]
    expansion = expand_multicontrolled(len(sites) + 1, R, d)
    if expansion.ancillas > len(ancilla_sites):
        raise DimensionError(
            f"C_{len(sites) + 1} needs {expansion.ancillas} ancillas, "
            f"{len(ancilla_sites)} available"
        )
    mapping = sites + [target] + list(ancilla_sites[: expansion.ancillas])
    body = [op.relabel(mapping) for op in expansion.ops]
    return flips + body + flips
