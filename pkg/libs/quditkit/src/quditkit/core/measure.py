# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
Measurement: exact probabilities and seeded sampling.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .state import State

__all__ = (
    "probabilities",
    "marginal_probabilities",
    "sample",
    "measure_all",
    "histogram",
)


def probabilities(state: State) -> np.ndarray:
    return np.abs(state.amplitudes) ** 2


def marginal_probabilities(state: State, sites: Sequence[int]) -> np.ndarray:
    """Distribution over the digits of ``sites`` (in the given order)."""
    sites = state.register.check_sites(sites)
    dims = state.dims
    probs = probabilities(state).reshape(dims)
    rest = tuple(i for i in range(len(dims)) if i not in sites)
    marginal = probs.sum(axis=rest) if rest else probs
    # remaining axes are in increasing site order
    kept = sorted(sites)
    marginal = np.transpose(marginal, [kept.index(s) for s in sites])
    return marginal.reshape(-1)


def sample(state: State, shots: int, seed: int) -> np.ndarray:
    """``shots`` basis indices drawn from one PCG64 generator seeded with ``seed``."""
    p = probabilities(state)
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    return rng.choice(p.shape[0], size=shots, p=p)


def measure_all(state: State, seed: int) -> tuple[int, ...]:
    index = int(sample(state, 1, seed)[0])
    return state.register.digits_of(index)


def histogram(state: State, shots: int, seed: int) -> dict[tuple[int, ...], int]:
    """Counts keyed by digit tuples, ordered by basis index."""
    indices, counts = np.unique(sample(state, shots, seed), return_counts=True)
    return {
        state.register.digits_of(int(i)): int(c) for i, c in zip(indices, counts)
    }
