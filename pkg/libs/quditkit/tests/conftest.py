# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

import itertools

import numpy as np
import pytest
from scipy.stats import unitary_group


@pytest.fixture
def rng():
    return np.random.default_rng(20250721)


def random_unitary(size: int, seed: int) -> np.ndarray:
    return unitary_group.rvs(size, random_state=seed)


def random_state(size: int, rng) -> np.ndarray:
    v = rng.normal(size=size) + 1j * rng.normal(size=size)
    return v / np.linalg.norm(v)


def dense_embed(matrix, sites, dims) -> np.ndarray:
    """Entry-by-entry embedding of ``matrix`` acting on ``sites`` of ``dims``."""
    sites = list(sites)
    sig = [dims[s] for s in sites]
    total = int(np.prod(dims))
    out = np.zeros((total, total), dtype=np.complex128)
    basis = list(itertools.product(*(range(d) for d in dims)))
    for i, row in enumerate(basis):
        for j, col in enumerate(basis):
            if any(row[k] != col[k] for k in range(len(dims)) if k not in sites):
                continue
            a = np.ravel_multi_index([row[s] for s in sites], sig)
            b = np.ravel_multi_index([col[s] for s in sites], sig)
            out[i, j] = matrix[a, b]
    return out


def permutation_sign(mapping) -> int:
    """Sign by inversion count."""
    inversions = sum(
        1
        for i in range(len(mapping))
        for j in range(i + 1, len(mapping))
        if mapping[i] > mapping[j]
    )
    return -1 if inversions % 2 else 1
