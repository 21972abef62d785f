# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
The qudit pi/8 gate and Clifford-hierarchy checks.

For a prime ``d > 3`` the gate is ``diag(omega^{v_k})`` with

    v_k = 12^{-1} k (g + k (6 z + (2k - 3) g)) + k e   (mod d)

where ``12^{-1}`` is the inverse of 12 modulo ``d``. Twelve is not invertible
mod 3, so the qutrit gate uses ninth roots of unity instead:

    v = (0, 6z + 2g + 3e, 6z + g + 6e)   (mod 9)
"""

from __future__ import annotations

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, model_validator

from ..config import UNITARY_TOL
from ..core import Gate
from ..errors import InvalidParameterError
from .pauli import (
    DisplacementIndex,
    displacement,
    omega_power,
    tau_power,
    weyl_heisenberg_group,
)
from .registry import named_gate, register

__all__ = (
    "Pi8Params",
    "is_prime",
    "modinv",
    "pi8_exponents",
    "pi8_gate",
    "match_clifford_form",
    "clifford_hierarchy_check",
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n in (2, 3, 5, 7):
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    for i in range(5, int(n**0.5) + 1, 6):
        if n % i == 0 or n % (i + 2) == 0:
            return False
    return True


def modinv(a: int, d: int) -> int:
    """Inverse of ``a`` modulo ``d`` (extended Euclid)."""
    try:
        return pow(int(a), -1, int(d))
    except ValueError:
        raise InvalidParameterError(f"{a} has no inverse modulo {d}") from None


class Pi8Params(BaseModel):
    """Parameters ``(z', gamma', eps')`` of the pi/8 gate, reduced mod ``d``."""

    model_config = ConfigDict(frozen=True)

    d: int
    zp: int = 0
    gammap: int = 0
    epsp: int = 0

    @model_validator(mode="before")
    @classmethod
    def _reduce(cls, data):
        if not isinstance(data, dict):
            return data
        d = int(data.get("d", 0))
        if d < 3 or not is_prime(d):
            raise InvalidParameterError(f"pi/8 gate needs an odd prime d, got {d}")
        return {
            "d": d,
            **{k: int(data.get(k, 0)) % d for k in ("zp", "gammap", "epsp")},
        }

    @property
    def phase_modulus(self) -> int:
        """Order of the root of unity the exponents refer to."""
        return 9 if self.d == 3 else self.d


def pi8_exponents(params: Pi8Params) -> tuple[int, ...]:
    """Integer exponents ``v_k`` modulo :attr:`Pi8Params.phase_modulus`."""
    d, z, g, e = params.d, params.zp, params.gammap, params.epsp
    if d == 3:
        return (0, (6 * z + 2 * g + 3 * e) % 9, (6 * z + g + 6 * e) % 9)
    inv12 = modinv(12, d)
    return tuple(
        (inv12 * k * (g + k * (6 * z + (2 * k - 3) * g)) + k * e) % d
        for k in range(d)
    )


def pi8_gate(params: Pi8Params) -> Gate:
    exponents = np.array(pi8_exponents(params))
    matrix = np.diag(omega_power(params.phase_modulus, exponents))
    return named_gate(
        "pi8_gate",
        (params.d,),
        matrix,
        d=params.d,
        zp=params.zp,
        gammap=params.gammap,
        epsp=params.epsp,
    )


@register("pi8_gate")
def _pi8_builder(d: int, zp: int = 0, gammap: int = 0, epsp: int = 0) -> Gate:
    return pi8_gate(Pi8Params(d=d, zp=zp, gammap=gammap, epsp=epsp))


def match_clifford_form(
    conjugate: np.ndarray, d: int, atol: float = 1e-9
) -> tuple[int, int, int] | None:
    """Find ``(x, z, gamma)`` with ``conjugate ~ D_(x|z) diag(tau^{gamma k^2})``.

    Agreement is up to a global phase. Returns ``None`` when no triple fits.
    """
    conjugate = np.asarray(conjugate, dtype=np.complex128)
    k2 = np.arange(d) ** 2
    for (x, z), disp in weyl_heisenberg_group(d).items():
        w = disp.matrix.conj().T @ conjugate
        diag = np.diag(w)
        if np.max(np.abs(w - np.diag(diag))) > atol or abs(diag[0]) < 0.5:
            continue
        ratio = diag / diag[0]
        for gamma in range(d):
            if np.allclose(ratio, tau_power(d, gamma * k2), rtol=0.0, atol=atol):
                return x, z, gamma
    return None


def clifford_hierarchy_check(u: Gate | np.ndarray, d: int) -> bool:
    """True iff diagonal ``u`` conjugates both Pauli generators to Clifford form."""
    matrix = u.matrix if isinstance(u, Gate) else np.asarray(u, dtype=np.complex128)
    if matrix.shape != (d, d):
        raise InvalidParameterError(f"expected a {d}x{d} matrix, got {matrix.shape}")
    if np.max(np.abs(matrix - np.diag(np.diag(matrix)))) > UNITARY_TOL:
        raise InvalidParameterError("clifford_hierarchy_check needs a diagonal gate")

    for x, z in ((1, 0), (0, 1)):
        gen = displacement(DisplacementIndex(x=x, z=z, d=d)).matrix
        conjugate = matrix @ gen @ matrix.conj().T
        found = match_clifford_form(conjugate, d)
        if found is None:
            logger.debug(f"D({x}|{z}) conjugate has no Clifford form at d={d}")
            return False
        logger.debug(f"D({x}|{z}) conjugate matches (x, z, gamma)={found}")
    return True
