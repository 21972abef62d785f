# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

import itertools

import numpy as np
import pytest
from conftest import random_unitary

from quditkit.core import (
    Gate,
    basis_state,
    equal_up_to_global_phase,
    marginal_probabilities,
)
from quditkit.errors import CircuitParseError, DimensionError, InvalidParameterError
from quditkit.gates import (
    GATE_BUILDERS,
    DisplacementIndex,
    Pi8Params,
    build_gate,
    clifford_hierarchy_check,
    controlled,
    ctilde_from_fourier,
    ctilde_x,
    cx_d,
    cx_d_dagger,
    cz_d,
    displacement,
    gate_spec,
    gxor,
    hadamard,
    identity,
    is_prime,
    k_d,
    level_swap,
    match_clifford_form,
    modinv,
    ms_gate,
    mvcg,
    p_gate,
    partial_swap,
    pauli_x,
    pauli_z,
    phase_zd,
    pi8_exponents,
    pi8_gate,
    q_gate,
    qubit_hadamard,
    rot_x,
    rz_fourier,
    sum_gate,
    swap,
    swap_gate,
    swap_gxor,
    toffoli_gate_counts,
    toffoli_qutrit,
    unitary,
    weyl_heisenberg_group,
    x_m,
)


def two_qudit_permutation(d, fn):
    """Brute-force matrix of ``|x, y> -> |fn(x, y)>``."""
    out = np.zeros((d * d, d * d))
    for x, y in itertools.product(range(d), repeat=2):
        a, b = fn(x, y)
        out[(a % d) * d + b % d, x * d + y] = 1
    return out


@pytest.mark.parametrize("d", [2, 3, 5])
def test_pauli_weyl_relations(d):
    x, z = pauli_x(d).matrix, pauli_z(d).matrix
    omega = np.exp(2j * np.pi / d)
    np.testing.assert_allclose(z @ x, omega * x @ z, atol=1e-12)
    np.testing.assert_allclose(np.linalg.matrix_power(x, d), np.eye(d), atol=1e-12)
    np.testing.assert_allclose(np.linalg.matrix_power(z, d), np.eye(d), atol=1e-12)
    h = hadamard(d).matrix
    np.testing.assert_allclose(h.conj().T @ z @ h, x, atol=1e-12)
    np.testing.assert_allclose(h @ h, k_d(d).matrix, atol=1e-12)


@pytest.mark.parametrize("d", [3, 5])
def test_weyl_heisenberg_group(d):
    group = weyl_heisenberg_group(d)
    assert len(group) == d * d
    np.testing.assert_allclose(group[(0, 0)].matrix, np.eye(d), atol=1e-12)
    # displacements are trace-orthogonal
    for (a, da), (b, db) in itertools.combinations(group.items(), 2):
        assert abs(np.trace(da.matrix.conj().T @ db.matrix)) < 1e-9, (a, b)
    with pytest.raises(InvalidParameterError):
        DisplacementIndex(x=d, z=0, d=d)


def test_sum_and_arithmetic_gates():
    d = 3
    np.testing.assert_array_equal(
        sum_gate(d).matrix.real, two_qudit_permutation(d, lambda x, y: (x, x + y))
    )
    np.testing.assert_allclose(cx_d(d).matrix, sum_gate(d).matrix)
    np.testing.assert_allclose(
        cx_d_dagger(d).matrix @ cx_d(d).matrix, np.eye(d * d), atol=1e-12
    )
    np.testing.assert_array_equal(
        gxor(d).matrix.real, two_qudit_permutation(d, lambda x, y: (x, x - y))
    )
    omega = np.exp(2j * np.pi / d)
    expected = np.diag([omega ** (x * y) for x in range(d) for y in range(d)])
    np.testing.assert_allclose(cz_d(d).matrix, expected, atol=1e-12)


def test_q_and_p_gates():
    d = 5
    omega = np.exp(2j * np.pi / d)
    np.testing.assert_allclose(np.diag(q_gate(d, 2).matrix)[2], omega)
    np.testing.assert_allclose(np.diag(p_gate(d, 2).matrix)[2], -(omega**2))
    np.testing.assert_allclose(np.diag(p_gate(d, 2).matrix)[0], 1)
    with pytest.raises(InvalidParameterError):
        q_gate(d, 5)


# -- pi/8 -------------------------------------------------------------------


def test_pi8_golden_value():
    params = Pi8Params(d=5, zp=1, gammap=4, epsp=0)
    assert pi8_exponents(params) == (0, 3, 4, 2, 1)
    gate = pi8_gate(params)
    omega = np.exp(2j * np.pi / 5)
    np.testing.assert_allclose(
        np.diag(gate.matrix), omega ** np.array([0, 3, 4, 2, 1]), atol=1e-12
    )
    assert abs(np.linalg.det(gate.matrix) - 1) < 1e-12


def test_pi8_qutrit_uses_ninth_roots():
    params = Pi8Params(d=3, zp=1, gammap=1, epsp=1)
    assert params.phase_modulus == 9
    assert pi8_exponents(params) == (0, (6 + 2 + 3) % 9, (6 + 1 + 6) % 9)


@pytest.mark.parametrize("d", [2, 4, 9])
def test_pi8_rejects_non_odd_prime(d):
    with pytest.raises(InvalidParameterError):
        Pi8Params(d=d)


def test_modular_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert modinv(12, 5) == 3
    assert modinv(12, 7) == 3
    with pytest.raises(InvalidParameterError):
        modinv(12, 3)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_pi8_is_in_third_level(rng, d):
    for _ in range(50):
        zp, gammap, epsp = (int(v) for v in rng.integers(0, d, size=3))
        gate = pi8_gate(Pi8Params(d=d, zp=zp, gammap=gammap, epsp=epsp))
        assert clifford_hierarchy_check(gate, d), (zp, gammap, epsp)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_pauli_z_is_in_third_level(d):
    assert clifford_hierarchy_check(pauli_z(d), d)


def test_non_clifford_counterexample():
    omega = np.exp(2j * np.pi / 5)
    counterexample = np.diag(omega ** np.array([0, 1, 0, 0, 0]))
    assert not clifford_hierarchy_check(counterexample, 5)


def test_clifford_helpers():
    d = 5
    shifted = displacement(DisplacementIndex(x=2, z=3, d=d)).matrix
    assert match_clifford_form(shifted, d) == (2, 3, 0)
    assert match_clifford_form(random_unitary(d, 2), d) is None
    with pytest.raises(InvalidParameterError):
        clifford_hierarchy_check(hadamard(5), 5)
    with pytest.raises(InvalidParameterError):
        clifford_hierarchy_check(np.eye(3), 5)


# -- single-qudit rotations -------------------------------------------------


def test_rot_x_block():
    d, l = 4, 2
    x, y = 0.6 + 0.2j, -0.3 + 0.5j
    gate = rot_x(d, l, x, y)
    r = np.hypot(abs(x), abs(y))
    a, b = x / r, y / r
    expected = np.eye(d, dtype=complex)
    expected[1:3, 1:3] = [[a, -b], [np.conj(b), np.conj(a)]]
    np.testing.assert_allclose(gate.matrix, expected, atol=1e-12)
    assert gate.params["x"] == [0.6, 0.2]
    for bad in (0, d):
        with pytest.raises(InvalidParameterError):
            rot_x(d, bad, x, y)
    with pytest.raises(InvalidParameterError):
        rot_x(d, 1, 0, 0)


def test_phase_and_permutation_gates():
    d = 4
    np.testing.assert_allclose(
        np.diag(phase_zd(d, 0.3).matrix), [1, 1, 1, np.exp(0.6j)], atol=1e-12
    )
    np.testing.assert_allclose(
        level_swap(d, 1, 3).matrix @ np.eye(d)[:, 1], np.eye(d)[:, 3]
    )
    np.testing.assert_allclose(x_m(d, 2).matrix @ np.eye(d)[:, 0], np.eye(d)[:, 2])
    np.testing.assert_allclose(
        x_m(d, 2).matrix @ x_m(d, 2).matrix, np.eye(d), atol=1e-12
    )
    h = qubit_hadamard(3).matrix
    np.testing.assert_allclose(h[2], [0, 0, 1])
    np.testing.assert_allclose(
        np.diag(rz_fourier(3, 2).matrix), np.exp(2j * np.pi * np.arange(3) / 9)
    )


# -- controlled gates -------------------------------------------------------


def test_controlled_fires_on_top_level():
    d = 3
    r = random_unitary(d, 5)
    gate = controlled(Gate.from_matrix(r), 3)
    expected = np.eye(d**3, dtype=complex)
    expected[-d:, -d:] = r
    np.testing.assert_allclose(gate.matrix, expected, atol=1e-12)
    assert gate.signature == (3, 3, 3)
    with pytest.raises(InvalidParameterError):
        controlled(pauli_x(3), 1)


def test_mvcg_and_ms_gate():
    ops = [identity(3), pauli_x(3), pauli_x(3).power(2)]
    gate = mvcg(ops)
    np.testing.assert_allclose(gate.matrix, sum_gate(3).matrix, atol=1e-12)
    mixed = mvcg([identity(3), x_m(3, 1)])
    assert mixed.signature == (2, 3)
    with pytest.raises(DimensionError):
        mvcg([identity(3), identity(4)])

    ms = ms_gate(3, 1, pauli_x(3))
    blocks = [ms.matrix[i * 3 : (i + 1) * 3, i * 3 : (i + 1) * 3] for i in range(3)]
    np.testing.assert_allclose(blocks[1], pauli_x(3).matrix)
    np.testing.assert_allclose(blocks[0], np.eye(3))


# -- SWAP -------------------------------------------------------------------


@pytest.mark.parametrize("d", range(2, 8))
def test_swap_constructions(d):
    target = two_qudit_permutation(d, lambda x, y: (y, x))
    np.testing.assert_allclose(swap_gate(d).matrix, target, atol=1e-10)
    np.testing.assert_allclose(swap(d).unitary(), target, atol=1e-10)
    np.testing.assert_allclose(swap_gxor(d).unitary(), target, atol=1e-10)
    np.testing.assert_allclose(
        ctilde_from_fourier(d).matrix,
        two_qudit_permutation(d, lambda x, y: (x, -x - y)),
        atol=1e-10,
    )
    np.testing.assert_allclose(
        ctilde_x(d).matrix @ ctilde_x(d).matrix, np.eye(d * d), atol=1e-10
    )
    assert swap(d).two_qudit_count == 3


def test_partial_swap():
    gate = partial_swap(3, 4, 2)
    for i, j in itertools.product(range(3), range(4)):
        col = np.zeros(12)
        col[i * 4 + j] = 1
        image = np.argmax(np.abs(gate.matrix @ col))
        expected = j * 4 + i if i < 2 and j < 2 else i * 4 + j
        assert image == expected
    with pytest.raises(InvalidParameterError):
        partial_swap(3, 4, 4)


# -- Toffoli ----------------------------------------------------------------


def test_toffoli_with_qutrit_target():
    circuit = toffoli_qutrit()
    assert circuit.register.dims == (2, 2, 3)
    assert circuit.two_qudit_count == 3
    full = circuit.unitary()
    # qubit subspace: target levels 0 and 1
    idx = [a * 6 + b * 3 + t for a in range(2) for b in range(2) for t in range(2)]
    restricted = full[np.ix_(idx, idx)]
    toffoli = np.eye(8)
    toffoli[6:, 6:] = [[0, 1], [1, 0]]
    assert equal_up_to_global_phase(restricted, toffoli, tol=1e-8)


def test_toffoli_leaves_no_population_on_level_two():
    circuit = toffoli_qutrit()
    for a, b, t in itertools.product(range(2), repeat=3):
        out = circuit.run(basis_state(circuit.register, (a, b, t)))
        target = marginal_probabilities(out, (2,))
        assert target[2] < 1e-12
        expected = t ^ (a & b)
        assert target[expected] == pytest.approx(1.0)


@pytest.mark.parametrize("n", range(2, 11))
def test_toffoli_gate_counts(n):
    assert toffoli_gate_counts(n) == (2 * n - 1, 2 * n - 3, 12 * n - 11)


def test_toffoli_gate_counts_needs_two_controls():
    with pytest.raises(InvalidParameterError):
        toffoli_gate_counts(1)


# -- registry ---------------------------------------------------------------


def test_registry_rebuilds_named_gates():
    gates = [
        hadamard(3),
        rot_x(4, 2, 0.1 + 0.2j, 0.3),
        pi8_gate(Pi8Params(d=5, zp=1, gammap=4)),
        displacement(DisplacementIndex(x=1, z=2, d=3)),
        controlled(phase_zd(3, 0.4), 2),
        mvcg([identity(3), x_m(3, 1)]),
        unitary(random_unitary(4, 9), (2, 2)),
    ]
    for gate in gates:
        spec = gate_spec(gate)
        assert spec["gate"] in GATE_BUILDERS
        rebuilt = build_gate(spec["gate"], spec["params"])
        assert rebuilt.signature == gate.signature
        np.testing.assert_allclose(rebuilt.matrix, gate.matrix, atol=1e-12)


def test_registry_errors():
    with pytest.raises(CircuitParseError, match="unknown gate"):
        build_gate("no_such_gate", {})
    with pytest.raises(CircuitParseError, match="bad parameters"):
        build_gate("hadamard", {"dimension": 3})
    with pytest.raises(InvalidParameterError):
        build_gate("rot_x", {"d": 3, "l": 5, "x": 1, "y": 0})


@pytest.mark.parametrize(
    "name, params",
    [
        ("controlled", {"R": 5, "m": 2}),
        ("unitary", {"matrix": 3}),
        ("mvcg", {"ops": [1, 2]}),
    ],
)
def test_registry_wraps_wrong_typed_parameters(name, params):
    with pytest.raises(CircuitParseError, match="bad parameters"):
        build_gate(name, params)


def test_registry_needs_mapping_params():
    with pytest.raises(CircuitParseError, match="must be an object"):
        build_gate("hadamard", [3])
