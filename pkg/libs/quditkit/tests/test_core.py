# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest
from conftest import dense_embed, random_state, random_unitary

from quditkit.core import (
    Circuit,
    Gate,
    Register,
    State,
    apply,
    basis_state,
    embed,
    equal_up_to_global_phase,
    fidelity,
    global_phase_distance,
    histogram,
    marginal_probabilities,
    measure_all,
    probabilities,
    sample,
    uniform_state,
)
from quditkit.core.kernels import apply_matrix
from quditkit.errors import (
    DimensionError,
    InvalidParameterError,
    NumericValidationError,
)
from quditkit.gates import hadamard, pauli_x, pauli_z, sum_gate


def test_register_ordering_site_zero_most_significant():
    reg = Register(dims=(2, 3, 4))
    assert reg.total_dim == 24
    assert reg.index_of((0, 0, 1)) == 1
    assert reg.index_of((0, 1, 0)) == 4
    assert reg.index_of((1, 0, 0)) == 12
    assert reg.digits_of(23) == (1, 2, 3)
    for index in range(reg.total_dim):
        assert reg.index_of(reg.digits_of(index)) == index


@pytest.mark.parametrize(
    "dims, error",
    [
        ((), InvalidParameterError),
        ((3, 1), InvalidParameterError),
        ((2,) * 40, DimensionError),
    ],
)
def test_register_rejects_bad_dims(dims, error):
    with pytest.raises(error):
        Register(dims=dims)


def test_register_digit_out_of_range_names_site():
    reg = Register(dims=(2, 3))
    with pytest.raises(InvalidParameterError, match="site 1"):
        reg.index_of((1, 3))
    with pytest.raises(DimensionError):
        reg.index_of((1,))


def test_gate_validation():
    with pytest.raises(NumericValidationError):
        Gate.from_matrix(np.array([[1, 1], [0, 1]]))
    with pytest.raises(DimensionError):
        Gate(signature=(2, 2), matrix=np.eye(3))
    with pytest.raises(DimensionError):
        Gate(signature=(1,), matrix=np.eye(1))
    gate = Gate.from_matrix(random_unitary(6, 1), (2, 3))
    assert gate.arity == 2
    assert gate.dim == 6
    assert not gate.matrix.flags.writeable


def test_gate_algebra():
    x, z = pauli_x(3), pauli_z(3)
    omega = np.exp(2j * np.pi / 3)
    np.testing.assert_allclose((z @ x).matrix, omega * (x @ z).matrix, atol=1e-12)
    np.testing.assert_allclose(x.power(3).matrix, np.eye(3), atol=1e-12)
    np.testing.assert_allclose(x.power(-1).matrix, x.adjoint().matrix, atol=1e-12)
    np.testing.assert_allclose(
        x.tensor(z).matrix, np.kron(x.matrix, z.matrix), atol=1e-12
    )
    with pytest.raises(DimensionError):
        x @ pauli_x(4)


def test_state_norm_and_length_checks():
    reg = Register(dims=(2, 3))
    with pytest.raises(DimensionError):
        State(register=reg, amplitudes=np.ones(5) / np.sqrt(5))
    with pytest.raises(NumericValidationError):
        State(register=reg, amplitudes=np.ones(6))
    state = State.from_amplitudes(reg, np.ones(6), normalize=True)
    np.testing.assert_allclose(probabilities(state), np.full(6, 1 / 6))


@pytest.mark.parametrize(
    "dims, sites",
    [
        ((3,), (0,)),
        ((2, 3), (1,)),
        ((2, 3, 4), (2, 0)),
        ((3, 2, 4), (1, 2)),
        ((4, 2, 3), (2, 1, 0)),
    ],
)
def test_apply_matches_dense_embedding(rng, dims, sites):
    reg = Register(dims=dims)
    sig = tuple(dims[s] for s in sites)
    gate = Gate.from_matrix(random_unitary(int(np.prod(sig)), 7), sig)
    psi = random_state(reg.total_dim, rng)
    out = apply(State(register=reg, amplitudes=psi), gate, sites)
    expected = dense_embed(gate.matrix, sites, dims) @ psi
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-12)
    np.testing.assert_allclose(
        embed(gate, sites, reg), dense_embed(gate.matrix, sites, dims), atol=1e-12
    )


def test_apply_preserves_norm_on_random_triples(rng):
    for trial in range(100):
        n = int(rng.integers(1, 5))
        dims = tuple(int(d) for d in rng.integers(2, 6, size=n))
        arity = min(n, int(rng.integers(1, 3)))
        sites = tuple(int(s) for s in rng.choice(n, size=arity, replace=False))
        sig = tuple(dims[s] for s in sites)
        gate = Gate.from_matrix(random_unitary(int(np.prod(sig)), trial), sig)
        reg = Register(dims=dims)
        psi = State(register=reg, amplitudes=random_state(reg.total_dim, rng))
        out = apply(psi, gate, sites)
        assert abs(np.linalg.norm(out.amplitudes) - 1.0) < 1e-10


def test_diagonal_kernel_matches_dense_path(rng):
    dims = (3, 2, 4)
    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size=12))
    matrix = np.diag(phases)
    psi = random_state(24, rng)
    for sites in [(2, 0), (0, 2)]:
        diag = apply_matrix(psi, dims, matrix, sites, diagonal=True)
        dense = apply_matrix(psi, dims, matrix, sites, diagonal=False)
        np.testing.assert_allclose(diag, dense, atol=1e-12)


def test_apply_rejects_signature_mismatch():
    state = basis_state((2, 3), (0, 0))
    with pytest.raises(DimensionError, match="site 0 has dimension 2"):
        apply(state, hadamard(3), (0,))
    with pytest.raises(DimensionError):
        apply(state, sum_gate(3), (1, 1))
    with pytest.raises(DimensionError):
        apply(state, hadamard(3), (2,))


def test_basis_and_uniform_states():
    state = basis_state((2, 3), (1, 2))
    assert state.amplitude((1, 2)) == 1
    uniform = uniform_state((3, 3))
    np.testing.assert_allclose(probabilities(uniform), np.full(9, 1 / 9))
    assert abs(state.overlap(state) - 1) < 1e-12


def test_circuit_unitary_and_inverse():
    reg = Register(dims=(3, 3))
    circuit = Circuit.build(
        reg, [(hadamard(3), (0,)), (sum_gate(3), (0, 1)), (pauli_z(3), (1,))]
    )
    expected = (
        dense_embed(pauli_z(3).matrix, (1,), (3, 3))
        @ sum_gate(3).matrix
        @ dense_embed(hadamard(3).matrix, (0,), (3, 3))
    )
    np.testing.assert_allclose(circuit.unitary(), expected, atol=1e-12)
    round_trip = circuit.compose(circuit.inverse())
    np.testing.assert_allclose(round_trip.unitary(), np.eye(9), atol=1e-12)
    assert circuit.two_qudit_count == 1
    assert circuit.gate_names == ["hadamard", "sum_gate", "pauli_z"]

    # GHZ-like state from the same circuit
    out = circuit.run(basis_state(reg, (0, 0)))
    probs = probabilities(out)
    np.testing.assert_allclose(probs[[0, 4, 8]], np.full(3, 1 / 3), atol=1e-12)


def test_circuit_reports_failing_step():
    with pytest.raises(DimensionError, match="step 1"):
        Circuit.build((2, 3), [(pauli_x(2), (0,)), (pauli_x(2), (1,))])


def test_empty_circuit_keeps_state():
    circuit = Circuit.build((3,), [])
    out = circuit.run(basis_state((3,), (0,)))
    np.testing.assert_allclose(out.amplitudes, [1, 0, 0])


def test_marginal_probabilities_respect_site_order(rng):
    reg = Register(dims=(2, 3, 4))
    state = State(register=reg, amplitudes=random_state(24, rng))
    probs = probabilities(state).reshape(2, 3, 4)
    np.testing.assert_allclose(
        marginal_probabilities(state, (2, 0)),
        probs.sum(axis=1).T.reshape(-1),
        atol=1e-12,
    )
    np.testing.assert_allclose(
        marginal_probabilities(state, (1,)), probs.sum(axis=(0, 2)), atol=1e-12
    )


def test_sampling_is_seeded():
    state = uniform_state((3, 3))
    a = sample(state, 1000, seed=11)
    b = sample(state, 1000, seed=11)
    np.testing.assert_array_equal(a, b)
    counts = histogram(state, 1000, seed=11)
    assert sum(counts.values()) == 1000
    assert histogram(state, 1000, seed=11) == counts
    assert measure_all(basis_state((2, 3), (1, 2)), seed=0) == (1, 2)


def test_measure_all_frequencies_follow_born_rule(rng):
    reg = Register(dims=(2, 3))
    state = State(register=reg, amplitudes=random_state(reg.total_dim, rng))
    expected = probabilities(state)
    shots = 2000
    observed = np.zeros(reg.total_dim)
    for seed in range(shots):
        observed[reg.index_of(measure_all(state, seed=seed))] += 1
    freq = observed / shots
    sigma = np.sqrt(expected * (1 - expected) / shots)
    assert np.all(np.abs(freq - expected) <= 3 * sigma + 1e-12)


def test_fidelity():
    psi = np.array([1, 1j, 0]) / np.sqrt(2)
    rho = np.outer(psi, psi.conj())
    assert fidelity(rho, rho) == pytest.approx(1.0)
    other = np.diag([0, 0, 1]).astype(complex)
    assert fidelity(rho, other) == pytest.approx(0.0)
    assert fidelity(np.eye(3) / 3, np.eye(3) / 3) == pytest.approx(1.0)
    with pytest.raises(NumericValidationError):
        fidelity(np.zeros((3, 3)), rho)
    with pytest.raises(NumericValidationError):
        fidelity(np.array([[0, 1], [0, 0]]), np.eye(2))
    with pytest.raises(DimensionError):
        fidelity(np.eye(2), np.eye(3))


def test_global_phase_comparisons():
    u = random_unitary(4, 3)
    v = np.exp(0.7j) * u
    assert equal_up_to_global_phase(u, v)
    assert global_phase_distance(u, v) < 1e-12
    assert not equal_up_to_global_phase(u, random_unitary(4, 4))
    with pytest.raises(DimensionError):
        global_phase_distance(np.eye(2), np.eye(3))
