# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

import itertools

import numpy as np
import pytest
from conftest import permutation_sign as sign_by_inversions

from quditkit.algorithms import (
    MEASURED_COUNTS,
    REFERENCE_ESTIMATES,
    TRUE_PHASES,
    AffineOracle,
    PermutationOracle,
    TableOracle,
    bernstein_vazirani,
    closed_form_success,
    control_probability,
    default_iterations,
    deutsch_jozsa,
    dft_matrix,
    grover,
    parity,
    permutation_sign,
    phase_estimate,
    phase_fit,
    qft_circuit,
    qutrit_fourier,
)
from quditkit.errors import (
    InvalidParameterError,
    NumericValidationError,
    PromiseViolationError,
)


def circular_distance(a, b):
    delta = abs(a - b) % (2 * np.pi)
    return min(delta, 2 * np.pi - delta)


# -- QFT --------------------------------------------------------------------


@pytest.mark.parametrize(
    "d, n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)]
)
def test_qft_matches_dft(d, n):
    circuit = qft_circuit(d, n)
    np.testing.assert_allclose(circuit.unitary(), dft_matrix(d**n), atol=1e-9)


def test_qft_gate_counts():
    circuit = qft_circuit(3, 3)
    # three rotations plus one swap
    assert circuit.two_qudit_count == 4
    with pytest.raises(InvalidParameterError):
        qft_circuit(3, 0)


# -- phase estimation -------------------------------------------------------


@pytest.mark.parametrize("big_r", range(9))
def test_phase_estimation_recovers_every_two_digit_phase(big_r):
    u = np.diag([np.exp(2j * np.pi * big_r / 9), 1.0])
    result = phase_estimate(3, 2, u, [1, 0])
    assert result.value == big_r
    assert result.digits == (big_r // 3, big_r % 3)
    assert result.probability == pytest.approx(1.0, abs=1e-9)
    assert result.exact
    assert result.phase == pytest.approx(2 * np.pi * big_r / 9)


@pytest.mark.parametrize("k", range(3))
def test_phase_estimation_qutrit_clock(k):
    omega = np.exp(2j * np.pi / 3)
    u = np.diag([1, omega, omega**2])
    result = phase_estimate(3, 1, u, np.eye(3)[k])
    assert result.digits == (k,)
    assert result.phase == pytest.approx(2 * np.pi * k / 3)


def test_phase_estimation_rejects_non_eigenvector():
    omega = np.exp(2j * np.pi / 3)
    u = np.diag([1, omega, omega**2])
    with pytest.raises(NumericValidationError):
        phase_estimate(3, 1, u, [1, 1, 0])
    with pytest.raises(InvalidParameterError):
        phase_estimate(3, 1, u, [1, 0])
    with pytest.raises(InvalidParameterError):
        phase_estimate(3, 0, u, [1, 0, 0])


def test_phase_estimation_inexact_phase_spreads():
    u = np.diag([np.exp(2j * np.pi * 0.3), 1.0])
    result = phase_estimate(3, 2, u, [1, 0])
    assert not result.exact
    assert result.distribution.sum() == pytest.approx(1.0)
    # 0.3 * 9 = 2.7, the nearest readout is R = 3
    assert result.value == 3


# -- Grover -----------------------------------------------------------------


def test_grover_two_qutrits_matches_closed_form():
    result = grover(3, 2, (1, 2), iterations=2)
    expected = np.sin(5 * np.arcsin(1 / 3)) ** 2
    assert result.success_probability == pytest.approx(expected, abs=1e-10)
    assert result.closed_form == pytest.approx(expected, abs=1e-12)
    assert closed_form_success(9, 2) == pytest.approx(0.98364, abs=1e-5)
    assert default_iterations(9) == 2


@pytest.mark.parametrize("d, n", [(2, 2), (3, 2), (3, 3)])
@pytest.mark.parametrize("k", range(6))
def test_grover_matches_closed_form_sweep(d, n, k):
    result = grover(d, n, (d - 1,) * n, iterations=k)
    expected = np.sin((2 * k + 1) * np.arcsin(d ** (-n / 2))) ** 2
    assert result.success_probability == pytest.approx(expected, abs=1e-9)


def test_grover_two_qubits_is_exact():
    result = grover(2, 2, (1, 1), iterations=1)
    assert result.success_probability == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("marked", [(0, 0), (2, 1), (1, 0)])
def test_grover_does_not_depend_on_target(marked):
    result = grover(3, 2, marked)
    assert result.success_probability == pytest.approx(
        closed_form_success(9, 2), abs=1e-10
    )


def test_grover_with_general_phases():
    result = grover(3, 2, (1, 2), phis=(np.pi / 2, np.pi / 2), iterations=3)
    assert result.closed_form is None
    assert 0.0 <= result.success_probability <= 1.0
    with pytest.raises(InvalidParameterError):
        grover(3, 2, (1, 2), iterations=-1)
    with pytest.raises(InvalidParameterError):
        grover(3, 2, (1, 3))


# -- parity -----------------------------------------------------------------


@pytest.mark.parametrize("mapping", list(itertools.permutations(range(3))))
def test_qutrit_parity_uses_one_query(mapping):
    oracle = PermutationOracle(d=3, mapping=mapping)
    result = parity(oracle)
    expected = "even" if sign_by_inversions(mapping) > 0 else "odd"
    assert result.label == expected
    assert result.outcome == (0 if expected == "even" else 2)
    assert result.probability == pytest.approx(1.0)
    assert result.oracle_calls == 1
    assert oracle.parity == expected


@pytest.mark.parametrize("d", [4, 5, 7])
def test_parity_shifts_and_reflections(d):
    for c in range(d):
        shift = PermutationOracle(d=d, mapping=[(x + c) % d for x in range(d)])
        assert parity(shift).label == "positive"
        reflection = PermutationOracle(d=d, mapping=[(c - x) % d for x in range(d)])
        assert parity(reflection).label == "negative"


def test_parity_rejects_unsupported_permutations():
    with pytest.raises(InvalidParameterError):
        parity(PermutationOracle(d=2, mapping=(1, 0)))
    with pytest.raises(InvalidParameterError):
        parity(PermutationOracle(d=5, mapping=(1, 0, 2, 3, 4)))
    with pytest.raises(InvalidParameterError):
        PermutationOracle(d=3, mapping=(0, 0, 1))


def test_permutation_sign_agrees_with_inversions():
    for mapping in itertools.permutations(range(5)):
        assert permutation_sign(mapping) == sign_by_inversions(mapping)


def test_qutrit_fourier_is_unitary():
    f = qutrit_fourier()
    np.testing.assert_allclose(f.conj().T @ f, np.eye(3), atol=1e-12)


# -- Deutsch-Jozsa and Bernstein-Vazirani -----------------------------------


def test_deutsch_jozsa_affine_constant():
    oracle = AffineOracle(d=3, coeffs=(2, 0, 0))
    result = deutsch_jozsa(oracle)
    assert result.kind == "constant"
    assert result.coeffs == (0, 0)
    assert result.zero_probability == pytest.approx(1.0)
    assert result.oracle_calls == 1


@pytest.mark.parametrize("coeffs", [(1, 2, 1), (0, 0, 4), (3, 1, 0, 2)])
def test_deutsch_jozsa_affine_balanced_reads_coefficients(coeffs):
    d = 5 if max(coeffs) > 2 else 3
    oracle = AffineOracle(d=d, coeffs=coeffs)
    assert not oracle.is_constant
    result = deutsch_jozsa(oracle)
    assert result.kind == "balanced"
    assert result.coeffs == coeffs[1:]
    assert result.zero_probability == pytest.approx(0.0, abs=1e-12)


def test_deutsch_jozsa_all_single_variable_qutrit_oracles():
    for a0, a1 in itertools.product(range(3), repeat=2):
        result = deutsch_jozsa(AffineOracle(d=3, coeffs=(a0, a1)))
        assert result.kind == ("constant" if a1 == 0 else "balanced")
        assert result.coeffs == (a1,)


@pytest.mark.parametrize("d", [3, 5])
def test_deutsch_jozsa_recovers_random_affine_coefficients(rng, d):
    for _ in range(200):
        coeffs = tuple(int(a) for a in rng.integers(0, d, size=3))
        result = deutsch_jozsa(AffineOracle(d=d, coeffs=coeffs))
        assert result.coeffs == coeffs[1:]


def test_deutsch_jozsa_random_balanced_table(rng):
    values = rng.permutation(np.repeat(np.arange(3), 3))
    result = deutsch_jozsa(list(values), d=3, r=2)
    assert result.kind == "balanced"
    assert result.zero_probability == pytest.approx(0.0, abs=1e-12)
    assert result.oracle_calls == 1


def test_deutsch_jozsa_promise_violation():
    with pytest.raises(PromiseViolationError):
        deutsch_jozsa([0] * 8 + [1], d=3, r=2)
    with pytest.raises(InvalidParameterError):
        deutsch_jozsa([0] * 9)
    with pytest.raises(InvalidParameterError):
        TableOracle(d=3, r=2, values=(0,) * 8)


@pytest.mark.parametrize("d, g", [(3, (2, 0, 1)), (5, (4, 0, 2)), (7, (6,))])
def test_bernstein_vazirani(d, g):
    result = bernstein_vazirani(d, len(g), g)
    assert result.string == g
    assert result.probability == pytest.approx(1.0)
    assert result.oracle_calls == 1


def test_bernstein_vazirani_exhaustive_qutrit_pairs():
    for g in itertools.product(range(3), repeat=2):
        assert bernstein_vazirani(3, 2, g).string == g


def test_bernstein_vazirani_validates_string():
    with pytest.raises(InvalidParameterError):
        bernstein_vazirani(3, 2, (1,))
    with pytest.raises(InvalidParameterError):
        bernstein_vazirani(3, 2, (1, 3))


# -- qutrit phase fit -------------------------------------------------------


def test_control_probability_sums_to_one():
    for phi in np.linspace(0, 2 * np.pi, 13):
        total = control_probability(np.arange(3), phi).sum()
        assert total == pytest.approx(1.0)
    assert control_probability(0, 0.0) == pytest.approx(1.0)
    with pytest.raises(InvalidParameterError):
        control_probability(3, 0.0)


@pytest.mark.parametrize("key", sorted(MEASURED_COUNTS))
def test_phase_fit_reproduces_reference_estimates(key):
    result = phase_fit(MEASURED_COUNTS[key])
    target = REFERENCE_ESTIMATES[key] * np.pi
    assert circular_distance(result.phi_hat, target) < 0.02 * np.pi
    assert result.mse >= 0.0


@pytest.mark.parametrize("key", sorted(TRUE_PHASES))
def test_true_phases_regenerate_measured_distributions(key):
    phi = TRUE_PHASES[key] * np.pi
    model = control_probability(np.arange(3), phi)
    measured = np.asarray(MEASURED_COUNTS[key])
    assert model.sum() == pytest.approx(1.0)
    assert np.argmax(model) == np.argmax(measured)
    assert 0.5 * np.abs(model - measured).sum() < 0.1
    result = phase_fit(model, grid_points=4096)
    assert circular_distance(result.phi_hat, phi) < 1e-5


@pytest.mark.parametrize("phi", [0.4, 1.1, 2.5, 4.0, 5.9])
def test_phase_fit_recovers_noiseless_phase(phi):
    counts = 1000 * control_probability(np.arange(3), phi)
    result = phase_fit(counts, grid_points=4096)
    assert circular_distance(result.phi_hat, phi) < 1e-5
    assert result.mse < 1e-12
    assert 0.0 <= result.phi_hat < 2 * np.pi


def test_phase_fit_round_trips_random_phases(rng):
    for phi in rng.uniform(0, 2 * np.pi, size=200):
        counts = control_probability(np.arange(3), phi)
        result = phase_fit(counts, grid_points=2048)
        assert circular_distance(result.phi_hat, phi) < 1e-5


def test_phase_fit_rejects_bad_counts():
    with pytest.raises(InvalidParameterError):
        phase_fit([0.5, 0.5])
    with pytest.raises(InvalidParameterError):
        phase_fit([0.5, -0.1, 0.6])
    with pytest.raises(NumericValidationError):
        phase_fit([0, 0, 0])
