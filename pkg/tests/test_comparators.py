import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qinterference.comparators import (MeasurementBasis, bell_diagonal_discord, binary_entropy,
                                       concurrence, discord_2q, entanglement_of_formation,
                                       global_discord_3q, shannon_entropy, von_neumann_entropy,
                                       werner_discord)
from qinterference.errors import DimensionMismatch
from qinterference.states import (BELL_STATES, apply_local_unitary, from_pure, random_density,
                                  random_product_state, standard_state, werner_2q, werner_ghz)

from oracle import concurrence_textbook, random_unitary


def test_entropies():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert shannon_entropy([0.25] * 4) == pytest.approx(2.0)
    assert von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0)
    assert von_neumann_entropy(from_pure(standard_state("ghz"))) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("name", BELL_STATES)
def test_bell_states_are_maximally_entangled(name):
    rho = from_pure(standard_state(name))
    assert concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert entanglement_of_formation(rho) == pytest.approx(1.0, abs=1e-12)
    assert discord_2q(rho) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("p", np.linspace(0, 1, 11))
def test_werner_concurrence(p):
    assert concurrence(werner_2q(p)) == pytest.approx(max(0.0, (3 * p - 1) / 2), abs=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_concurrence_matches_textbook_formula(seed):
    rho = random_density(4, 1 + seed % 4, seed).entries
    assert concurrence(rho) == pytest.approx(concurrence_textbook(rho), abs=1e-7)


@pytest.mark.parametrize("theta", [0.1, 0.4, np.pi / 4])
def test_pure_state_concurrence_and_discord(theta):
    # [DERIVED] C = |sin 2 theta|; discord = EoF = entanglement entropy for pure states
    rho = from_pure(standard_state("phi", theta, 0.3))
    assert concurrence(rho) == pytest.approx(abs(np.sin(2 * theta)), abs=1e-12)
    ent = binary_entropy(np.cos(theta) ** 2)
    assert entanglement_of_formation(rho) == pytest.approx(ent, abs=1e-12)
    assert discord_2q(rho) == pytest.approx(ent, abs=1e-8)


@pytest.mark.parametrize("p", [0.01, 0.1, 0.3, 0.5, 0.8, 1.0])
def test_werner_discord_matches_bell_diagonal_formula(p):
    assert discord_2q(werner_2q(p)) == pytest.approx(werner_discord(p), abs=1e-9)


def test_bell_diagonal_discord_values():
    assert bell_diagonal_discord(0, 0, 0) == pytest.approx(0.0, abs=1e-15)
    assert bell_diagonal_discord(-1, -1, -1) == pytest.approx(1.0, abs=1e-12)
    # classically correlated: only one nonzero correlation
    assert bell_diagonal_discord(0, 0, 0.7) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("seed", range(3))
def test_discord_of_bell_diagonal_states(seed):
    rng = np.random.default_rng(seed)
    c = rng.uniform(-0.3, 0.3, 3)
    paulis = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.diag([1, -1])]
    rho = (np.eye(4) + sum(ci * np.kron(s, s) for ci, s in zip(c, paulis))) / 4
    assert discord_2q(rho) == pytest.approx(bell_diagonal_discord(*c), abs=1e-8)


def test_discord_of_classical_and_product_states():
    assert discord_2q(np.diag([0.1, 0.2, 0.3, 0.4])) == pytest.approx(0.0, abs=1e-9)
    rho = from_pure(random_product_state(2, np.random.default_rng(1)))
    assert discord_2q(rho) == pytest.approx(0.0, abs=1e-8)


def test_discord_measured_party():
    rho = random_density(4, 2, 3)
    a, b = discord_2q(rho, "A"), discord_2q(rho, "B")
    assert a >= 0 and b >= 0
    with pytest.raises(ValueError):
        discord_2q(rho, "C")


def test_measurement_basis_projectors_sum_to_identity():
    for th, ph in [(0, 0), (0.7, 2.1), (np.pi, 1.0)]:
        proj = MeasurementBasis(th, ph).projectors()
        assert np.allclose(proj.sum(axis=0), np.eye(2), atol=1e-12)
        assert np.allclose(proj[0] @ proj[1], 0, atol=1e-12)


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        concurrence(np.eye(8) / 8)
    with pytest.raises(DimensionMismatch):
        global_discord_3q(np.eye(4) / 4)


def test_global_discord_endpoints():
    assert global_discord_3q(werner_ghz(1.0)) == pytest.approx(1.0, abs=1e-6)
    assert global_discord_3q(werner_ghz(0.0)) == pytest.approx(0.0, abs=1e-9)
    assert global_discord_3q(np.diag(np.arange(1, 9) / 36)) == pytest.approx(0.0, abs=1e-9)


def test_global_discord_of_product_state():
    rho = from_pure(random_product_state(3, np.random.default_rng(7)))
    assert global_discord_3q(rho) == pytest.approx(0.0, abs=1e-7)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
def test_concurrence_local_unitary_invariance(seed, rank):
    rng = np.random.default_rng(seed)
    rho = random_density(4, rank, seed)
    out = apply_local_unitary(rho, [random_unitary(rng), random_unitary(rng)])
    assert concurrence(out) == pytest.approx(concurrence(rho), abs=1e-9)
    assert entanglement_of_formation(out) == pytest.approx(entanglement_of_formation(rho), abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4))
def test_measures_bounded(seed, rank):
    rho = random_density(4, rank, seed)
    assert 0 <= concurrence(rho) <= 1 + 1e-12
    assert 0 <= entanglement_of_formation(rho) <= 1 + 1e-12
    assert 0 <= discord_2q(rho) <= 1 + 1e-8
