import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qinterference.errors import DimensionMismatch
from qinterference.interference3 import (GHZ_MODE_LABELS, W_MODE_LABELS, coefficient_groups_3q,
                                         ghz_lower_order, i3_quantifier, i_ghz, i_w)
from qinterference.states import (apply_local_unitary, from_pure, random_density,
                                  random_product_state, standard_state, werner_ghz)

from oracle import fft_group_dict, random_unitary


def brute_i3(rho):
    """GHZ and W parts from FFT-extracted groups, written out longhand."""
    g = fft_group_dict(rho)
    s = {p: {"c": g[f"{p}_cos"], "s": g[f"{p}_sin"]} for p in "abc"}
    ghz = 0.0
    for x, y, z in GHZ_MODE_LABELS:
        a, b, c = s["a"][x], s["b"][y], s["c"][z]
        lower = 2 * (a * g[f"bc_{y}{z}"] + b * g[f"ac_{x}{z}"] + c * g[f"ab_{x}{y}"]) - 8 * a * b * c
        ghz += 4 * abs(g[f"t_{x}{y}{z}"] ** 2 - lower ** 2)
    sums = {"ab": 0.0, "ac": 0.0, "bc": 0.0}
    for label in W_MODE_LABELS:
        pair, (t1, t2) = label[:2], label[3:]
        sums[pair] += 4 * abs(g[label] ** 2 - 4 * (s[pair[0]][t1] * s[pair[1]][t2]) ** 2)
    return ghz / 4, (9 / 8) ** 3 * sums["ab"] * sums["ac"] * sums["bc"]


def test_ghz_and_w_class_separation():
    ghz = from_pure(standard_state("ghz"))
    w = from_pure(standard_state("w"))
    assert i_ghz(ghz).total == pytest.approx(1.0, abs=1e-12)
    assert i_w(ghz).total == pytest.approx(0.0, abs=1e-12)
    assert i_w(w).total == pytest.approx(1.0, abs=1e-12)
    assert i_ghz(w).total == pytest.approx(0.0, abs=1e-12)


def test_w_pair_sums_are_eight_ninths():
    # [DERIVED] each pair of W carries coherence 1/3 in two modes
    rep = i_w(from_pure(standard_state("w")))
    for key in ("sum_ab", "sum_ac", "sum_bc"):
        assert rep.components[key] == pytest.approx(8 / 9, abs=1e-14)


@pytest.mark.parametrize("f1, f2", [(0.3, 1.9), (np.pi, -np.pi / 2), (2.5, 0.0)])
def test_phased_w(f1, f2):
    rho = from_pure(standard_state("phased-w", f1, f2))
    assert i_w(rho).total == pytest.approx(1.0, abs=1e-12)
    assert i_ghz(rho).total == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("alpha", np.linspace(0, np.pi / 2, 9))
def test_ghz_alpha_family(alpha):
    rep = i3_quantifier(from_pure(standard_state("ghz-alpha", alpha, 0.4)))
    assert rep.components["i_ghz"] == pytest.approx(np.sin(2 * alpha) ** 2, abs=1e-12)
    assert rep.components["i_w"] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.2, 0.6, 1.0])
def test_werner_ghz_gives_p_squared(p):
    rep = i3_quantifier(werner_ghz(p))
    assert rep.total == pytest.approx(p * p, abs=1e-12)
    assert rep.components["i_w"] == 0.0


def test_plus_plus_plus_has_no_interference():
    # [DERIVED] every pair and triple group factorizes into single groups
    rho = from_pure(standard_state("product", *([np.pi / 2, 0] * 3)))
    g = coefficient_groups_3q(rho)
    assert g.a_cos == pytest.approx(0.5)
    assert g.ab_cc == pytest.approx(0.25 * 2)
    assert i3_quantifier(rho).total < 1e-14


def test_lower_order_combination_matches_cumulant():
    # For a product state the triple group must equal the lower-order combination.
    rng = np.random.default_rng(4)
    rho = from_pure(random_product_state(3, rng))
    g = coefficient_groups_3q(rho)
    for mode in GHZ_MODE_LABELS:
        assert abs(g.triple(mode)) == pytest.approx(abs(ghz_lower_order(g, mode)), abs=1e-14)


@pytest.mark.parametrize("seed", range(4))
def test_matches_fft_assembled_value(seed):
    rho = random_density(8, 1 + 2 * seed, seed).entries
    ghz, w = brute_i3(rho)
    rep = i3_quantifier(rho)
    assert rep.components["i_ghz"] == pytest.approx(ghz, abs=1e-13)
    assert rep.components["i_w"] == pytest.approx(w, abs=1e-13)
    assert rep.total == pytest.approx(ghz + w, abs=1e-13)


def test_report_layout():
    rep = i3_quantifier(werner_ghz(0.5))
    assert [m.mode_label for m in rep.modes] == list(GHZ_MODE_LABELS) + list(W_MODE_LABELS)
    assert all(m.weight == 4 for m in rep.modes)
    assert set(rep.groups) == set(coefficient_groups_3q(werner_ghz(0.5)).as_dict())


def test_wrong_dimension():
    with pytest.raises(DimensionMismatch):
        i3_quantifier(np.eye(4) / 4)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32 - 1))
def test_product_states_give_zero(seed):
    rho = from_pure(random_product_state(3, np.random.default_rng(seed)))
    assert i3_quantifier(rho).total < 1e-10


@settings(max_examples=100, deadline=None)
@given(st.floats(0, np.pi / 2), st.floats(0, 2 * np.pi), st.floats(0, 2 * np.pi),
       st.floats(0, 2 * np.pi), st.floats(0, 2 * np.pi))
def test_ghz_alpha_under_slit_phases_stays_ghz_class(alpha, phi, a, b, c):
    us = [np.diag([1, np.exp(1j * t)]) for t in (a, b, c)]
    rho = apply_local_unitary(from_pure(standard_state("ghz-alpha", alpha, phi)), us)
    rep = i3_quantifier(rho)
    assert rep.components["i_w"] == pytest.approx(0.0, abs=1e-12)
    assert rep.components["i_ghz"] == pytest.approx(np.sin(2 * alpha) ** 2, abs=1e-12)


def test_ghz_general_local_unitary_survey(capsys):
    # Recorded, not asserted: generic local unitaries rotate GHZ out of the
    # slit basis and give it pair/single structure.
    rng = np.random.default_rng(2)
    ghz = from_pure(standard_state("ghz"))
    iw = [i_w(apply_local_unitary(ghz, [random_unitary(rng) for _ in range(3)])).total
          for _ in range(50)]
    print(f"GHZ under random local unitaries: I_W ranges {min(iw):.3g} to {max(iw):.3g}")


def test_qubit_relabelling_survey(capsys):
    # Recorded, not asserted: how far I3 moves when the particles are permuted.
    from itertools import permutations
    worst = 0.0
    for seed in range(30):
        rho = random_density(8, 3, seed).entries.reshape((2,) * 6)
        base = i3_quantifier(rho.reshape(8, 8)).total
        for perm in permutations(range(3)):
            axes = list(perm) + [3 + q for q in perm]
            worst = max(worst, abs(i3_quantifier(rho.transpose(axes).reshape(8, 8)).total - base))
    print(f"I3 relabelling survey: largest change {worst:.3g}")


def test_w_part_exceeds_one_on_rotated_ghz():
    # [DERIVED] a local-unitary orbit point of GHZ where I_W > 1; raw values are not clamped
    rng = np.random.default_rng(2)
    ghz = from_pure(standard_state("ghz"))
    best = max(i_w(apply_local_unitary(ghz, [random_unitary(rng) for _ in range(3)])).total
               for _ in range(50))
    assert best > 1
