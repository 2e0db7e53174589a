import numpy as np
import pytest

from qinterference.modes import (Term, derive_groups, evaluate_terms, format_terms, group_name,
                                 parse_expression)
from qinterference.states import random_density

from oracle import fft_group_dict


def test_group_counts():
    # 2 qubits: 4 two-particle + 4 single; 3 qubits: 8 + 12 + 6
    assert len(derive_groups(2)) == 8
    assert len(derive_groups(3)) == 26


def test_two_qubit_expressions():
    g = {k: v.expression() for k, v in derive_groups(2).items()}
    assert g == {
        "cc": "R14+R23", "ss": "-R14+R23", "sc": "I14+I23", "cs": "I14-I23",
        "a_cos": "R13+R24", "a_sin": "I13+I24", "b_cos": "R12+R34", "b_sin": "I12+I34",
    }


def test_three_qubit_sine_of_c_is_imaginary():
    assert derive_groups(3)["c_sin"].expression() == "I12+I34+I56+I78"


@pytest.mark.parametrize("n", [2, 3])
def test_every_coherence_appears_once_per_trig_choice(n):
    # pair (i, j) differing on r particles contributes to 2**r groups, once each
    seen = {}
    for g in derive_groups(n).values():
        for t in g.terms:
            seen[(t.i, t.j)] = seen.get((t.i, t.j), 0) + 1
    dim = 2 ** n
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            r = bin((i - 1) ^ (j - 1)).count("1")
            assert seen[(i, j)] == 2 ** r


@pytest.mark.parametrize("dim", [4, 8])
def test_groups_match_fft_oracle(dim):
    rho = random_density(dim, dim, 99).entries
    ref = fft_group_dict(rho)
    for name, g in derive_groups(dim.bit_length() - 1).items():
        assert evaluate_terms(g.terms, rho) == pytest.approx(ref[name], abs=1e-13)


def test_parse_and_format_round_trip():
    for g in derive_groups(3).values():
        assert parse_expression(g.expression()) == frozenset(g.terms)
    assert format_terms([Term(-1, "R", 1, 8), Term(1, "I", 3, 6)]) == "-R18+I36"


def test_parse_is_order_insensitive():
    assert parse_expression("R23+R14") == parse_expression("R14+R23")
    assert parse_expression("I24-I13") != parse_expression("I13+I24")


def test_group_names():
    assert group_name((0, 1), "cs", 2) == "cs"
    assert group_name((1,), "s", 3) == "b_sin"
    assert group_name((0, 2), "sc", 3) == "ac_sc"
    assert group_name((0, 1, 2), "ssc", 3) == "t_ssc"


def test_evaluate_reads_only_listed_entries():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 3] = 0.3 + 0.1j
    rho[3, 0] = 99  # lower triangle is never read
    assert evaluate_terms(derive_groups(2)["cc"].terms, rho) == pytest.approx(0.3)
    assert evaluate_terms(derive_groups(2)["sc"].terms, rho) == pytest.approx(0.1)
