import numpy as np
import pytest

from qinterference.errors import ParameterOutOfRange, UnknownFamily
from qinterference.sweeps import sweep


def test_werner_columns_and_rows():
    res = sweep("werner", 11)
    assert res.columns == ("p", "i2", "concurrence", "eof", "discord")
    assert res.rows.shape == (11, 5)
    assert np.allclose(res.column("p"), np.linspace(0, 1, 11))
    assert np.allclose(res.column("i2"), res.column("p") ** 2, atol=1e-12)


def test_werner_endpoint_and_separable_interference():
    res = sweep("werner", 11)
    end = res.row_at(1.0)
    for key in ("i2", "concurrence", "eof", "discord"):
        assert end[key] == pytest.approx(1.0, abs=1e-4)
    row = res.row_at(0.3)
    assert row["concurrence"] == 0.0
    assert row["i2"] == pytest.approx(0.09, abs=1e-12)


def test_werner_ghz_sweep():
    res = sweep("werner-ghz", 6)
    assert res.columns == ("p", "i3", "i_ghz", "i_w", "global_discord")
    assert np.allclose(res.column("i3"), res.column("p") ** 2, atol=1e-12)
    assert np.all(res.column("i_w") == 0)
    assert res.row_at(0.2)["i3"] == pytest.approx(0.04, abs=1e-12)


def test_sweep_is_deterministic():
    a, b = sweep("werner", 5), sweep("werner", 5)
    assert np.array_equal(a.rows, b.rows)


def test_sweep_errors():
    with pytest.raises(UnknownFamily):
        sweep("isotropic")
    with pytest.raises(ParameterOutOfRange):
        sweep("werner", 1)
