from __future__ import annotations

from toroidal_freefield.lattice import AlgebraType
from toroidal_freefield.realization import Variant
from toroidal_freefield.scalar import ONE, ZERO, Scalar
from toroidal_freefield.tables import dump_rho, nullspace, render_tables, tables


def test_nullspace_small():
    one, two = ONE, Scalar.from_rational(2)
    [v] = nullspace([[one, two, ZERO], [ZERO, ZERO, one]], 3)
    assert v == [-2, 1, 0]
    assert nullspace([[one]], 1) == []
    assert len(nullspace([], 2)) == 2


def test_d4_table():
    data = tables(AlgebraType.make("d4"))
    assert data["cartan_matrix"] == [[2, -1, 0], [-1, 2, -3], [0, -1, 2]]
    assert data["d"] == ["1/3", "1/3", "1"]
    assert data["theta0_norm"] == "2/3"
    assert data["level"] == ["-2", "0"]
    assert data["k1"] == "6"
    assert data["c6"] == ["3", "3", "1"]
    assert data["alpha_pairs"]["1,2"] == {"relation": 3, "k": "-3"}
    assert data["alpha_kernel"] == [["1", "2", "3"]] and data["alpha_kernel_dim"] == 1
    text = render_tables(data)
    assert "level (k0, k1) = (-2, 0)" in text
    assert "dim 1  (1, 2, 3)" in text


def test_levels_by_family():
    for fam, n, level in [("a-odd", 3, "-1"), ("a-even", 2, "-1"), ("d-series", 2, "-2")]:
        for variant in Variant:
            assert tables(AlgebraType.make(fam, n), variant)["rho_c"] == level


def test_dump_rho():
    rows = dict(dump_rho(AlgebraType.make("a-odd", 3)))
    assert rows["c"] == "-1"
    assert rows["X(+alpha_3)"] == ":e(3) e*(b3):(z)"
    assert len(rows) == 1 + 3 * 4
