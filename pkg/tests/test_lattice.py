from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal_freefield.lattice import (
    C, EPS, EPSBAR, AlgebraType, CVector, Family, LatticeVector, alpha_root, basis, beta, betabar,
    d_const, gram, min_rank, pairing, parse_index, theta0,
)
from toroidal_freefield.scalar import SQRT2, SQRT3, Scalar

from .conftest import ALL_TYPES, small_scalars
from .oracle_roots import dot, roots


def unit(n, idx):
    return LatticeVector.unit(n, idx)


def test_basis_and_labels():
    b = basis(2)
    assert len(b) == AlgebraType.make("d-series", 2).dim == 9
    assert [x.label for x in b] == ["c", "e1", "e2", "e3", "e4", "eb1", "eb2", "eb3", "eb4"]
    assert all(parse_index(x.label) == x for x in b)
    with pytest.raises(ValueError):
        parse_index("q1")


def test_gram_is_orthonormal_with_null_c():
    n = 2
    assert gram(unit(n, EPS(1)), unit(n, EPS(1))) == 1
    assert gram(unit(n, EPS(1)), unit(n, EPSBAR(1))) == 0
    assert gram(unit(n, C), unit(n, C)) == 0
    assert gram(unit(n, C), unit(n, EPS(3))) == 0


def test_pairing_signs():
    n = 2
    a, b = unit(n, EPS(1)), unit(n, EPS(1))
    assert pairing(CVector.of_plus(a), CVector.of_star(b)) == -1
    assert pairing(CVector.of_star(b), CVector.of_plus(a)) == 1
    assert pairing(CVector.of_plus(a), CVector.of_plus(b)) == 0
    assert pairing(CVector.of_star(a), CVector.of_star(b)) == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(small_scalars(), min_size=9, max_size=9), st.lists(small_scalars(), min_size=9, max_size=9))
def test_pairing_antisymmetric_and_gram_symmetric(xs, ys):
    u = LatticeVector(2, dict(zip(basis(2), xs)))
    v = LatticeVector(2, dict(zip(basis(2), ys)))
    assert gram(u, v) == gram(v, u)
    x = CVector(u, v)
    y = CVector(v, u)
    assert pairing(x, y) == -pairing(y, x)


def test_type_validation():
    with pytest.raises(ValueError):
        AlgebraType.make("a-odd", 2)
    with pytest.raises(ValueError):
        AlgebraType.make("d4", 3)
    with pytest.raises(ValueError):
        AlgebraType.make("a-even")
    with pytest.raises(ValueError):
        AlgebraType.make("e6", 2)
    assert AlgebraType.make("d4").n == 2
    assert [min_rank(f) for f in Family] == [3, 2, 2, 2]
    with pytest.raises(IndexError):
        alpha_root(AlgebraType.make("d4"), 3)


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        gram(unit(2, EPS(1)), unit(3, EPS(1)))
    with pytest.raises(ValueError):
        unit(2, EPS(5))


# reference constant tables
D_TABLE = {
    "a-odd": lambda n, i: Fraction(1) if i == n else Fraction(1, 2),
    "a-even": lambda n, i: Fraction(1) if i == 0 else (Fraction(1, 4) if i == n else Fraction(1, 2)),
    "d-series": lambda n, i: Fraction(1, 2) if i in (0, n) else Fraction(1),
    "d4": lambda n, i: (Fraction(1, 3), Fraction(1, 3), Fraction(1))[i],
}


@pytest.mark.parametrize("fam,n", ALL_TYPES)
def test_d_constants_match_table(fam, n):
    t = AlgebraType.make(fam, n)
    for i in t.indices:
        assert d_const(t, i) == D_TABLE[fam](n, i)
        # (alpha_i|alpha_i) = 2 d_i
        assert gram(alpha_root(t, i), alpha_root(t, i)) == 2 * D_TABLE[fam](n, i)


def test_reference_theta0_and_beta():
    n = 3
    e = lambda k: unit(n, EPS(k))  # noqa: E731
    c = unit(n, C)
    assert theta0(AlgebraType.make("a-odd", n)) == (e(1) + e(2)) / SQRT2
    assert theta0(AlgebraType.make("a-even", n)) == SQRT2 * e(1)
    assert theta0(AlgebraType.make("d-series", n)) == e(1)
    d4 = AlgebraType.make("d4")
    e2 = lambda k: unit(2, EPS(k))  # noqa: E731
    assert theta0(d4) == (e2(1) - e2(3)) / SQRT3
    assert beta(AlgebraType.make("a-odd", n)) == -SQRT2 * c + e(1)
    assert beta(AlgebraType.make("a-even", n)) == (-SQRT2 / 2) * c + e(1)
    assert beta(AlgebraType.make("d-series", n)) == -1 * c + e(1)
    assert beta(d4) == -SQRT3 * unit(2, C) + e2(1)
    assert betabar(d4) == -SQRT3 * unit(2, C) + unit(2, EPSBAR(1))


@pytest.mark.parametrize("fam,n", ALL_TYPES)
def test_theta0_norm(fam, n):
    t = AlgebraType.make(fam, n)
    want = {"a-odd": 1, "a-even": 2, "d-series": 1, "d4": Fraction(2, 3)}[fam]
    assert gram(theta0(t), theta0(t)) == want
    assert alpha_root(t, 0) == unit(n, C) - theta0(t)


@pytest.mark.parametrize("fam,n", ALL_TYPES)
def test_roots_match_float_oracle(fam, n):
    t = AlgebraType.make(fam, n)
    ref = roots(fam, n)
    for i in t.indices:
        a = alpha_root(t, i)
        assert gram(a, unit(n, C)) == 0
        for j in t.indices:
            exact = gram(a, alpha_root(t, j)).to_complex()
            assert abs(exact - dot(ref[i], ref[j])) < 1e-12


def test_a_odd_last_root():
    t = AlgebraType.make("a-odd", 4)
    assert alpha_root(t, 4) == SQRT2 * unit(4, EPS(4))


def test_lattice_vector_rendering():
    v = unit(2, C) - Scalar.from_rational(Fraction(1, 2)) * unit(2, EPS(1))
    assert str(v) == "c - 1/2*e1"
    assert str(LatticeVector(2)) == "0"
