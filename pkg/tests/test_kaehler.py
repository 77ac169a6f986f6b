from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal_freefield.kaehler import C0, SDS, TDT, KForm, in_K, reduce, selftest

small = st.integers(-6, 6)


def test_basis_symbols():
    assert str(SDS(2, -1)) == "SDS(2,-1)" and str(TDT(0)) == "TDT(0)" and str(C0) == "C0"
    with pytest.raises(ValueError):
        SDS(1, 0)


def test_examples():
    # s^-1 d(s) is the generator C0, d(s^2) is exact
    assert reduce(-1, 0, 1, 0) == KForm.of(C0)
    assert reduce(0, 0, 2, 0) == 0
    # t^-1 dt
    assert reduce(0, -1, 0, 1) == KForm.of(TDT(0))
    # s t dt = d(s t^2)/2 - t^2 ds / 2
    assert reduce(1, 1, 0, 1) == KForm.of(SDS(1, 2), Fraction(-1, 2))
    assert str(reduce(2, 3, 1, 0)) == "(1) SDS(3,3)"
    assert str(KForm()) == "0"


def test_membership():
    assert in_K(0, 1, 3, 1, 2) and not in_K(0, 1, 3, 0, 2)
    assert in_K(1, 2, 0, 1, 3)


@settings(max_examples=300, deadline=None)
@given(small, small, small, small)
def test_leibniz_and_exactness(p, q, k, m):
    # exact forms vanish
    assert reduce(0, 0, k, m) == 0
    # a db + b da = d(ab) = 0
    assert (reduce(p, q, k, m) + reduce(k, m, p, q)).is_zero()
    # d(f g) = f dg + g df applied to a product with a third monomial h = s t
    lhs = reduce(1, 1, p + k, q + m)
    rhs = reduce(1 + p, 1 + q, k, m) + reduce(1 + k, 1 + m, p, q)
    assert lhs == rhs


def test_selftest_counts():
    rep = selftest(5)
    assert rep.ok
    assert rep.checks == {
        "s^l ds^k": (121, 121),
        "s^l t^-m d(s^k t^m)": (1210, 1210),
        "a db = -b da": (14641, 14641),
    }
    assert rep.to_json()["ok"] is True
