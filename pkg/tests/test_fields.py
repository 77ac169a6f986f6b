from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toroidal_freefield.fields import DistExpr, FieldQuadratic, ddelta, delta, make_quadratic, relabel
from toroidal_freefield.lattice import C, EPS, EPSBAR, CVector, LatticeVector
from toroidal_freefield.scalar import OMEGA, SQRT2

N = 2


def e(i):
    return CVector.of_plus(LatticeVector.unit(N, EPS(i)))


def es(i):
    return CVector.of_star(LatticeVector.unit(N, EPS(i)))


def ebs(i):
    return CVector.of_star(LatticeVector.unit(N, EPSBAR(i)))


def test_make_quadratic_orders_factors():
    f = make_quadratic([(1, e(1), es(2))], N)
    assert f.entries == {(EPS(1), EPS(2)): 1}
    assert make_quadratic([(1, es(2), e(1))], N) == f
    g = make_quadratic([(SQRT2, e(1), ebs(1)), (OMEGA, es(3), e(4))], N)
    assert g[(EPS(1), EPSBAR(1))] == SQRT2
    assert g[(EPS(4), EPS(3))] == OMEGA
    assert g.render("z") == "sqrt2 :e(1) e*(b1):(z) + w :e(4) e*(3):(z)"


def test_make_quadratic_expands_linear_combinations():
    v = LatticeVector.unit(N, C) + 2 * LatticeVector.unit(N, EPS(1))
    f = make_quadratic([(1, CVector.of_plus(v), CVector.of_star(v))], N)
    assert f.entries == {(C, C): 1, (C, EPS(1)): 2, (EPS(1), C): 2, (EPS(1), EPS(1)): 4}
    assert f.drop_null().entries == {(EPS(1), EPS(1)): 4}


def test_make_quadratic_rejects_unmixed():
    with pytest.raises(ValueError, match="mixed"):
        make_quadratic([(1, e(1), e(2))], N)
    with pytest.raises(ValueError):
        make_quadratic([(1, es(1), es(2))], N)


def test_field_arithmetic():
    f = make_quadratic([(1, e(1), es(2))], N)
    assert (f - f).is_zero()
    assert (2 * f).entries[(EPS(1), EPS(2))] == 2
    assert f.transpose().entries == {(EPS(2), EPS(1)): 1}
    assert (OMEGA * f).conj() == (OMEGA * OMEGA) * f
    assert str(FieldQuadratic.zero(N)) == "0"
    with pytest.raises(ValueError):
        f + FieldQuadratic.zero(3)


def test_delta_constructors():
    with pytest.raises(ValueError):
        delta(1, 1)
    with pytest.raises(ValueError):
        ddelta(2, 2)
    assert str(delta(2, 1)) == "d(z2-z1)"
    assert str(ddelta(2, 1)) == "dd_z1(z2-z1)"


def test_relabel_moves_to_lowest_connected_variable():
    f = make_quadratic([(1, e(1), es(2))], N)
    ex = DistExpr.of_field(f, 3, [delta(3, 2), delta(2, 1)])
    out = relabel(ex)
    assert [(v, ch) for v, ch, _ in out.field_terms()] == [(1, (delta(2, 1), delta(3, 2)))]
    # a derivative delta does not connect variables
    ex2 = DistExpr.of_field(f, 2, [ddelta(2, 1)])
    assert [v for v, _, _ in relabel(ex2).field_terms()] == [2]


def test_relabel_is_idempotent_and_merges():
    f = make_quadratic([(1, e(1), es(2))], N)
    ex = DistExpr.of_field(f, 2, [delta(2, 1)]) + DistExpr.of_field(f, 1, [delta(2, 1)])
    once = relabel(ex)
    assert len(once) == 1
    assert relabel(once).fields == once.fields
    assert once == ex
    assert (ex - ex).is_zero()


# brute-force Laurent expansion

R = 9
WINDOW = range(-3, 4)


def _expand(var, chain, modes, nvars=3):
    """Coefficients of a(z_var) * chain, a(z) = sum_m a_m z^(-m-1)."""
    out = Counter()
    for ks in itertools.product(range(-R, R + 1), repeat=len(chain)):
        exps = [0] * (nvars + 1)
        coeff = 1
        for d, k in zip(chain, ks):
            exps[d.u] += k
            exps[d.v] += -k - (2 if d.derivative else 1)
            if d.derivative:
                coeff *= -k - 1
        for m, a in modes.items():
            ex = list(exps)
            ex[var] += -m - 1
            out[tuple(ex[1:])] += coeff * a
    return out


CHAINS = [
    (delta(2, 1),),
    (ddelta(2, 1),),
    (delta(2, 1), delta(3, 1)),
    (delta(2, 1), ddelta(3, 1)),
    (ddelta(2, 1), delta(3, 2)),
    (delta(3, 2), delta(2, 1)),
    (ddelta(3, 1), ddelta(2, 1)),
]


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(CHAINS),
    st.integers(1, 3),
    st.dictionaries(st.integers(-2, 2), st.integers(-5, 5).filter(bool), min_size=1, max_size=3),
)
def test_relabel_preserves_mode_expansion(chain, var, modes):
    f = make_quadratic([(1, e(1), es(2))], N)
    src = DistExpr.of_field(f, var, chain)
    [(new_var, new_chain, _)] = list(relabel(src).field_terms())
    before = _expand(var, chain, modes)
    after = _expand(new_var, new_chain, modes)
    for key in itertools.product(WINDOW, repeat=3):
        assert before[key] == after[key], key
