from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings

from toroidal_freefield import scalar as S
from toroidal_freefield.scalar import I, OMEGA, ONE, SQRT2, SQRT3, ZERO, ZETA, Scalar

from .conftest import scalars

ZETA_C = cmath.exp(2j * cmath.pi / 24)


def test_defining_identities():
    assert S.mul(SQRT2, SQRT2) == S.from_rational(2)
    assert SQRT3 * SQRT3 == 3
    assert OMEGA ** 3 == ONE and OMEGA != ONE
    assert S.is_zero(S.add(S.add(S.mul(OMEGA, OMEGA), OMEGA), ONE))
    assert I * I == -1


def test_constants_as_zeta_sums():
    assert SQRT2 == Scalar.zeta_power(3) + Scalar.zeta_power(21)
    assert SQRT3 == Scalar.zeta_power(2) + Scalar.zeta_power(22)
    assert OMEGA == Scalar.zeta_power(8)
    assert ZETA ** 24 == ONE and ZETA ** 12 == -1


def test_constants_numerically():
    # floating-point evaluation of the root-of-unity sums, 12 digits
    assert abs(ZETA_C ** 3 + ZETA_C ** 21 - 2 ** 0.5) < 1e-12
    assert abs(ZETA_C ** 2 + ZETA_C ** 22 - 3 ** 0.5) < 1e-12
    assert abs(ZETA_C ** 8 - cmath.exp(2j * cmath.pi / 3)) < 1e-12
    for c, want in [(SQRT2, 2 ** 0.5), (SQRT3, 3 ** 0.5), (OMEGA, cmath.exp(2j * cmath.pi / 3)), (I, 1j)]:
        assert abs(c.to_complex() - want) < 1e-12


def test_inverse_of_zero_is_reported():
    with pytest.raises(ZeroDivisionError, match="division by zero in scalar field"):
        S.inv(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_rational_interop():
    half = Scalar.from_rational(Fraction(1, 2))
    assert half == Fraction(1, 2)
    assert hash(half) == hash(Fraction(1, 2))
    assert hash(Scalar.from_rational(3)) == hash(3)
    assert (SQRT2 / 2) * 2 == SQRT2
    assert S.neg(SQRT2) + SQRT2 == 0
    assert half.is_rational() and not half.is_integer() and Scalar.from_rational(4).is_integer()
    assert half.to_fraction() == Fraction(1, 2)


def test_conjugation():
    assert SQRT2.conj() == SQRT2 and SQRT3.conj() == SQRT3
    assert OMEGA.conj() == OMEGA * OMEGA
    assert I.conj() == -I


def test_renderings():
    assert (SQRT2 / 2).poly_str() == "1/2*z + 1/2*z^3 - 1/2*z^5"
    assert ZERO.poly_str() == "0"
    assert SQRT2.pretty() == "sqrt2"
    assert (-SQRT2).pretty() == "-sqrt2"
    assert OMEGA.pretty() == "w"
    assert (OMEGA * OMEGA).pretty() == "w^2"
    assert Scalar.from_rational(Fraction(-3, 4)).pretty() == "-3/4"
    assert (1 + SQRT2 * SQRT3).pretty() == "1 + sqrt2*sqrt3"


@settings(max_examples=200, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    if not a.is_zero():
        assert a * S.inv(a) == ONE
        assert (b / a) * a == b


@settings(max_examples=200, deadline=None)
@given(scalars(), scalars())
def test_complex_embedding(a, b):
    # the power-basis reduction agrees with evaluation at zeta
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-9
    assert abs(a.conj().to_complex() - a.to_complex().conjugate()) < 1e-9
