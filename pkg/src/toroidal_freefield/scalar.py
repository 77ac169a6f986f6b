"""Exact arithmetic in the cyclotomic field Q(zeta), zeta a primitive 24th root of unity.

Elements are stored in the power basis 1, zeta, ..., zeta^7 modulo the 24th
cyclotomic polynomial x^8 - x^4 + 1.  The field contains sqrt(2), sqrt(3),
i and omega = exp(2 pi i / 3), which covers every coefficient used by the
free-field tables.

Numerators are Python ints over one shared positive denominator; the pair is
kept in lowest terms so that equality and hashing are structural.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

DEGREE = 8
ORDER = 24

Rational = Union[int, Fraction]


def _reduce(coeffs: list[int]) -> list[int]:
    # x^8 = x^4 - 1
    for k in range(len(coeffs) - 1, DEGREE - 1, -1):
        c = coeffs[k]
        if c:
            coeffs[k - 4] += c
            coeffs[k - 8] -= c
    return coeffs[:DEGREE] + [0] * (DEGREE - len(coeffs))


class Scalar:
    """An immutable element of Q(zeta_24)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den: int = 1, _normalized: bool = False) -> None:
        num = tuple(num)
        if len(num) != DEGREE:
            raise ValueError(f"expected {DEGREE} coordinates, got {len(num)}")
        if not _normalized:
            if den == 0:
                raise ZeroDivisionError("division by zero in scalar field")
            if den < 0:
                num = tuple(-a for a in num)
                den = -den
            g = math.gcd(den, *num)
            if g > 1:
                num = tuple(a // g for a in num)
                den //= g
            if not any(num):
                den = 1
        self.num = num
        self.den = den
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, q: Rational) -> Scalar:
        q = Fraction(q)
        return cls((q.numerator, 0, 0, 0, 0, 0, 0, 0), q.denominator)

    @classmethod
    def from_coords(cls, coords) -> Scalar:
        """Build from eight rational coordinates in the power basis."""
        fracs = [Fraction(c) for c in coords]
        den = math.lcm(*(f.denominator for f in fracs))
        return cls(tuple(f.numerator * (den // f.denominator) for f in fracs), den)

    @classmethod
    def zeta_power(cls, k: int) -> Scalar:
        return _zeta_power(k % ORDER)

    @staticmethod
    def coerce(x) -> Scalar:
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # -- queries ------------------------------------------------------------

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.den == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / ORDER)
        return sum(a * z**k for k, a in enumerate(self.num)) / self.den

    def conj(self) -> Scalar:
        """Complex conjugation (zeta -> zeta^-1); fixes sqrt2, sqrt3 and swaps omega, omega^2."""
        out = ZERO
        for k, a in enumerate(self.num):
            if a:
                out = out + _zeta_power((-k) % ORDER) * a
        return out / self.den

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.from_rational(other)
            else:
                return NotImplemented
        d1, d2 = self.den, other.den
        if d1 == d2:
            return Scalar(tuple(a + b for a, b in zip(self.num, other.num)), d1)
        return Scalar(tuple(a * d2 + b * d1 for a, b in zip(self.num, other.num)), d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(tuple(-a for a in self.num), self.den, _normalized=True)

    def __sub__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = Scalar.from_rational(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __mul__(self, other) -> Scalar:
        if isinstance(other, int):
            return Scalar(tuple(a * other for a in self.num), self.den)
        if isinstance(other, Fraction):
            return Scalar(tuple(a * other.numerator for a in self.num), self.den * other.denominator)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self.num, other.num
        if not any(a[1:]):
            return Scalar(tuple(a[0] * y for y in b), self.den * other.den)
        if not any(b[1:]):
            return Scalar(tuple(x * b[0] for x in a), self.den * other.den)
        prod = [0] * (2 * DEGREE - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Scalar(_reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("division by zero in scalar field")
        if self.is_rational():
            return Scalar.from_rational(Fraction(self.den, self.num[0]))
        # solve (self * x) = 1 in the power basis
        cols = [(self * _zeta_power(j)).coords for j in range(DEGREE)]
        rows = [[cols[j][i] for j in range(DEGREE)] + [Fraction(int(i == 0))] for i in range(DEGREE)]
        return Scalar.from_coords(_solve(rows))

    def __truediv__(self, other) -> Scalar:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in scalar field")
            return self * (1 / Fraction(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> Scalar:
        return Scalar.coerce(other) * self.inv()

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- rendering ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Scalar({self.pretty()})"

    def __str__(self) -> str:
        return self.pretty()

    def poly_str(self) -> str:
        """Render as a polynomial in zeta, e.g. ``z - z^5 + z^3``."""
        parts = []
        for k, c in enumerate(self.coords):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                parts.append(_signed_term(c, mono))
        return _join(parts)

    def pretty(self) -> str:
        """Render using the tokens sqrt2, sqrt3 and w (= omega)."""
        if self.is_zero():
            return "0"
        real, imag = _pretty_coords(self)
        if not any(imag):
            return _render_real(real)
        if not any(real):
            return _times(_render_real(imag), "w")
        # x*w^2 = -x - x*w
        if real == imag:
            return _times(_render_real(tuple(-r for r in real)), "w^2")
        return _join([_render_real(real), _times(_render_real(imag), "w")])


def _solve(rows: list[list[Fraction]]) -> list[Fraction]:
    n = len(rows)
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


@lru_cache(maxsize=None)
def _zeta_power(k: int) -> Scalar:
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    if k < DEGREE:
        return Scalar(tuple(coeffs + [0] * (DEGREE - k - 1)))
    return Scalar(_reduce(coeffs))


ZERO = Scalar((0,) * DEGREE)
ONE = Scalar((1,) + (0,) * 7)
ZETA = Scalar((0, 1, 0, 0, 0, 0, 0, 0))
SQRT2 = _zeta_power(3) + _zeta_power(21)
SQRT3 = _zeta_power(2) + _zeta_power(22)
OMEGA = _zeta_power(8)
I = _zeta_power(6)

# pretty-printing basis: {1, sqrt2, sqrt3, sqrt6} x {1, w}
_REAL_BASIS = (ONE, SQRT2, SQRT3, SQRT2 * SQRT3)
_REAL_NAMES = ("", "sqrt2", "sqrt3", "sqrt2*sqrt3")
_PRETTY_BASIS = _REAL_BASIS + tuple(b * OMEGA for b in _REAL_BASIS)


@lru_cache(maxsize=1)
def _pretty_inverse() -> list[list[Fraction]]:
    # columns = basis elements in power coordinates; invert once
    n = DEGREE
    m = [[_PRETTY_BASIS[j].coords[i] for j in range(n)] for i in range(n)]
    inv = []
    for k in range(n):
        rows = [m[i][:] + [Fraction(int(i == k))] for i in range(n)]
        inv.append(_solve(rows))
    # inv[k] is the column k of the inverse
    return [[inv[k][i] for k in range(n)] for i in range(n)]


def _pretty_coords(x: Scalar):
    inv = _pretty_inverse()
    c = x.coords
    out = [sum(inv[i][k] * c[k] for k in range(DEGREE)) for i in range(DEGREE)]
    return tuple(out[:4]), tuple(out[4:])


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _signed_term(c: Fraction, mono: str) -> str:
    if not mono:
        return _fmt_rational(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{_fmt_rational(c)}*{mono}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _render_real(coeffs) -> str:
    return _join([_signed_term(c, name) for c, name in zip(coeffs, _REAL_NAMES) if c])


def _times(s: str, token: str) -> str:
    if s == "1":
        return token
    if s == "-1":
        return "-" + token
    if " " in s:
        return f"({s})*{token}"
    return f"{s}*{token}"


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def neg(a: Scalar) -> Scalar:
    return -a


def inv(a: Scalar) -> Scalar:
    return a.inv()


def is_zero(a: Scalar) -> bool:
    return a.is_zero()


def from_rational(q: Rational) -> Scalar:
    return Scalar.from_rational(q)
