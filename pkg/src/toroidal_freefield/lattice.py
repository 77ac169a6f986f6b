"""Weight lattice P = P0 + P0bar + Zc, its bilinear forms and the root data.

The null direction ``c`` is kept as a primitive basis symbol whose Gram row
and column vanish; the auxiliary vectors eps_0, eps_{n+3} and the gradation
vector d never enter a computation and are not modelled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple

from .scalar import ONE, SQRT2, SQRT3, ZERO, Scalar


class Family(enum.Enum):
    A_ODD = "a-odd"        # A_{2n-1}, twisted by an order 2 automorphism
    A_EVEN = "a-even"      # A_{2n}
    D_SERIES = "d-series"  # D_{n+1}
    D4 = "d4"              # D_4 with the triality automorphism

    @property
    def label(self) -> str:
        return {"a-odd": "A(2n-1)", "a-even": "A(2n)", "d-series": "D(n+1)", "d4": "D4"}[self.value]


_MIN_RANK = {Family.A_ODD: 3, Family.A_EVEN: 2, Family.D_SERIES: 2, Family.D4: 2}


def min_rank(family: Family | str) -> int:
    return _MIN_RANK[Family(family)]


@dataclass(frozen=True)
class AlgebraType:
    family: Family
    n: int

    def __post_init__(self) -> None:
        if self.family is Family.D4 and self.n != 2:
            raise ValueError(f"D4 has rank n = 2, got n = {self.n}")
        if self.n < _MIN_RANK[self.family]:
            raise ValueError(f"{self.family.label} requires n >= {_MIN_RANK[self.family]}, got n = {self.n}")

    @classmethod
    def make(cls, family: Family | str, n: int | None = None) -> AlgebraType:
        family = Family(family)
        if family is Family.D4 and n is None:
            n = 2
        if n is None:
            raise ValueError(f"{family.label} needs an explicit rank n")
        return cls(family, n)

    @property
    def r(self) -> int:
        return 3 if self.family is Family.D4 else 2

    @property
    def indices(self) -> range:
        """The extended index set 0..n."""
        return range(self.n + 1)

    @property
    def dim(self) -> int:
        return 2 * (self.n + 2) + 1

    def __str__(self) -> str:
        if self.family is Family.D4:
            return "D4(3)"
        return f"{self.family.label}[n={self.n}]"


class BasisIndex(NamedTuple):
    kind: int   # 0 = c, 1 = eps_i, 2 = eps_bar_i
    i: int

    @property
    def label(self) -> str:
        return ("c", f"e{self.i}", f"eb{self.i}")[self.kind]

    @property
    def is_null(self) -> bool:
        return self.kind == 0

    def __str__(self) -> str:
        return self.label


C = BasisIndex(0, 0)


def EPS(i: int) -> BasisIndex:
    return BasisIndex(1, i)


def EPSBAR(i: int) -> BasisIndex:
    return BasisIndex(2, i)


def basis(n: int) -> list[BasisIndex]:
    """All 2(n+2)+1 basis symbols in canonical order."""
    return [C] + [EPS(i) for i in range(1, n + 3)] + [EPSBAR(i) for i in range(1, n + 3)]


def parse_index(label: str) -> BasisIndex:
    if label == "c":
        return C
    if label.startswith("eb"):
        return EPSBAR(int(label[2:]))
    if label.startswith("e"):
        return EPS(int(label[1:]))
    raise ValueError(f"unknown basis label {label!r}")


def gram_entry(p: BasisIndex, q: BasisIndex) -> int:
    # eps and eps_bar blocks are orthonormal, c pairs to zero with everything
    return 1 if p == q and p.kind != 0 else 0


class LatticeVector:
    """A finitely supported Scalar combination of basis symbols."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Mapping[BasisIndex, Scalar] | None = None) -> None:
        self.n = n
        clean = {}
        for k, v in (coords or {}).items():
            v = Scalar.coerce(v)
            if not v.is_zero():
                _check_index(k, n)
                clean[k] = v
        self.coords = clean

    @classmethod
    def unit(cls, n: int, idx: BasisIndex) -> LatticeVector:
        return cls(n, {idx: ONE})

    def __getitem__(self, idx: BasisIndex) -> Scalar:
        return self.coords.get(idx, ZERO)

    def items(self) -> Iterator[tuple[BasisIndex, Scalar]]:
        return iter(sorted(self.coords.items()))

    def _same_rank(self, other: LatticeVector) -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: LatticeVector) -> LatticeVector:
        self._same_rank(other)
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, ZERO) + v
        return LatticeVector(self.n, out)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(self.n, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return self + (-other)

    def __rmul__(self, s) -> LatticeVector:
        s = Scalar.coerce(s)
        return LatticeVector(self.n, {k: s * v for k, v in self.coords.items()})

    def __truediv__(self, s) -> LatticeVector:
        return Scalar.coerce(s).inv() * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeVector):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.coords.items())))

    def is_zero(self) -> bool:
        return not self.coords

    def drop_null(self) -> LatticeVector:
        return LatticeVector(self.n, {k: v for k, v in self.coords.items() if k.kind != 0})

    def __repr__(self) -> str:
        return f"LatticeVector({self})"

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        parts = []
        for k, v in self.items():
            s = v.pretty()
            if s == "1":
                parts.append(k.label)
            elif s == "-1":
                parts.append("-" + k.label)
            elif " " in s:
                parts.append(f"({s})*{k.label}")
            else:
                parts.append(f"{s}*{k.label}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _check_index(idx: BasisIndex, n: int) -> None:
    if idx.kind == 0:
        return
    if not 1 <= idx.i <= n + 2:
        raise ValueError(f"basis index {idx.label} out of range for rank {n}")


@dataclass(frozen=True)
class CVector:
    """An element of the polarized space P_C + P*_C.

    ``star`` records the vector b whose dual b* is meant.
    """

    plus: LatticeVector
    star: LatticeVector

    @classmethod
    def of_plus(cls, v: LatticeVector) -> CVector:
        return cls(v, LatticeVector(v.n))

    @classmethod
    def of_star(cls, v: LatticeVector) -> CVector:
        return cls(LatticeVector(v.n), v)

    @property
    def n(self) -> int:
        return self.plus.n


def gram(u: LatticeVector, v: LatticeVector) -> Scalar:
    """The symmetric form (u|v)."""
    u._same_rank(v)
    out = ZERO
    small, big = (u, v) if len(u.coords) <= len(v.coords) else (v, u)
    for k, a in small.coords.items():
        if k.kind != 0 and k in big.coords:
            out = out + a * big.coords[k]
    return out


def pairing(x: CVector, y: CVector) -> Scalar:
    """The antisymmetric form with <a, b*> = -(a|b), <b*, a> = (a|b)."""
    if x.n != y.n:
        raise ValueError(f"rank mismatch: {x.n} vs {y.n}")
    return gram(y.plus, x.star) - gram(x.plus, y.star)


def beta(t: AlgebraType) -> LatticeVector:
    return _null_coefficient(t) * LatticeVector.unit(t.n, C) + LatticeVector.unit(t.n, EPS(1))


def betabar(t: AlgebraType) -> LatticeVector:
    return _null_coefficient(t) * LatticeVector.unit(t.n, C) + LatticeVector.unit(t.n, EPSBAR(1))


def _null_coefficient(t: AlgebraType) -> Scalar:
    return {
        Family.A_ODD: -SQRT2,
        Family.A_EVEN: -SQRT2 / 2,
        Family.D_SERIES: -ONE,
        Family.D4: -SQRT3,
    }[t.family]


def theta0(t: AlgebraType) -> LatticeVector:
    """Highest weight of g_1 as a g_0-module, realized in the eps basis."""
    e = lambda i: LatticeVector.unit(t.n, EPS(i))  # noqa: E731
    if t.family is Family.A_ODD:
        return (e(1) + e(2)) / SQRT2
    if t.family is Family.A_EVEN:
        return SQRT2 * e(1)
    if t.family is Family.D_SERIES:
        return e(1)
    return (e(1) - e(3)) / SQRT3


def alpha_root(t: AlgebraType, i: int) -> LatticeVector:
    if i not in t.indices:
        raise IndexError(f"root index {i} out of range 0..{t.n}")
    n = t.n
    if i == 0:
        return LatticeVector.unit(n, C) - theta0(t)
    e = lambda k: LatticeVector.unit(n, EPS(k))  # noqa: E731
    if t.family is Family.D4:
        if i == 1:
            return (e(1) - e(2)) / SQRT3
        return (-e(1) + 2 * e(2) - e(3)) / SQRT3
    if i < n:
        diff = e(i) - e(i + 1)
        return diff if t.family is Family.D_SERIES else diff / SQRT2
    if t.family is Family.A_ODD:
        return SQRT2 * e(n)
    if t.family is Family.A_EVEN:
        return e(n) / SQRT2
    return e(n)


def d_const(t: AlgebraType, i: int) -> Scalar:
    """Symmetrization constant d_i with (alpha_i|alpha_j) = d_i a_ij."""
    if i not in t.indices:
        raise IndexError(f"root index {i} out of range 0..{t.n}")
    n = t.n
    half = Fraction(1, 2)
    if t.family is Family.A_ODD:
        val = 1 if i == n else half
    elif t.family is Family.A_EVEN:
        val = 1 if i == 0 else (Fraction(1, 4) if i == n else half)
    elif t.family is Family.D_SERIES:
        val = half if i in (0, n) else 1
    else:
        val = (Fraction(1, 3), Fraction(1, 3), 1)[i]
    return Scalar.from_rational(val)
