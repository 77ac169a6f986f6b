"""Generalized Cartan matrix of the twisted affine algebra and the relation constants.

The GCM is not tabulated: every entry is recovered as (alpha_i|alpha_j)/d_i
from the lattice realization, so a transcription slip in either the root
table or the d_i list shows up as a non-integer quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import AlgebraType, Family, alpha_root, d_const, gram
from .scalar import Scalar


class CartanConsistencyError(ArithmeticError):
    pass


def cartan_entry(t: AlgebraType, i: int, j: int) -> int:
    q = gram(alpha_root(t, i), alpha_root(t, j)) / d_const(t, i)
    if not q.is_integer():
        raise CartanConsistencyError(f"(alpha_{i}|alpha_{j})/d_{i} = {q} is not an integer for {t}")
    return q.num[0]


@lru_cache(maxsize=None)
def cartan_matrix(t: AlgebraType) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(cartan_entry(t, i, j) for j in t.indices) for i in t.indices)


def _exceptional_pairs(t: AlgebraType) -> tuple[tuple[int, int], ...]:
    return ((t.n - 1, t.n), (t.n, t.n))


@dataclass(frozen=True)
class ConstantTables:
    """Coefficients k with [a(z), b(w)] = k d_w delta(z-w) c in relations (1)-(3), and the
    central coefficient of relation (6)."""

    t: AlgebraType
    k1: Scalar
    factor2: int
    factor3: int

    def k23(self, i: int, j: int) -> Scalar:
        """Relation (2)/(3) coefficient, extended symmetrically to i > j."""
        i, j = min(i, j), max(i, j)
        if j == 0:
            raise ValueError("the (0, 0) pair belongs to relation (1)")
        a = cartan_matrix(self.t)[i][j]
        factor = self.factor3 if (i, j) in _exceptional_pairs(self.t) else self.factor2
        return Scalar.from_rational(factor * a)

    def alpha_alpha(self, i: int, j: int) -> tuple[int, Scalar]:
        """Relation number and coefficient governing [alpha_i(z), alpha_j(w)]."""
        if i == 0 and j == 0:
            return 1, self.k1
        lo, hi = min(i, j), max(i, j)
        number = 3 if (lo, hi) in _exceptional_pairs(self.t) else 2
        return number, self.k23(i, j)

    def c6(self, i: int) -> Scalar:
        t, r, n = self.t, self.t.r, self.t.n
        on_n = int(i == n)
        on_0 = int(i == 0)
        if t.family in (Family.A_ODD, Family.D4):
            val = r - on_n * (r - 1)
        elif t.family is Family.A_EVEN:
            val = r * (1 + on_n * (r - 1)) - on_0 * (r - 1)
        else:
            val = 1 + (on_0 + on_n) * (r - 1)
        return Scalar.from_rational(val)


def relation_constants(t: AlgebraType) -> ConstantTables:
    r = t.r
    k1 = 2 if t.family is Family.A_EVEN else 2 * r
    factor2 = 1 if t.family is Family.D_SERIES else r
    factor3 = {Family.A_ODD: 1, Family.D4: 1, Family.A_EVEN: 4, Family.D_SERIES: 2}[t.family]
    return ConstantTables(t, Scalar.from_rational(k1), factor2, factor3)
