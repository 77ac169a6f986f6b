"""Free-field images of the generators c, alpha_i(z), X(+-alpha_i, z).

``beta`` and ``betabar`` carry a component along the null vector c.  On the
Fock space beta acts as eps_1 (and betabar as eps_bar_1), so by default the
images are projected onto the eps/eps_bar block.  ``keep_null=True`` keeps
the c components verbatim; that reading is exposed for comparison only.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import NamedTuple

from .fields import FieldQuadratic, make_quadratic
from .lattice import EPS, EPSBAR, AlgebraType, CVector, Family, LatticeVector, beta, betabar
from .scalar import OMEGA, SQRT2, Scalar


class GeneratorSymbol(NamedTuple):
    kind: str  # "c", "alpha", "x+", "x-"
    i: int = 0

    @property
    def is_x(self) -> bool:
        return self.kind in ("x+", "x-")

    @property
    def sign(self) -> int:
        return -1 if self.kind == "x-" else 1

    def __str__(self) -> str:
        if self.kind == "c":
            return "c"
        if self.kind == "alpha":
            return f"alpha_{self.i}"
        return f"X({'+' if self.kind == 'x+' else '-'}alpha_{self.i})"


CENTRAL = GeneratorSymbol("c")


def ALPHA(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("alpha", i)


def XPLUS(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("x+", i)


def XMINUS(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("x-", i)


def X(sign: int, i: int) -> GeneratorSymbol:
    return XPLUS(i) if sign > 0 else XMINUS(i)


class Variant(enum.Enum):
    THEOREM = "theorem"
    PROOF = "proof"  # X(+-alpha_n) through eps_bar_{n+1}, as in the relation (5)/(9) computations


class Realization:
    """The generator images for one algebra type."""

    def __init__(self, t: AlgebraType, variant: Variant = Variant.THEOREM, keep_null: bool = False) -> None:
        self.t = t
        self.n = t.n
        self.variant = Variant(variant)
        self.keep_null = keep_null
        self.level = Scalar.from_rational(-1 if t.family in (Family.A_ODD, Family.A_EVEN) else -2)
        self._images = _build(t, self.variant)
        if not keep_null:
            self._images = {k: v.drop_null() for k, v in self._images.items()}

    def symbols(self) -> list[GeneratorSymbol]:
        out = [CENTRAL]
        for kind in ("alpha", "x+", "x-"):
            out.extend(GeneratorSymbol(kind, i) for i in self.t.indices)
        return out

    def image(self, sym: GeneratorSymbol) -> FieldQuadratic | Scalar:
        if sym.kind == "c":
            return self.level
        if sym.i not in self.t.indices:
            raise IndexError(f"generator index {sym.i} out of range 0..{self.n}")
        return self._images[sym]

    def __repr__(self) -> str:
        return f"Realization({self.t}, {self.variant.value}, keep_null={self.keep_null})"


@lru_cache(maxsize=None)
def realization(t: AlgebraType, variant: Variant = Variant.THEOREM, keep_null: bool = False) -> Realization:
    return Realization(t, variant, keep_null)


def rho(t: AlgebraType, g: GeneratorSymbol, variant: Variant = Variant.THEOREM) -> FieldQuadratic | Scalar:
    return realization(t, Variant(variant)).image(g)


def _build(t: AlgebraType, variant: Variant) -> dict[GeneratorSymbol, FieldQuadratic]:
    n = t.n
    unit = lambda idx: LatticeVector.unit(n, idx)  # noqa: E731

    # plus / star factors
    def e(i):
        return CVector.of_plus(unit(EPS(i)))

    def eb(i):
        return CVector.of_plus(unit(EPSBAR(i)))

    def es(i):
        return CVector.of_star(unit(EPS(i)))

    def ebs(i):
        return CVector.of_star(unit(EPSBAR(i)))

    b, bs = CVector.of_plus(beta(t)), CVector.of_star(beta(t))
    bb, bbs = CVector.of_plus(betabar(t)), CVector.of_star(betabar(t))

    def q(*terms):
        return make_quadratic(terms, n)

    img: dict[GeneratorSymbol, FieldQuadratic] = {}
    fam = t.family
    w, w2 = OMEGA, OMEGA * OMEGA

    if fam is not Family.D4:
        for i in range(1, n):
            img[ALPHA(i)] = q((1, e(i), es(i)), (-1, e(i + 1), es(i + 1)),
                              (-1, eb(i), ebs(i)), (1, eb(i + 1), ebs(i + 1)))
            img[XPLUS(i)] = q((1, e(i), es(i + 1)), (1, eb(i + 1), ebs(i)))
            img[XMINUS(i)] = q((1, es(i), e(i + 1)), (1, ebs(i + 1), eb(i)))

    if fam is Family.A_ODD:
        img[ALPHA(0)] = q((-1, b, bs), (-1, e(2), es(2)), (1, eb(1), ebs(1)), (1, eb(2), ebs(2)))
        img[ALPHA(n)] = q((1, e(n), es(n)), (-1, eb(n), ebs(n)))
        img[XPLUS(0)] = q((1, eb(2), bs), (1, eb(1), es(2)))
        img[XMINUS(0)] = q((1, ebs(2), b), (1, ebs(1), e(2)))
        img[XPLUS(n)] = q((1, e(n), ebs(n)))
        img[XMINUS(n)] = q((1, es(n), eb(n)))

    elif fam in (Family.A_EVEN, Family.D_SERIES):
        if fam is Family.A_EVEN:
            img[ALPHA(0)] = q((1, eb(1), ebs(1)), (-1, b, bs))
            img[XPLUS(0)] = q((1, bs, eb(1)))
            img[XMINUS(0)] = q((1, b, ebs(1)))
        else:
            img[ALPHA(0)] = q((2, eb(1), ebs(1)), (-2, b, bs))
            img[XPLUS(0)] = q((SQRT2, bs, e(n + 2)), (-SQRT2, es(n + 2), eb(1)))
            img[XMINUS(0)] = q((SQRT2, b, es(n + 2)), (-SQRT2, e(n + 2), ebs(1)))
        img[ALPHA(n)] = q((2, e(n), es(n)), (-2, eb(n), ebs(n)))
        if variant is Variant.THEOREM:
            mid, mids = e(n + 1), es(n + 1)
        else:
            mid, mids = eb(n + 1), ebs(n + 1)
        img[XPLUS(n)] = q((SQRT2, e(n), mids), (-SQRT2, mid, ebs(n)))
        img[XMINUS(n)] = q((SQRT2, es(n), mid), (-SQRT2, mids, eb(n)))

    else:  # D4
        img[ALPHA(0)] = q((2, eb(1), ebs(1)), (-2, b, bs), (1, eb(2), ebs(2)), (-1, e(2), es(2)),
                          (1, eb(3), ebs(3)), (-1, e(3), es(3)))
        img[ALPHA(1)] = q((1, e(1), es(1)), (-1, eb(1), ebs(1)), (-1, e(2), es(2)), (1, eb(2), ebs(2)),
                          (2, e(3), es(3)), (-2, eb(3), ebs(3)))
        img[ALPHA(2)] = q((1, e(2), es(2)), (-1, eb(2), ebs(2)), (-1, e(3), es(3)), (1, eb(3), ebs(3)))
        img[XPLUS(0)] = q((1, bs, e(4)), (-1, ebs(4), bb), (w2, es(2), eb(3)), (-w2, es(3), eb(2)),
                          (w, es(1), eb(4)), (-w, es(4), eb(1)))
        img[XMINUS(0)] = q((1, b, es(4)), (-1, eb(4), bbs), (w, e(2), ebs(3)), (-w, e(3), ebs(2)),
                           (w2, e(1), ebs(4)), (-w2, e(4), ebs(1)))
        img[XPLUS(1)] = q((1, e(1), es(2)), (-1, eb(2), ebs(1)), (1, e(3), es(4)), (-1, eb(4), ebs(3)),
                          (1, e(3), ebs(4)), (-1, e(4), ebs(3)))
        img[XMINUS(1)] = q((1, es(1), e(2)), (-1, ebs(2), eb(1)), (1, es(3), e(4)), (-1, ebs(4), eb(3)),
                           (1, es(3), eb(4)), (-1, es(4), eb(3)))
        img[XPLUS(2)] = q((1, e(2), es(3)), (-1, eb(3), ebs(2)))
        img[XMINUS(2)] = q((1, es(2), e(3)), (-1, ebs(3), eb(2)))

    return img
