"""Brackets of normal-ordered quadratic fields.

For mixed monomials

    [:a(z) b*(z):, :u(w) v*(w):] = <a, v*> :b*(z) u(z): delta(z-w)
                                  + <b*, u> :a(z) v*(z): delta(z-w)
                                  + <a, v*><b*, u> d_w delta(z-w)

and with <a, v*> = -(a|v), <b*, u> = (b|u) the bilinear extension to
coefficient matrices M, N is

    field   = M G N - N G M
    central = -trace(M G N G)

where G is the Gram matrix.  :func:`bracket_naive` evaluates the monomial
formula term by term through the lattice pairing and is kept as the
independent check of the matrix form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

from .fields import DistExpr, FieldQuadratic, ddelta, delta, make_quadratic, relabel
from .lattice import CVector, LatticeVector, pairing
from .scalar import ZERO, Scalar


@dataclass(frozen=True)
class BracketResult:
    """``field(z) delta(z-w) + central d_w delta(z-w)``."""

    field: FieldQuadratic
    central: Scalar

    def is_zero(self) -> bool:
        return self.field.is_zero() and self.central.is_zero()

    def __str__(self) -> str:
        return f"[{self.field.render('z')}] d(z-w) + ({self.central.pretty()}) dd_w(z-w)"


def _mgn(m: FieldQuadratic, n_rows: dict) -> dict:
    out: dict = {}
    for (p, q), a in m.entries.items():
        if q.kind == 0:
            continue
        row = n_rows.get(q)
        if not row:
            continue
        for s, b in row.items():
            key = (p, s)
            out[key] = out.get(key, ZERO) + a * b
    return out


def bracket(a: FieldQuadratic, b: FieldQuadratic) -> BracketResult:
    a._same_rank(b)
    ab = _mgn(a, b.rows())
    ba = _mgn(b, a.rows())
    for key, v in ba.items():
        ab[key] = ab.get(key, ZERO) - v
    central = ZERO
    for (p, q), x in a.entries.items():
        if p.kind == 0 or q.kind == 0:
            continue
        y = b.entries.get((q, p))
        if y is not None:
            central = central - x * y
    return BracketResult(FieldQuadratic(a.n, ab), central)


def bracket_naive(a: FieldQuadratic, b: FieldQuadratic) -> BracketResult:
    """Monomial-by-monomial expansion of the Wick bracket formula."""
    a._same_rank(b)
    n = a.n
    unit = lambda idx: LatticeVector.unit(n, idx)  # noqa: E731
    terms = []
    central = ZERO
    for (p, q), x in a.entries.items():
        for (r, s), y in b.entries.items():
            av = CVector.of_plus(unit(p))
            bstar = CVector.of_star(unit(q))
            u = CVector.of_plus(unit(r))
            vstar = CVector.of_star(unit(s))
            c1 = pairing(av, vstar)
            c2 = pairing(bstar, u)
            coeff = x * y
            if not c1.is_zero():
                terms.append((coeff * c1, bstar, u))
            if not c2.is_zero():
                terms.append((coeff * c2, av, vstar))
            central = central + coeff * c1 * c2
    return BracketResult(make_quadratic(terms, n), central)


class ImageSource(Protocol):
    n: int

    def image(self, sym) -> FieldQuadratic | Scalar: ...


def ad_chain(gens: Sequence[tuple[object, int]], seed: tuple[object, int], source: ImageSource) -> DistExpr:
    """Iterated adjoint action ``ad X_k(z_k) ... ad X_1(z_2) X_0(z_1)``.

    ``gens`` is listed in application order: ``gens[0]`` acts first.  Each
    bracket emits the surviving field at the acting generator's variable and
    the result is relabelled onto the lowest variable after every step.
    Scalar payloads are central and dropped by the next bracket.
    """
    if not 1 <= len(gens) <= 4:
        raise ValueError("ad chains have between one and four generators")
    for sym, _ in (*gens, seed):
        if not getattr(sym, "is_x", False):
            raise ValueError(f"ad chains take X(+-alpha) generators only, got {sym}")
    sym0, var0 = seed
    expr = DistExpr.of_field(source.image(sym0), var0)
    for sym, var in gens:
        x = source.image(sym)
        nxt = DistExpr(source.n)
        for pvar, chain, f in expr.field_terms():
            res = bracket(x, f)
            nxt.add_field(res.field, var, chain + (delta(var, pvar),))
            nxt.add_scalar(res.central, chain + (ddelta(var, pvar),))
        expr = relabel(nxt)
    return expr
