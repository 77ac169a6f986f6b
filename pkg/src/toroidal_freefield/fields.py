"""Normal-ordered quadratic fields and formal distributions built from delta chains.

A :class:`FieldQuadratic` is the sparse matrix M of
``sum_{p,q} M[p,q] :e_p(z) e_q*(z):``.  Every image of the free-field map is a
sum of such mixed monomials, and the polarization is isotropic, so brackets
never leave this form.

A :class:`DistExpr` is a finite sum of payloads (a quadratic field sitting at
one variable, or a bare scalar) multiplied by a product of delta factors
``delta(u - v)`` or ``d_v delta(u - v)``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator, Mapping, NamedTuple

from .lattice import BasisIndex, CVector, LatticeVector
from .scalar import ZERO, Scalar

Entry = tuple[BasisIndex, BasisIndex]


class FieldQuadratic:
    __slots__ = ("n", "entries", "_hash")

    def __init__(self, n: int, entries: Mapping[Entry, Scalar] | None = None) -> None:
        self.n = n
        self.entries: dict[Entry, Scalar] = {}
        for key, v in (entries or {}).items():
            v = Scalar.coerce(v)
            if not v.is_zero():
                self.entries[key] = v
        self._hash = None

    @classmethod
    def zero(cls, n: int) -> FieldQuadratic:
        return cls(n)

    def _same_rank(self, other: FieldQuadratic) -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __getitem__(self, key: Entry) -> Scalar:
        return self.entries.get(key, ZERO)

    def items(self) -> list[tuple[Entry, Scalar]]:
        return sorted(self.entries.items())

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: FieldQuadratic) -> FieldQuadratic:
        self._same_rank(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, ZERO) + v
        return FieldQuadratic(self.n, out)

    def __neg__(self) -> FieldQuadratic:
        return FieldQuadratic(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: FieldQuadratic) -> FieldQuadratic:
        return self + (-other)

    def __rmul__(self, s) -> FieldQuadratic:
        s = Scalar.coerce(s)
        return FieldQuadratic(self.n, {k: s * v for k, v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldQuadratic):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.entries.items())))
        return self._hash

    def transpose(self) -> FieldQuadratic:
        return FieldQuadratic(self.n, {(q, p): v for (p, q), v in self.entries.items()})

    def conj(self) -> FieldQuadratic:
        return FieldQuadratic(self.n, {k: v.conj() for k, v in self.entries.items()})

    def drop_null(self) -> FieldQuadratic:
        """Discard every monomial touching the null direction c."""
        return FieldQuadratic(
            self.n, {(p, q): v for (p, q), v in self.entries.items() if p.kind and q.kind}
        )

    def is_diagonal(self) -> bool:
        return all(p == q for p, q in self.entries)

    def rows(self) -> dict[BasisIndex, dict[BasisIndex, Scalar]]:
        out: dict[BasisIndex, dict[BasisIndex, Scalar]] = defaultdict(dict)
        for (p, q), v in self.entries.items():
            out[p][q] = v
        return out

    def __repr__(self) -> str:
        return f"FieldQuadratic({self})"

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str | None = None) -> str:
        if not self.entries:
            return "0"
        suffix = f"({var})" if var else ""
        parts = []
        for (p, q), v in self.items():
            mono = f":{_plus_label(p)} {_star_label(q)}:{suffix}"
            s = v.pretty()
            if s == "1":
                parts.append(mono)
            elif s == "-1":
                parts.append("-" + mono)
            elif " " in s:
                parts.append(f"({s}) {mono}")
            else:
                parts.append(f"{s} {mono}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _plus_label(p: BasisIndex) -> str:
    if p.kind == 0:
        return "c"
    return f"e({p.i})" if p.kind == 1 else f"e(b{p.i})"


def _star_label(q: BasisIndex) -> str:
    if q.kind == 0:
        return "c*"
    return f"e*({q.i})" if q.kind == 1 else f"e*(b{q.i})"


def _outer(coeff: Scalar, left: LatticeVector, right: LatticeVector, out: dict) -> None:
    for p, a in left.coords.items():
        for q, b in right.coords.items():
            out[(p, q)] = out.get((p, q), ZERO) + coeff * a * b


def make_quadratic(terms: Iterable[tuple[Scalar, CVector, CVector]], n: int) -> FieldQuadratic:
    """Expand ``sum coeff :x(z) y(z):`` into the canonical unstarred-first matrix form.

    Each product must be mixed: one factor in P_C and the other in P*_C.
    """
    out: dict[Entry, Scalar] = {}
    for coeff, x, y in terms:
        if x.n != n or y.n != n:
            raise ValueError(f"rank mismatch: expected {n}")
        coeff = Scalar.coerce(coeff)
        if not (x.plus.is_zero() or y.plus.is_zero()) or not (x.star.is_zero() or y.star.is_zero()):
            raise ValueError("unsupported quadratic shape: only mixed monomials :a b*: are allowed")
        _outer(coeff, x.plus, y.star, out)
        # :a*(z) b(z): = :b(z) a*(z):
        _outer(coeff, y.plus, x.star, out)
    return FieldQuadratic(n, out)


class DeltaFactor(NamedTuple):
    """``delta(u - v)`` when ``derivative`` is false, otherwise ``d_v delta(u - v)``."""

    derivative: bool
    u: int
    v: int

    def __str__(self) -> str:
        body = f"(z{self.u}-z{self.v})"
        return f"dd_z{self.v}{body}" if self.derivative else f"d{body}"


def delta(u: int, v: int) -> DeltaFactor:
    if u == v:
        raise ValueError("delta factor needs two distinct variables")
    return DeltaFactor(False, u, v)


def ddelta(u: int, v: int) -> DeltaFactor:
    if u == v:
        raise ValueError("delta factor needs two distinct variables")
    return DeltaFactor(True, u, v)


Chain = tuple[DeltaFactor, ...]


def _chain(factors: Iterable[DeltaFactor]) -> Chain:
    return tuple(sorted(factors))


class DistExpr:
    """Sum of field payloads ``F(z_k) * chain`` and scalar payloads ``s * chain``.

    Field terms are keyed by (variable, chain) and scalar terms by (None, chain);
    like keys merge on insertion.
    """

    __slots__ = ("n", "fields", "scalars")

    def __init__(self, n: int) -> None:
        self.n = n
        self.fields: dict[tuple[int, Chain], FieldQuadratic] = {}
        self.scalars: dict[Chain, Scalar] = {}

    @classmethod
    def of_field(cls, field: FieldQuadratic, var: int, chain: Iterable[DeltaFactor] = ()) -> DistExpr:
        e = cls(field.n)
        e.add_field(field, var, chain)
        return e

    @classmethod
    def of_scalar(cls, n: int, s, chain: Iterable[DeltaFactor] = ()) -> DistExpr:
        e = cls(n)
        e.add_scalar(s, chain)
        return e

    def add_field(self, field: FieldQuadratic, var: int, chain: Iterable[DeltaFactor] = ()) -> None:
        if field.is_zero():
            return
        key = (var, _chain(chain))
        total = self.fields[key] + field if key in self.fields else field
        if total.is_zero():
            self.fields.pop(key, None)
        else:
            self.fields[key] = total

    def add_scalar(self, s, chain: Iterable[DeltaFactor] = ()) -> None:
        s = Scalar.coerce(s)
        if s.is_zero():
            return
        key = _chain(chain)
        total = self.scalars.get(key, ZERO) + s
        if total.is_zero():
            self.scalars.pop(key, None)
        else:
            self.scalars[key] = total

    def field_terms(self) -> Iterator[tuple[int, Chain, FieldQuadratic]]:
        for (var, chain), f in sorted(self.fields.items(), key=lambda kv: kv[0]):
            yield var, chain, f

    def scalar_terms(self) -> Iterator[tuple[Chain, Scalar]]:
        for chain, s in sorted(self.scalars.items()):
            yield chain, s

    def is_zero(self) -> bool:
        return not self.fields and not self.scalars

    def __len__(self) -> int:
        return len(self.fields) + len(self.scalars)

    def __add__(self, other: DistExpr) -> DistExpr:
        out = DistExpr(self.n)
        for e in (self, other):
            for (var, chain), f in e.fields.items():
                out.add_field(f, var, chain)
            for chain, s in e.scalars.items():
                out.add_scalar(s, chain)
        return out

    def __neg__(self) -> DistExpr:
        out = DistExpr(self.n)
        for (var, chain), f in self.fields.items():
            out.add_field(-f, var, chain)
        for chain, s in self.scalars.items():
            out.add_scalar(-s, chain)
        return out

    def __sub__(self, other: DistExpr) -> DistExpr:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DistExpr):
            return NotImplemented
        a, b = relabel(self), relabel(other)
        return a.fields == b.fields and a.scalars == b.scalars

    __hash__ = None  # mutable accumulator

    def __str__(self) -> str:
        parts = []
        for var, chain, f in self.field_terms():
            deltas = " ".join(str(d) for d in chain)
            parts.append(f"[{f.render(f'z{var}')}] {deltas}".rstrip())
        for chain, s in self.scalar_terms():
            deltas = " ".join(str(d) for d in chain)
            parts.append(f"({s.pretty()}) {deltas}".rstrip())
        return " + ".join(parts) if parts else "0"


def _reachable(start: int, chain: Chain) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for d in chain:
            if d.derivative:
                continue
            for a, b in ((d.u, d.v), (d.v, d.u)):
                if a == x and b not in seen:
                    seen.add(b)
                    frontier.append(b)
    return seen


def relabel(e: DistExpr) -> DistExpr:
    """Move every field payload to the lowest variable joined to it by plain deltas.

    Uses a(z) delta(z - w) = a(w) delta(z - w); chains are left untouched.
    """
    out = DistExpr(e.n)
    for (var, chain), f in e.fields.items():
        out.add_field(f, min(_reachable(var, chain)), chain)
    for chain, s in e.scalars.items():
        out.add_scalar(s, chain)
    return out
