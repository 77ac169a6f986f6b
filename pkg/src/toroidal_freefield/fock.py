"""Truncated Fock-space oracle for the component form of the bracket relations.

States are finite Scalar combinations of monomials in creation operators
applied to the vacuum.  A creation label packs a basis index, a star flag
and twice the (negative) mode into one int, so half-integer modes stay
integral and monomials (sorted tuples of labels) sort and hash cheaply.

Modes act through the Weyl relation [a(k), b(l)] = <a, b> delta_{k,-l}:
negative modes multiply, positive modes differentiate.  Zero modes only
exist for the integral scheme and need an explicit convention.
"""

from __future__ import annotations

import bisect
import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .fields import FieldQuadratic
from .lattice import BasisIndex, basis
from .scalar import ONE, ZERO, Scalar
from .wick import BracketResult

Label = int
Monomial = tuple[int, ...]
VACUUM_MONOMIAL: Monomial = ()

_MODE_BITS = 9
_MODE_OFFSET = 1 << (_MODE_BITS - 1)
_STAR = 1 << _MODE_BITS
_IDX_SHIFT = _MODE_BITS + 1


class Scheme(enum.Enum):
    HALF = "half"  # modes in Z + 1/2
    INT = "int"    # modes in Z


class ZeroMode(enum.Enum):
    """How zero modes act under the integral scheme.

    POLARIZED: a*(0) multiplies and a(0) differentiates against a*(0)
    factors, which represents the zero-mode Weyl algebra on polynomials in
    the a*(0).
    """

    POLARIZED = "polarized"


def _idx_code(idx: BasisIndex) -> int:
    return idx.kind * 1024 + idx.i


def _idx_of(code: int) -> BasisIndex:
    return BasisIndex(code // 1024, code % 1024)


def pack(code: int, starred: int, two_m: int) -> Label:
    if not -_MODE_OFFSET <= two_m < _MODE_OFFSET:
        raise ValueError(f"mode {Fraction(two_m, 2)} out of range")
    return (code << _IDX_SHIFT) | (starred << _MODE_BITS) | (two_m + _MODE_OFFSET)


def unpack(l: Label) -> tuple[BasisIndex, bool, Fraction]:
    return _idx_of(l >> _IDX_SHIFT), bool(l & _STAR), Fraction((l & (_STAR - 1)) - _MODE_OFFSET, 2)


def _two_m(l: Label) -> int:
    return (l & (_STAR - 1)) - _MODE_OFFSET


def label(idx: BasisIndex, starred: bool, m) -> Label:
    two_m = Fraction(m) * 2
    if two_m.denominator != 1:
        raise ValueError(f"mode {m} is not in Z/2")
    return pack(_idx_code(idx), int(starred), int(two_m))


def label_str(l: Label) -> str:
    idx, starred, m = unpack(l)
    return f"{idx.label}{'*' if starred else ''}({m})"


class FockState:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Scalar] | None = None) -> None:
        self.terms: dict[Monomial, Scalar] = {}
        for mono, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if not c.is_zero():
                self.terms[mono] = c

    @classmethod
    def vacuum(cls) -> FockState:
        return cls({VACUUM_MONOMIAL: ONE})

    @classmethod
    def monomial(cls, mono: Iterable[Label]) -> FockState:
        return cls({tuple(sorted(mono)): ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: FockState) -> FockState:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return FockState(out)

    def __neg__(self) -> FockState:
        return FockState({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: FockState) -> FockState:
        return self + (-other)

    def __rmul__(self, s) -> FockState:
        s = Scalar.coerce(s)
        return FockState({m: s * c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockState):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def degrees(self) -> set[Fraction]:
        """Total mode degree -sum(m) of each monomial."""
        return {Fraction(-sum(_two_m(l) for l in m), 2) for m in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items()):
            ops = " ".join(label_str(l) for l in mono) or "|0>"
            parts.append(f"({c.pretty()}) {ops}")
        return " + ".join(parts)


def _check_mode(two_m: int, scheme: Scheme) -> None:
    if scheme is Scheme.HALF and two_m % 2 == 0:
        raise ValueError(f"mode {Fraction(two_m, 2)} is not a half-integer (scheme HALF)")
    if scheme is Scheme.INT and two_m % 2:
        raise ValueError(f"mode {Fraction(two_m, 2)} is not an integer (scheme INT)")


def _act(op: Label, mono: Monomial, zero_mode: ZeroMode | None) -> list[tuple[int, Monomial]]:
    """Elementary mode operator on a monomial -> [(int coefficient, monomial)]."""
    two_m = _two_m(op)
    starred = op & _STAR
    if two_m < 0 or (two_m == 0 and starred and zero_mode is not None):
        pos = bisect.bisect_left(mono, op)
        return [(1, mono[:pos] + (op,) + mono[pos:])]
    if two_m == 0 and zero_mode is None:
        raise ValueError("zero mode needs an explicit convention (scheme INT)")
    if op >> _IDX_SHIFT < 1024:  # (c|.) = 0
        return []
    # partner: same index, opposite star, opposite mode
    target = ((op & ~(_STAR - 1)) ^ _STAR) | (-two_m + _MODE_OFFSET)
    pos = bisect.bisect_left(mono, target)
    end = pos
    while end < len(mono) and mono[end] == target:
        end += 1
    if end == pos:
        return []
    # <a, b*> = -(a|b) for an unstarred annihilator, <a*, b> = (a|b) for a starred one
    sign = 1 if starred else -1
    return [(sign * (end - pos), mono[:pos] + mono[pos + 1:])]


def apply_mode(
    op: tuple[BasisIndex, bool, object],
    state: FockState,
    scheme: Scheme = Scheme.HALF,
    zero_mode: ZeroMode | None = None,
) -> FockState:
    idx, starred, m = op
    lab = label(idx, starred, m)
    _check_mode(_two_m(lab), scheme)
    if _two_m(lab) == 0 and zero_mode is None:
        raise ValueError("zero mode is not available without an INT-scheme convention")
    out: dict[Monomial, Scalar] = {}
    for mono, c in state.terms.items():
        for k, res in _act(lab, mono, zero_mode):
            out[res] = out.get(res, ZERO) + c * k
    return FockState(out)


def decompose(field: FieldQuadratic) -> list[tuple[Scalar, tuple]]:
    """Split F as sum_g s_g R_g with each R_g a rational matrix.

    Returns (s_g, entries of R_g) with entries as (p_code, q_code, rational)
    triples.  Rational entries share the group s = 1.
    """
    groups: list[tuple[Scalar, dict]] = []
    for (p, q), v in field.items():
        if v.is_rational():
            s, r = ONE, v.to_fraction()
        else:
            for s, _ in groups:
                ratio = v / s
                if ratio.is_rational():
                    r = ratio.to_fraction()
                    break
            else:
                s, r = v, Fraction(1)
        for g, entries in groups:
            if g == s:
                entries[(p, q)] = r
                break
        else:
            groups.append((s, {(p, q): r}))
    return [
        (s, tuple((_idx_code(p), _idx_code(q), _num(r)) for (p, q), r in sorted(e.items())))
        for s, e in groups
    ]


def _num(r: Fraction):
    return r.numerator if r.denominator == 1 else r


class _RationalMode:
    """Mode k of a quadratic field with rational coefficients, acting on monomials."""

    def __init__(self, entries: tuple, k: int, scheme: Scheme, zero_mode: ZeroMode | None) -> None:
        self.two_k = 2 * k
        self.scheme = scheme
        self.zero_mode = zero_mode
        self.entries = entries
        self.values = {(p, q): v for p, q, v in entries}
        self.rows: dict[int, list[int]] = {}
        self.cols: dict[int, list[int]] = {}
        for p, q, _ in entries:
            self.rows.setdefault(p, []).append(q)
            self.cols.setdefault(q, []).append(p)
        self.support = frozenset(self.rows) | frozenset(self.cols)
        # modes where both factors create: k < m < 0, plus the zero-mode terms
        start = -1 if scheme is Scheme.HALF else -2
        self._always = list(range(start, self.two_k, -2)) if self.two_k < 0 else []
        if scheme is Scheme.INT:
            self._always += [0, self.two_k]
        self._cache: dict[Monomial, dict[Monomial, object]] = {}
        self._full: dict[Monomial, dict[Monomial, object]] = {}

    def _term(self, p: int, q: int, two_m: int, mono: Monomial, out: dict) -> None:
        v = self.values[(p, q)]
        a = pack(p, 0, two_m)
        b = pack(q, 1, self.two_k - two_m)
        if two_m < 0:
            orders, weight = ((b, a),), v
        elif two_m > 0:
            orders, weight = ((a, b),), v
        else:  # symmetric ordering of the zero mode
            orders, weight = ((b, a), (a, b)), Fraction(v) / 2
        zm = self.zero_mode
        for first, second in orders:
            for c1, m1 in _act(first, mono, zm):
                for c2, m2 in _act(second, m1, zm):
                    out[m2] = out.get(m2, 0) + weight * c1 * c2

    def on_monomial(self, mono: Monomial) -> dict[Monomial, object]:
        hit = self._full.get(mono)
        if hit is not None:
            return hit
        # factors outside the support are untouched: act on the rest, then reattach
        active, spectators = split_spectators(mono, self.support)
        out = self._on_active(active)
        if spectators:
            out = {tuple(sorted(spectators + m)): c for m, c in out.items()}
        if len(self._full) > 200_000:
            self._full.clear()
        self._full[mono] = out
        return out

    def _on_active(self, mono: Monomial) -> dict[Monomial, object]:
        hit = self._cache.get(mono)
        if hit is not None:
            return hit
        todo: set[tuple[int, int, int]] = set()
        for l in set(mono):
            code, two_f = l >> _IDX_SHIFT, _two_m(l)
            if l & _STAR:
                for q in self.rows.get(code, ()):  # e_p(m) contracts e_p*(-m)
                    todo.add((code, q, -two_f))
            else:
                for p in self.cols.get(code, ()):  # e_q*(k-m) contracts e_q(m-k)
                    todo.add((p, code, self.two_k + two_f))
        for p, q, _ in self.entries:
            for two_m in self._always:
                todo.add((p, q, two_m))
        out: dict[Monomial, object] = {}
        for p, q, two_m in sorted(todo):
            self._term(p, q, two_m, mono, out)
        out = {m: c for m, c in out.items() if c}
        self._cache[mono] = out
        return out


def split_spectators(mono: Monomial, support: frozenset) -> tuple[Monomial, Monomial]:
    active = tuple(l for l in mono if l >> _IDX_SHIFT in support)
    if len(active) == len(mono):
        return mono, ()
    return active, tuple(l for l in mono if l >> _IDX_SHIFT not in support)


_RATIONAL_CACHE: dict[tuple, _RationalMode] = {}


def _rational_mode(entries: tuple, k: int, scheme: Scheme, zero_mode) -> _RationalMode:
    key = (entries, k, scheme, zero_mode)
    op = _RATIONAL_CACHE.get(key)
    if op is None:
        if len(_RATIONAL_CACHE) > 2048:
            _RATIONAL_CACHE.clear()
        op = _RATIONAL_CACHE[key] = _RationalMode(entries, k, scheme, zero_mode)
    return op


def clear_caches() -> None:
    _RATIONAL_CACHE.clear()


class QuadMode:
    """The mode ``F_k = sum_m sum_{p,q} F[p,q] :e_p(m) e_q*(k-m):`` as an operator."""

    def __init__(self, field: FieldQuadratic, k: int, scheme: Scheme = Scheme.HALF,
                 zero_mode: ZeroMode | None = None) -> None:
        if scheme is Scheme.INT and zero_mode is None:
            raise ValueError("scheme INT needs an explicit zero-mode convention")
        self.field = field
        self.k = k
        self.scheme = scheme
        self.zero_mode = zero_mode
        self.parts = [(s, _rational_mode(e, k, scheme, zero_mode)) for s, e in decompose(field)]

    @property
    def support(self) -> frozenset:
        return frozenset().union(*(op.support for _, op in self.parts))

    def on_monomial(self, mono: Monomial) -> dict[Monomial, Scalar]:
        out: dict[Monomial, Scalar] = {}
        for s, op in self.parts:
            for res, c in op.on_monomial(mono).items():
                out[res] = out.get(res, ZERO) + s * c
        return {m: c for m, c in out.items() if not c.is_zero()}

    def __call__(self, state: FockState) -> FockState:
        out: dict[Monomial, Scalar] = {}
        for mono, c in state.terms.items():
            for res, v in self.on_monomial(mono).items():
                out[res] = out.get(res, ZERO) + c * v
        return FockState(out)


def quad_mode(field: FieldQuadratic, k: int, scheme: Scheme = Scheme.HALF,
              zero_mode: ZeroMode | None = None) -> QuadMode:
    return QuadMode(field, k, scheme, zero_mode)


def creation_labels(n: int, depth: int, scheme: Scheme = Scheme.HALF) -> list[Label]:
    """Creation labels of degree at most ``depth``."""
    if scheme is Scheme.HALF:
        modes = [-(2 * j + 1) for j in range(depth)]  # -1/2 .. -(depth - 1/2)
    else:
        modes = [-2 * (j + 1) for j in range(depth)]  # -1 .. -depth
    return sorted(pack(_idx_code(idx), s, m) for idx in basis(n) for s in (0, 1) for m in modes)


def enumerate_states(n: int, depth: int, scheme: Scheme = Scheme.HALF) -> list[Monomial]:
    """Basis monomials of creation depth <= ``depth``.

    Creation depth d means at most d creation operators, each of degree at
    most d.  Ordered by number of operators, then by label.
    """
    labels = creation_labels(n, depth, scheme)
    out: list[Monomial] = []
    for d in range(depth + 1):
        out.extend(itertools.combinations_with_replacement(labels, d))
    return out


@dataclass
class OracleResult:
    passed: bool
    checked: int
    detail: str = ""


def _compose(outer: _RationalMode, inner: _RationalMode, mono: Monomial, sign: int, acc: dict) -> None:
    for m, c in inner.on_monomial(mono).items():
        for m2, c2 in outer.on_monomial(m).items():
            acc[m2] = acc.get(m2, 0) + sign * c * c2


class _Plan:
    """Operator parts of one check with the bucket keys merged up front."""

    def __init__(self, a: QuadMode, b: QuadMode, e: QuadMode, shift: Scalar) -> None:
        keys: list[Scalar] = []

        def slot(key: Scalar) -> int:
            for j, other in enumerate(keys):
                if other == key:
                    return j
            keys.append(key)
            return len(keys) - 1

        self.pairs = [(slot(s * t), ag, bh) for s, ag in a.parts for t, bh in b.parts]
        self.expected = [(slot(u), ef) for u, ef in e.parts]
        self.shift = None if shift.is_zero() else slot(shift)
        # keys as integer power-basis coordinates over a common denominator
        common = 1
        for key in keys:
            common = common * key.den // _gcd(common, key.den)
        self.coords = [tuple(x * (common // key.den) for x in key.num) for key in keys]
        self.common = common
        self.keys = keys


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _residual(plan: _Plan, mono: Monomial) -> dict[Monomial, tuple]:
    """[A_k, B_l] v - E_{k+l} v - shift * v for a basis monomial v.

    Coefficients come back as power-basis coordinates scaled by ``plan.common``.
    """
    buckets: list[dict[Monomial, object]] = [{} for _ in plan.keys]
    for j, ag, bh in plan.pairs:
        acc = buckets[j]
        _compose(ag, bh, mono, 1, acc)
        _compose(bh, ag, mono, -1, acc)
    for j, ef in plan.expected:
        acc = buckets[j]
        for m, c in ef.on_monomial(mono).items():
            acc[m] = acc.get(m, 0) - c
    if plan.shift is not None:
        acc = buckets[plan.shift]
        acc[mono] = acc.get(mono, 0) - 1
    live = [(plan.coords[j], acc) for j, acc in enumerate(buckets) if any(acc.values())]
    if not live:
        return {}
    if len(live) == 1:
        # a single nonzero key: any nonzero rational coefficient survives
        coords, acc = live[0]
        return {m: tuple(c * x for x in coords) for m, c in acc.items() if c}
    total: dict[Monomial, list] = {}
    for coords, acc in live:
        for m, c in acc.items():
            if c:
                row = total.setdefault(m, [0] * 8)
                for i, x in enumerate(coords):
                    if x:
                        row[i] += c * x
    return {m: tuple(row) for m, row in total.items() if any(row)}


def _render_residual(plan: _Plan, res: dict[Monomial, tuple]) -> str:
    return str(FockState({m: Scalar.from_coords(row) / plan.common for m, row in res.items()}))


def oracle_check(
    a: FieldQuadratic,
    b: FieldQuadratic,
    expected: BracketResult,
    k: int,
    l: int,
    states: Iterable[Monomial | FockState],
    scheme: Scheme = Scheme.HALF,
    zero_mode: ZeroMode | None = None,
) -> OracleResult:
    """Check [A_k, B_l] v = E_{k+l} v + central * k * delta_{k,-l} v on every state."""
    ak = quad_mode(a, k, scheme, zero_mode)
    bl = quad_mode(b, l, scheme, zero_mode)
    ek = quad_mode(expected.field, k + l, scheme, zero_mode)
    shift = expected.central * k if k == -l else ZERO
    support = ak.support | bl.support | ek.support
    plan = _Plan(ak, bl, ek, shift)
    # the residual on s*v is s times the residual on v when s is a spectator
    verdicts: dict[Monomial, bool] = {}
    checked = 0
    for v in states:
        if isinstance(v, FockState):
            lhs = ak(bl(v)) - bl(ak(v))
            rhs = ek(v) + shift * v
            bad = None if lhs == rhs else f"[A_k,B_l]v = {lhs}; expected {rhs}"
        else:
            active, _ = split_spectators(v, support)
            ok = verdicts.get(active)
            if ok is None:
                ok = verdicts[active] = not _residual(plan, active)
            bad = None if ok else f"residual {_render_residual(plan, _residual(plan, v))}"
            v = FockState.monomial(v)
        checked += 1
        if bad:
            return OracleResult(False, checked, f"k={k}, l={l}, state {v}: {bad}")
    return OracleResult(True, checked)


def iter_mode_pairs(bound: int) -> Iterator[tuple[int, int]]:
    rng = range(-bound, bound + 1)
    return itertools.product(rng, rng)
