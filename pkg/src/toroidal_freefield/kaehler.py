"""Classes of Kaehler differentials b da modulo exact forms, for A = C[s, s^-1, t, t^-1].

Basis symbols:

    SDS(j, m)  class of s^(j-1) t^m ds   (m != 0)
    TDT(j)     class of s^j t^-1 dt
    C0         class of s^-1 ds
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .scalar import ZERO, Scalar


class KSymbol(NamedTuple):
    kind: str  # "sds", "tdt", "c0"
    j: int = 0
    m: int = 0

    def __str__(self) -> str:
        if self.kind == "c0":
            return "C0"
        if self.kind == "tdt":
            return f"TDT({self.j})"
        return f"SDS({self.j},{self.m})"


C0 = KSymbol("c0")


def SDS(j: int, m: int) -> KSymbol:
    if m == 0:
        raise ValueError("SDS(j, m) needs m != 0")
    return KSymbol("sds", j, m)


def TDT(j: int) -> KSymbol:
    return KSymbol("tdt", j)


class KForm:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[KSymbol, Scalar] | None = None) -> None:
        self.terms = {}
        for sym, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if not c.is_zero():
                self.terms[sym] = c

    @classmethod
    def of(cls, sym: KSymbol, coeff=1) -> KForm:
        return cls({sym: coeff})

    def __add__(self, other: KForm) -> KForm:
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out.get(s, ZERO) + c
        return KForm(out)

    def __neg__(self) -> KForm:
        return KForm({s: -c for s, c in self.terms.items()})

    def __sub__(self, other: KForm) -> KForm:
        return self + (-other)

    def __rmul__(self, s) -> KForm:
        s = Scalar.coerce(s)
        return KForm({k: s * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, KForm):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c.pretty()}) {s}" for s, c in sorted(self.terms.items()))

    __repr__ = __str__


ZERO_FORM = KForm()


def _s_ds(a: int, b: int, coeff: Fraction) -> KForm:
    """Class of coeff * s^a t^b ds."""
    if b != 0:
        return KForm.of(SDS(a + 1, b), coeff)
    # s^a ds = d(s^(a+1))/(a+1) unless a = -1
    return KForm.of(C0, coeff) if a == -1 else ZERO_FORM


def _t_dt(a: int, b: int, coeff: Fraction) -> KForm:
    """Class of coeff * s^a t^b dt."""
    if b == -1:
        return KForm.of(TDT(a), coeff)
    # d(s^a t^(b+1)) = a s^(a-1) t^(b+1) ds + (b+1) s^a t^b dt
    return _s_ds(a - 1, b + 1, -coeff * Fraction(a, b + 1))


def reduce(p: int, q: int, k: int, m: int) -> KForm:
    """Class of s^p t^q d(s^k t^m) in the basis."""
    out = ZERO_FORM
    if k:
        out = out + _s_ds(p + k - 1, q + m, Fraction(k))
    if m:
        out = out + _t_dt(p + k, q + m - 1, Fraction(m))
    return out


def in_K(p: int, q: int, k: int, m: int, r: int) -> bool:
    """Whether s^p t^q d(s^k t^m) lies in the r-graded piece: q + m = 0 mod r."""
    return (q + m) % r == 0


@dataclass
class SelfTestReport:
    checks: dict[str, tuple[int, int]] = field(default_factory=dict)  # name -> (passed, total)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, name: str, passed: bool, detail: str) -> None:
        good, total = self.checks.get(name, (0, 0))
        self.checks[name] = (good + passed, total + 1)
        if not passed and len(self.failures) < 20:
            self.failures.append(f"{name}: {detail}")

    def to_json(self) -> dict:
        return {
            "checks": {k: {"pass": g, "total": t} for k, (g, t) in self.checks.items()},
            "failures": list(self.failures),
            "ok": self.ok,
        }


def selftest(bound: int = 5) -> SelfTestReport:
    rep = SelfTestReport()
    rng = range(-bound, bound + 1)
    for l in rng:
        for k in rng:
            want = KForm.of(C0, k) if k == -l else ZERO_FORM
            got = reduce(l, 0, k, 0)
            rep.record("s^l ds^k", got == want, f"l={l}, k={k}: {got} != {want}")
            for m in rng:
                if m == 0:
                    continue
                # s^l t^-m d(s^k t^m); m = 1 is the classical identity
                want2 = want + KForm.of(TDT(k + l), m)
                got2 = reduce(l, -m, k, m)
                rep.record("s^l t^-m d(s^k t^m)", got2 == want2, f"l={l}, k={k}, m={m}: {got2} != {want2}")
    for p in rng:
        for q in rng:
            for k in rng:
                for m in rng:
                    total = reduce(p, q, k, m) + reduce(k, m, p, q)
                    rep.record("a db = -b da", total.is_zero(), f"({p},{q},{k},{m}): {total}")
    return rep
