"""Defining relations (1)-(10) in power-series form and the verification driver."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cartan import cartan_matrix, relation_constants
from .fields import DistExpr, FieldQuadratic
from .fock import Scheme, ZeroMode, clear_caches, enumerate_states, iter_mode_pairs, oracle_check
from .lattice import AlgebraType
from .realization import ALPHA, XMINUS, XPLUS, Realization, Variant, X, realization
from .scalar import ZERO
from .wick import BracketResult, ad_chain, bracket

SERRE_BY_ENTRY = {0: 7, -1: 8, -2: 9, -3: 10}


@dataclass(frozen=True, order=True)
class RelationCase:
    relation: int
    indices: tuple[int, ...]
    signs: tuple[int, ...] = ()
    # (2)/(3) pair with i > j, checked against the symmetric extension
    completion: bool = False

    def label(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        sg = "".join("+" if s > 0 else "-" for s in self.signs)
        extra = " (sym)" if self.completion else ""
        return f"({self.relation}) [{idx}]{' ' + sg if sg else ''}{extra}"


@dataclass
class CaseResult:
    case: RelationCase
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "relation": self.case.relation,
            "indices": list(self.case.indices),
            "signs": ["+" if s > 0 else "-" for s in self.case.signs],
            "status": "pass" if self.passed else "fail",
            "detail": self.detail,
        }


@dataclass
class Report:
    t: AlgebraType
    variant: Variant
    keep_null: bool
    results: list[CaseResult] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def n_fail(self) -> int:
        return len(self.results) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def by_relation(self) -> dict[int, dict[str, int]]:
        out = {k: {"pass": 0, "fail": 0} for k in range(1, 11)}
        for r in self.results:
            out[r.case.relation]["pass" if r.passed else "fail"] += 1
        return out

    def failures(self) -> list[CaseResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self, timing: bool = True) -> dict:
        return {
            "type": self.t.family.value,
            "n": self.t.n,
            "variant": self.variant.value,
            "keep_null": self.keep_null,
            "cases": [r.to_json() for r in self.results],
            "summary": {
                "pass": self.n_pass,
                "fail": self.n_fail,
                "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
                "by_relation": {str(k): v for k, v in self.by_relation().items()},
            },
        }


def enumerate_cases(t: AlgebraType, relations: Iterable[int] | None = None) -> list[RelationCase]:
    wanted = set(relations) if relations is not None else set(range(1, 11))
    idx = list(t.indices)
    a = cartan_matrix(t)
    consts = relation_constants(t)
    cases: list[RelationCase] = []

    for i in idx:
        for j in idx:
            if i == 0 and j == 0:
                number = 1
            else:
                number, _ = consts.alpha_alpha(i, j)
            if number in wanted:
                cases.append(RelationCase(number, (i, j), completion=i > j))
    if 4 in wanted:
        cases += [RelationCase(4, (i, j), (s,)) for i in idx for j in idx for s in (1, -1)]
    if 5 in wanted:
        cases += [RelationCase(5, (i,), (s,)) for i in idx for s in (1, -1)]
    if 6 in wanted:
        cases += [RelationCase(6, (i, j), (1, -1)) for i in idx for j in idx]
    for i in idx:
        for j in idx:
            if i == j:
                continue
            number = SERRE_BY_ENTRY.get(a[i][j])
            if number is None:
                raise ValueError(f"unexpected Cartan entry a[{i}][{j}] = {a[i][j]}")
            if number in wanted:
                cases += [RelationCase(number, (i, j), (s,)) for s in (1, -1)]
    return sorted(cases)


def expected_bracket(case: RelationCase, rz: Realization) -> BracketResult:
    """Right-hand side of a single-bracket relation (1)-(6)."""
    t = rz.t
    consts = relation_constants(t)
    zero = FieldQuadratic.zero(t.n)
    level = rz.level
    if case.relation in (1, 2, 3):
        i, j = case.indices
        _, k = consts.alpha_alpha(i, j)
        return BracketResult(zero, k * level)
    if case.relation == 4:
        i, j = case.indices
        (s,) = case.signs
        a = cartan_matrix(t)[i][j]
        return BracketResult((s * a) * rz.image(X(s, j)), ZERO)
    if case.relation == 5:
        return BracketResult(zero, ZERO)
    if case.relation == 6:
        i, j = case.indices
        if i != j:
            return BracketResult(zero, ZERO)
        return BracketResult(rz.image(ALPHA(i)), consts.c6(i) * level)
    raise ValueError(f"relation {case.relation} is not a single bracket")


def bracket_operands(case: RelationCase, rz: Realization) -> tuple[FieldQuadratic, FieldQuadratic]:
    if case.relation in (1, 2, 3):
        i, j = case.indices
        return rz.image(ALPHA(i)), rz.image(ALPHA(j))
    if case.relation == 4:
        i, j = case.indices
        return rz.image(ALPHA(i)), rz.image(X(case.signs[0], j))
    if case.relation == 5:
        (i,), (s,) = case.indices, case.signs
        return rz.image(X(s, i)), rz.image(X(s, i))
    if case.relation == 6:
        i, j = case.indices
        return rz.image(XPLUS(i)), rz.image(XMINUS(j))
    raise ValueError(f"relation {case.relation} is not a single bracket")


def serre_expression(case: RelationCase, rz: Realization) -> DistExpr:
    i, j = case.indices
    (s,) = case.signs
    length = 1 - cartan_matrix(rz.t)[i][j]
    gens = [(X(s, i), k + 2) for k in range(length)]
    return ad_chain(gens, (X(s, j), 1), rz)


def verify_case(case: RelationCase, rz: Realization) -> CaseResult:
    try:
        if case.relation <= 6:
            a, b = bracket_operands(case, rz)
            got = bracket(a, b)
            want = expected_bracket(case, rz)
            if got.field == want.field and got.central == want.central:
                return CaseResult(case, True)
            diff = got.field - want.field
            return CaseResult(
                case,
                False,
                f"computed {got}; expected {want}; field difference {diff}",
            )
        expr = serre_expression(case, rz)
        if expr.is_zero():
            return CaseResult(case, True)
        return CaseResult(case, False, f"nonzero remainder {expr}")
    except Exception as exc:  # surfaced as a failing case with diagnostics
        return CaseResult(case, False, f"internal error: {type(exc).__name__}: {exc}")


def _run_chunk(args) -> list[CaseResult]:
    t, variant, keep_null, cases = args
    rz = realization(t, variant, keep_null)
    return [verify_case(c, rz) for c in cases]


def verify_all(
    t: AlgebraType,
    variant: Variant = Variant.THEOREM,
    relations: Iterable[int] | None = None,
    threads: int = 1,
    keep_null: bool = False,
) -> Report:
    variant = Variant(variant)
    start = time.perf_counter()
    cases = enumerate_cases(t, relations)
    if threads > 1 and len(cases) > 1:
        chunks: Sequence[list[RelationCase]] = [cases[k::threads] for k in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(_run_chunk, [(t, variant, keep_null, c) for c in chunks if c])
            results = [r for part in parts for r in part]
    else:
        results = _run_chunk((t, variant, keep_null, cases))
    results.sort(key=lambda r: r.case)
    elapsed = (time.perf_counter() - start) * 1000
    return Report(t, variant, keep_null, results, elapsed)



@dataclass
class OracleCaseResult:
    case: RelationCase
    passed: bool
    checked: int
    detail: str = ""

    def to_json(self) -> dict:
        out = CaseResult(self.case, self.passed, self.detail).to_json()
        out["checked"] = self.checked
        return out


@dataclass
class OracleReport:
    t: AlgebraType
    variant: Variant
    modes: int
    depth: int
    scheme: Scheme
    n_states: int
    results: list[OracleCaseResult] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def n_pass(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def n_fail(self) -> int:
        return len(self.results) - self.n_pass

    @property
    def ok(self) -> bool:
        return self.n_fail == 0

    def to_json(self, timing: bool = True) -> dict:
        return {
            "type": self.t.family.value,
            "n": self.t.n,
            "variant": self.variant.value,
            "scheme": self.scheme.value,
            "modes": self.modes,
            "depth": self.depth,
            "states": self.n_states,
            "cases": [r.to_json() for r in self.results],
            "summary": {
                "pass": self.n_pass,
                "fail": self.n_fail,
                "checks": sum(r.checked for r in self.results),
                "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
            },
        }


ORACLE_RELATIONS = (1, 2, 3, 4, 5, 6)


def oracle_case(case: RelationCase, rz: Realization, states, modes: int,
                scheme: Scheme = Scheme.HALF, zero_mode: ZeroMode | None = None) -> OracleCaseResult:
    """Component form of a single-bracket relation for all |k|, |l| <= modes."""
    a, b = bracket_operands(case, rz)
    want = expected_bracket(case, rz)
    checked = 0
    for k, l in iter_mode_pairs(modes):
        res = oracle_check(a, b, want, k, l, states, scheme, zero_mode)
        checked += res.checked
        if not res.passed:
            return OracleCaseResult(case, False, checked, res.detail)
    return OracleCaseResult(case, True, checked)


def _run_oracle_chunk(args) -> list[OracleCaseResult]:
    t, variant, cases, modes, depth, scheme, zero_mode = args
    rz = realization(t, variant)
    states = enumerate_states(t.n, depth, scheme)
    out = [oracle_case(c, rz, states, modes, scheme, zero_mode) for c in cases]
    clear_caches()
    return out


def oracle_sweep(
    t: AlgebraType,
    variant: Variant = Variant.THEOREM,
    relations: Iterable[int] | None = None,
    modes: int = 2,
    depth: int = 2,
    scheme: Scheme = Scheme.HALF,
    zero_mode: ZeroMode | None = None,
    threads: int = 1,
) -> OracleReport:
    variant, scheme = Variant(variant), Scheme(scheme)
    wanted = set(ORACLE_RELATIONS if relations is None else relations)
    if not wanted <= set(ORACLE_RELATIONS):
        raise ValueError("the Fock oracle covers the single-bracket relations (1)-(6) only")
    if scheme is Scheme.INT and zero_mode is None:
        raise ValueError("scheme INT needs an explicit zero-mode convention")
    start = time.perf_counter()
    cases = enumerate_cases(t, wanted)
    n_states = len(enumerate_states(t.n, depth, scheme))
    if threads > 1 and len(cases) > 1:
        chunks = [cases[k::threads] for k in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            args = [(t, variant, c, modes, depth, scheme, zero_mode) for c in chunks if c]
            results = [r for part in pool.map(_run_oracle_chunk, args) for r in part]
    else:
        results = _run_oracle_chunk((t, variant, cases, modes, depth, scheme, zero_mode))
    results.sort(key=lambda r: r.case)
    elapsed = (time.perf_counter() - start) * 1000
    return OracleReport(t, variant, modes, depth, scheme, n_states, results, elapsed)
