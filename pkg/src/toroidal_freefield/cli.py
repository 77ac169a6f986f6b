"""Command-line front end: verify, oracle, tables, dump-rho, kaehler-selftest.

Exit status: 0 when every requested check passes, 1 on a verification
failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import kaehler
from .fock import Scheme, ZeroMode
from .lattice import AlgebraType, Family, min_rank
from .realization import Variant, realization
from .relations import ORACLE_RELATIONS, Report, oracle_sweep, verify_all
from .tables import dump_rho, render_tables, tables

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_relations(text: str | None, allowed=range(1, 11)) -> list[int] | None:
    """'1,2,7-10' -> [1, 2, 7, 8, 9, 10]."""
    if text is None:
        return None
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                lo, hi = (int(x) for x in part.split("-", 1))
                out.update(range(lo, hi + 1))
            elif part:
                out.add(int(part))
    except ValueError:
        raise UsageError(f"cannot parse relation list {text!r}") from None
    bad = sorted(out - set(allowed))
    if bad or not out:
        raise UsageError(f"relation numbers must lie in {min(allowed)}..{max(allowed)}, got {text!r}")
    return sorted(out)


def _algebra(args) -> AlgebraType:
    n = args.n if args.n is not None else min_rank(args.family)
    try:
        return AlgebraType.make(args.family, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(data: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(data, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _report_text(rep: Report, probe: Report | None) -> str:
    lines = [f"# {rep.t}  variant={rep.variant.value}  keep_null={rep.keep_null}",
             "relation\tindices\tsigns\tstatus\tdetail"]
    for r in rep.results:
        row = r.to_json()
        lines.append("\t".join([
            str(row["relation"]), ",".join(map(str, row["indices"])), "".join(row["signs"]) or "-",
            row["status"], row["detail"] or "-",
        ]))
    by = rep.by_relation()
    counts = " ".join(f"({k}):{v['pass']}/{v['pass'] + v['fail']}" for k, v in by.items() if v["pass"] + v["fail"])
    lines.append(f"# summary pass={rep.n_pass} fail={rep.n_fail} elapsed_ms={rep.elapsed_ms:.1f}")
    lines.append(f"# by relation {counts}")
    if probe is not None:
        lines.append(f"# variant probe {probe.variant.value}: pass={probe.n_pass} fail={probe.n_fail}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    t = _algebra(args)
    relations = parse_relations(args.relations)
    variant = Variant(args.variant)
    rep = verify_all(t, variant, relations, threads=args.threads, keep_null=args.keep_null)
    probe = None
    if t.family in (Family.A_EVEN, Family.D_SERIES):
        other = Variant.PROOF if variant is Variant.THEOREM else Variant.THEOREM
        probe = verify_all(t, other, relations, threads=1, keep_null=args.keep_null)
    data = rep.to_json(timing=args.timing)
    if probe is not None:
        data["variant_probe"] = {
            "variant": probe.variant.value,
            "pass": probe.n_pass,
            "fail": probe.n_fail,
            "failures": [r.case.label() for r in probe.failures()],
        }
    if args.figures:
        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        from .plotting import relation_chart

        stem = f"{t.family.value}-n{t.n}-{variant.value}"
        path = relation_chart(data["summary"]["by_relation"], f"{t} ({variant.value})", out / f"verify-{stem}.png")
        data["figures"] = [str(path)]
    _emit(data, _report_text(rep, probe), args.format)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    t = _algebra(args)
    relations = parse_relations(args.relations, ORACLE_RELATIONS)
    scheme = Scheme(args.scheme)
    zero_mode = ZeroMode(args.zero_mode) if args.zero_mode else None
    if scheme is Scheme.INT and zero_mode is None:
        raise UsageError("--scheme int needs --zero-mode (no zero-mode vacuum convention is assumed)")
    if args.modes < 0 or args.depth < 0:
        raise UsageError("--modes and --depth must be non-negative")
    rep = oracle_sweep(t, Variant(args.variant), relations, args.modes, args.depth, scheme, zero_mode,
                       threads=args.threads)
    data = rep.to_json(timing=args.timing)
    lines = [f"# oracle {t}  variant={rep.variant.value} scheme={scheme.value} modes<={args.modes} "
             f"depth<={args.depth} states={rep.n_states}",
             "relation\tindices\tsigns\tstatus\tchecked\tdetail"]
    for r in rep.results:
        row = r.to_json()
        lines.append("\t".join([str(row["relation"]), ",".join(map(str, row["indices"])),
                                "".join(row["signs"]) or "-", row["status"], str(r.checked), row["detail"] or "-"]))
    lines.append(f"# summary pass={rep.n_pass} fail={rep.n_fail} elapsed_ms={rep.elapsed_ms:.1f}")
    _emit(data, "\n".join(lines), args.format)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_tables(args) -> int:
    t = _algebra(args)
    data = tables(t, Variant(args.variant))
    if args.figures:
        out = Path(args.figures)
        out.mkdir(parents=True, exist_ok=True)
        from .plotting import cartan_heatmap

        path = cartan_heatmap(data["cartan_matrix"], f"GCM {t}", out / f"cartan-{t.family.value}-n{t.n}.png")
        data["figures"] = [str(path)]
    _emit(data, render_tables(data), args.format)
    return EXIT_OK


def cmd_dump_rho(args) -> int:
    t = _algebra(args)
    variant = Variant(args.variant)
    rows = dump_rho(t, variant)
    rz = realization(t, variant)
    data = {"type": t.family.value, "n": t.n, "variant": variant.value, "images": {}}
    for sym in rz.symbols():
        img = rz.image(sym)
        if sym.kind == "c":
            data["images"][str(sym)] = {"scalar": img.pretty()}
        else:
            data["images"][str(sym)] = {
                "render": img.render("z"),
                "entries": [[p.label, q.label, v.pretty()] for (p, q), v in img.items()],
            }
    text = "\n".join(f"{name}\t{img}" for name, img in rows)
    _emit(data, f"# rho images for {t} ({variant.value})\n{text}", args.format)
    return EXIT_OK


def cmd_kaehler(args) -> int:
    if args.bound < 0:
        raise UsageError("--bound must be non-negative")
    rep = kaehler.selftest(args.bound)
    data = rep.to_json()
    data["bound"] = args.bound
    lines = [f"# kaehler self-test, exponents in [-{args.bound}, {args.bound}]"]
    lines += [f"{name}\t{g}/{tot}" for name, (g, tot) in rep.checks.items()]
    lines += [f"FAIL\t{f}" for f in rep.failures]
    _emit(data, "\n".join(lines), args.format)
    return EXIT_OK if rep.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toroidal-freefield",
        description="Exact checks of a bosonic free-field realization of twisted toroidal Lie algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, variant=True):
        p.add_argument("--family", "--type", dest="family", required=True, choices=[f.value for f in Family])
        p.add_argument("--n", type=int, default=None, help="rank (default: smallest allowed)")
        if variant:
            p.add_argument("--variant", choices=[v.value for v in Variant], default="theorem")
        p.add_argument("--format", choices=["text", "json"], default="text")

    def timing(p):
        p.add_argument("--timing", action="store_true",
                       help="report wall-clock time in JSON (otherwise 0, keeping output byte-stable)")

    p = sub.add_parser("verify", help="symbolic check of relations (1)-(10)")
    common(p)
    p.add_argument("--relations", help="e.g. 1,2,7-10 (default: all)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--keep-null", action="store_true",
                   help="keep the c components of beta/betabar in the images")
    p.add_argument("--figures", metavar="DIR", help="write a per-relation pass/fail chart here")
    timing(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="component-wise check of relations (1)-(6) on the truncated Fock space")
    common(p)
    p.add_argument("--relations", help="subset of 1-6 (default: all)")
    p.add_argument("--modes", type=int, default=2, help="check all |k|, |l| <= MODES")
    p.add_argument("--depth", type=int, default=2, help="creation depth of the basis states")
    p.add_argument("--scheme", choices=[s.value for s in Scheme], default="half")
    p.add_argument("--zero-mode", choices=[z.value for z in ZeroMode], default=None,
                   help="zero-mode convention, required with --scheme int")
    p.add_argument("--threads", type=int, default=1)
    timing(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("tables", help="Cartan matrix, constants, level and the alpha sum rule")
    common(p)
    p.add_argument("--figures", metavar="DIR", help="write a Cartan-matrix heatmap here")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("dump-rho", help="print every generator image")
    common(p)
    p.set_defaults(func=cmd_dump_rho)

    p = sub.add_parser("kaehler-selftest", help="reduction identities for Kaehler differential classes")
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_kaehler)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
