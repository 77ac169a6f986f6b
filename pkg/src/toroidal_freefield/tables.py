"""Constant tables, the alpha sum rule and plain-text image dumps."""

from __future__ import annotations

from .cartan import cartan_matrix, relation_constants
from .lattice import AlgebraType, d_const, gram, theta0
from .realization import ALPHA, CENTRAL, Realization, Variant, realization
from .scalar import ZERO, Scalar


def nullspace(rows: list[list[Scalar]], width: int) -> list[list[Scalar]]:
    """Basis of {x : rows . x = 0} by exact Gauss-Jordan elimination."""
    m = [list(r) for r in rows if any(not v.is_zero() for v in r)]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        piv = next((i for i in range(rank, len(m)) if not m[i][col].is_zero()), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col].inv()
        m[rank] = [v * inv for v in m[rank]]
        for i in range(len(m)):
            if i != rank and not m[i][col].is_zero():
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    basis = []
    for free in (c for c in range(width) if c not in pivots):
        x = [ZERO] * width
        x[free] = Scalar.from_rational(1)
        for r, pc in enumerate(pivots):
            x[pc] = -m[r][free]
        basis.append(x)
    return basis


def alpha_kernel(rz: Realization) -> list[list[Scalar]]:
    """Kernel of lambda -> sum_i lambda_i rho(alpha_i), as matrices."""
    idx = list(rz.t.indices)
    images = [rz.image(ALPHA(i)) for i in idx]
    keys = sorted({k for f in images for k in f.entries})
    rows = [[f[key] for f in images] for key in keys]
    basis = nullspace(rows, len(idx))
    return [_normalize(v) for v in basis]


def _normalize(v: list[Scalar]) -> list[Scalar]:
    # scale so the last nonzero coordinate is 1 and clear rational denominators
    lead = next(x for x in reversed(v) if not x.is_zero())
    v = [x / lead for x in v]
    if all(x.is_rational() for x in v):
        from math import lcm

        den = lcm(*(x.to_fraction().denominator for x in v))
        v = [x * den for x in v]
    return v


def tables(t: AlgebraType, variant: Variant = Variant.THEOREM) -> dict:
    rz = realization(t, Variant(variant))
    consts = relation_constants(t)
    a = cartan_matrix(t)
    idx = list(t.indices)
    level = rz.image(CENTRAL)
    kernel = alpha_kernel(rz)
    return {
        "type": t.family.value,
        "n": t.n,
        "label": str(t),
        "r": t.r,
        "variant": rz.variant.value,
        "cartan_matrix": [list(row) for row in a],
        "d": [_s(d_const(t, i)) for i in idx],
        "theta0_norm": _s(gram(theta0(t), theta0(t))),
        "rho_c": _s(level),
        "level": [_s(level), "0"],
        "k1": _s(consts.k1),
        "alpha_pairs": {
            f"{i},{j}": {"relation": num, "k": _s(k)}
            for i in idx for j in idx if (i, j) != (0, 0)
            for num, k in [consts.alpha_alpha(i, j)]
        },
        "c6": [_s(consts.c6(i)) for i in idx],
        "alpha_kernel": [[_s(x) for x in v] for v in kernel],
        "alpha_kernel_dim": len(kernel),
    }


def _s(x: Scalar) -> str:
    return x.pretty()


def render_tables(data: dict) -> str:
    lines = [f"{data['label']}  (r = {data['r']}, variant {data['variant']})"]
    lines.append("cartan matrix:")
    lines += ["  " + " ".join(f"{v:>3}" for v in row) for row in data["cartan_matrix"]]
    lines.append(f"d = ({', '.join(data['d'])})   (theta0|theta0) = {data['theta0_norm']}")
    lines.append(f"rho(c) = {data['rho_c']}   level (k0, k1) = ({data['level'][0]}, {data['level'][1]})")
    lines.append(f"relation (1) constant k1 = {data['k1']}")
    for key, v in data["alpha_pairs"].items():
        lines.append(f"  [alpha_{key.replace(',', ', alpha_')}]  relation ({v['relation']})  k = {v['k']}")
    lines.append("relation (6) constants c6 = (" + ", ".join(data["c6"]) + ")")
    kern = "; ".join("(" + ", ".join(v) + ")" for v in data["alpha_kernel"])
    lines.append(f"kernel of sum_i lambda_i rho(alpha_i): dim {data['alpha_kernel_dim']}  {kern}")
    return "\n".join(lines)


def dump_rho(t: AlgebraType, variant: Variant = Variant.THEOREM) -> list[tuple[str, str]]:
    rz = realization(t, Variant(variant))
    out = []
    for sym in rz.symbols():
        img = rz.image(sym)
        out.append((str(sym), img.pretty() if isinstance(img, Scalar) else img.render("z")))
    return out
