from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from toroidal_freefield.fields import FieldQuadratic
from toroidal_freefield.lattice import AlgebraType, basis
from toroidal_freefield.scalar import Scalar

ALL_TYPES = [
    ("a-odd", 3), ("a-odd", 4), ("a-odd", 5),
    ("a-even", 2), ("a-even", 3), ("a-even", 4),
    ("d-series", 2), ("d-series", 3), ("d-series", 4),
    ("d4", 2),
]
SMALLEST = [("a-odd", 3), ("a-even", 2), ("d-series", 2), ("d4", 2)]


def scalars(bound: int = 4):
    coords = st.lists(st.integers(-bound, bound), min_size=8, max_size=8)
    dens = st.integers(1, 3)
    return st.builds(lambda c, d: Scalar.from_coords([Fraction(x, d) for x in c]), coords, dens)


def small_scalars():
    # sparse elements: a few powers of zeta with small rational weights
    return st.builds(
        lambda terms: sum((Scalar.zeta_power(k) * w for k, w in terms), Scalar.from_rational(0)),
        st.lists(st.tuples(st.integers(0, 23), st.integers(-3, 3)), max_size=3),
    )


def random_quadratic(rng: random.Random, n: int, density: float = 0.15, with_null: bool = True) -> FieldQuadratic:
    idx = basis(n) if with_null else [b for b in basis(n) if b.kind]
    entries = {}
    for p in idx:
        for q in idx:
            if rng.random() < density:
                entries[(p, q)] = Scalar.zeta_power(rng.randrange(24)) * rng.randint(-3, 3)
    return FieldQuadratic(n, entries)


@pytest.fixture(params=ALL_TYPES, ids=lambda p: f"{p[0]}-{p[1]}")
def algebra(request) -> AlgebraType:
    return AlgebraType.make(*request.param)


@pytest.fixture(params=SMALLEST, ids=lambda p: f"{p[0]}-{p[1]}")
def small_algebra(request) -> AlgebraType:
    return AlgebraType.make(*request.param)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import pytest_lines

    lines = pytest_lines()
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
