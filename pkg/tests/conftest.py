import random
import sys
from fractions import Fraction

import pytest

from sphere_closure import SphereSpec, field_from_root, make_field


@pytest.fixture(scope="session")
def sqrt2():
    return make_field([-2, 0, 1], (1, 2, 0, 0))


@pytest.fixture(scope="session")
def cbrt2():
    return make_field([-2, 0, 0, 1], (1, 2, 0, 0))


@pytest.fixture(scope="session")
def spec_a(sqrt2):
    return SphereSpec(2, sqrt2, (sqrt2.gen, 1), (0, 0))


@pytest.fixture(scope="session")
def spec_b(sqrt2):
    return SphereSpec(3, sqrt2, (sqrt2.gen, 0, 0), (1, 1, 0))


@pytest.fixture(scope="session")
def spec_c(cbrt2):
    return SphereSpec(2, cbrt2, (cbrt2.gen, 0), (0, 0))


def rand_q(rng: random.Random, h: int = 9, zero_ok: bool = True) -> Fraction:
    while True:
        x = Fraction(rng.randint(-h, h), rng.randint(1, h))
        if zero_ok or x:
            return x


def rand_vec(rng, n, h=9):
    return tuple(rand_q(rng, h) for _ in range(n))


def random_irreducible(rng: random.Random, degree: int):
    """A random irreducible integer polynomial (constant first), by rejection."""
    import sympy
    t = sympy.Symbol("t")
    while True:
        coeffs = [rng.randint(-6, 6) for _ in range(degree)] + [1]
        if coeffs[0] == 0:
            continue
        if sympy.Poly(list(reversed(coeffs)), t).is_irreducible:
            return coeffs


def random_field(rng: random.Random, degree: int, real: bool | None = None):
    """Random field of the given degree with a randomly chosen designated root."""
    from sphere_closure.roots import certified_roots
    while True:
        f = random_irreducible(rng, degree)
        roots = certified_roots([Fraction(c) for c in f], 20)
        idx = [i for i, r in enumerate(roots) if real is None or r.is_real == real]
        if idx:
            return field_from_root(f, rng.choice(idx))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
