import random

import pytest

from hhsl2.fieldpoly import ADJOINT, NATURAL, Poly, monomials_of_degree

PRIMES = (3, 5, 7)


def random_poly(rng, varset, p, degree, nterms=4):
    """A random homogeneous polynomial of the given degree."""
    monos = monomials_of_degree(varset, degree)
    return Poly(varset, p, {rng.choice(monos): rng.randrange(p) for _ in range(nterms)})


def random_mixed(rng, varset, p, max_degree=4, nterms=5):
    """A random polynomial whose terms may have different degrees."""
    terms = {}
    for _ in range(nterms):
        d = rng.randrange(max_degree + 1)
        terms[rng.choice(monomials_of_degree(varset, d))] = rng.randrange(p)
    return Poly(varset, p, terms)


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture(params=PRIMES)
def p(request):
    return request.param


__all__ = ["ADJOINT", "NATURAL", "PRIMES", "random_poly", "random_mixed"]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
