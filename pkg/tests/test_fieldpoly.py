import pytest
from conftest import random_mixed

from hhsl2.fieldpoly import (
    ADJOINT,
    NATURAL,
    FpScalar,
    GradingError,
    IntPoly,
    NotDivisibleError,
    Poly,
    TagMismatchError,
    check_prime,
    fp_inv,
    homogeneous_component,
    inv_mod,
    is_prime,
    monomials_at,
    monomials_of_degree,
    z_lift_s,
)


def adj(p, terms):
    return Poly(ADJOINT, p, terms)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("bad", [2, 4, 9, 1, 0, -3, 3.0])
def test_check_prime_rejects(bad):
    with pytest.raises(ValueError):
        check_prime(bad)


@pytest.mark.parametrize("p,a,expected", [(5, 2, 3), (7, 4, 2), (3, 1, 1)])
def test_fp_inv_examples(p, a, expected):
    assert fp_inv(FpScalar(a, p)) == FpScalar(expected, p)


def test_fp_inv_zero():
    with pytest.raises(ZeroDivisionError):
        fp_inv(FpScalar(0, 5))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_inverses_all_units(p):
    for a in range(1, p):
        assert a * inv_mod(a, p) % p == 1


def test_scalar_arithmetic():
    a, b = FpScalar(3, 7), FpScalar(5, 7)
    assert a + b == FpScalar(1, 7)
    assert a - b == FpScalar(5, 7)
    assert a * b == FpScalar(1, 7)
    assert a / b == a * fp_inv(b)
    assert -a == FpScalar(4, 7)
    assert a ** 6 == FpScalar(1, 7)


def test_casimir_squared_p5():
    c = adj(5, {(0, 2, 0): 1, (1, 0, 1): 4})
    assert c * c == adj(5, {(0, 4, 0): 1, (1, 2, 1): 3, (2, 0, 2): 1})


def test_casimir_squared_matches_integers(p):
    # oracle: expand over Z, then reduce
    h, e, f = (IntPoly.var(ADJOINT, v) for v in "hef")
    c_int = h * h + 4 * e * f
    c = adj(p, {(0, 2, 0): 1, (1, 0, 1): 4})
    assert (c_int * c_int).reduce(p) == c * c


def test_zero_is_additive_identity(rng, p):
    a = random_mixed(rng, ADJOINT, p)
    assert a + Poly.zero(ADJOINT, p) == a


def test_natural_product_grading():
    x, y = Poly.var(NATURAL, 5, "x"), Poly.var(NATURAL, 5, "y")
    xy = x * y
    assert xy == Poly.monomial(NATURAL, 5, (1, 1))
    assert xy.degree() == 2 and xy.weight() == 0


def test_tag_mismatch():
    with pytest.raises(TagMismatchError):
        Poly.var(ADJOINT, 5, "e") + Poly.var(NATURAL, 5, "x")
    with pytest.raises(TagMismatchError):
        Poly.var(ADJOINT, 5, "e") * Poly.var(ADJOINT, 7, "e")


def test_ring_axioms(rng, p):
    for _ in range(50):
        a, b, c = (random_mixed(rng, ADJOINT, p) for _ in range(3))
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a * b == b * a
        assert a - a == Poly.zero(ADJOINT, p)


def test_coefficients_reduced(p):
    a = adj(p, {(1, 0, 0): p, (0, 1, 0): p + 1})
    assert a.terms == {(0, 1, 0): 1}


def test_mixed_grading_error():
    a = adj(5, {(1, 0, 0): 1, (0, 0, 0): 1})
    with pytest.raises(GradingError):
        a.degree()
    b = adj(5, {(1, 0, 0): 1, (0, 1, 0): 1})
    with pytest.raises(GradingError):
        b.weight()


def test_exact_div_example_p3():
    h = Poly.var(ADJOINT, 3, "h")
    c = adj(3, {(0, 2, 0): 1, (1, 0, 1): 4})
    num = h ** 3 - h * c
    assert num == adj(3, {(1, 1, 1): 2})
    assert num.exact_div_var("f") == adj(3, {(1, 1, 0): 2})


def test_exact_div_zero_and_error():
    assert Poly.zero(ADJOINT, 5).exact_div_var("e").is_zero()
    with pytest.raises(NotDivisibleError):
        Poly.monomial(ADJOINT, 5, (0, 2, 0)).exact_div_var("f")


def test_exact_div_roundtrip(rng, p):
    for v in "ehf":
        a = random_mixed(rng, ADJOINT, p)
        assert (a * Poly.var(ADJOINT, p, v)).exact_div_var(v) == a


def test_z_lift_s_p3():
    assert z_lift_s(3) == adj(3, {(1, 4, 1): 1, (2, 2, 2): 1, (3, 0, 3): 2})


def test_z_lift_s_definition(p):
    # oracle: p * s is c^p - 4 (ef)^p - h^2p over the integers
    h, e, f = (IntPoly.var(ADJOINT, v) for v in "hef")
    num = (h * h + 4 * e * f) ** p - 4 * (e * f) ** p - h ** (2 * p)
    assert all(c % p == 0 for c in num.terms.values())
    assert num.exact_div_int(p).reduce(p) == z_lift_s(p)


def test_homogeneous_component_examples():
    c = adj(5, {(0, 2, 0): 1, (1, 0, 1): 4})
    assert homogeneous_component(c, 2, 0) == c
    assert homogeneous_component(c, 2, 2).is_zero()
    a = adj(5, {(1, 1, 0): 1, (0, 1, 0): 1})
    assert homogeneous_component(a, 2, 2) == adj(5, {(1, 1, 0): 1})


def test_monomial_counts():
    for d in range(8):
        assert len(monomials_of_degree(ADJOINT, d)) == (d + 1) * (d + 2) // 2
        assert len(monomials_of_degree(NATURAL, d)) == d + 1
        total = sum(len(monomials_at(ADJOINT, d, w)) for w in range(-2 * d, 2 * d + 1, 2))
        assert total == (d + 1) * (d + 2) // 2
