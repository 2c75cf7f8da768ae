"""Exact moments and the L^2 inner product, checked against the Beta oracle."""

from fractions import Fraction

import pytest

from crlab import (Monomial, MulBy, SpherePoly, canonicalize, gr, inner,
                   integrate, integrate_monomial, norm_sq, one, sphere_equal,
                   z1, z2)
from crlab.integration import Measure, moment
from conftest import beta_moment, oracle_inner, oracle_integral, random_poly


def test_mismatched_exponents_integrate_to_zero():
    assert integrate_monomial(Monomial(1, 0, 0, 1)).is_zero()
    assert integrate_monomial(Monomial(2, 1, 1, 2)).is_zero()


def test_first_moments_match_beta_oracle():
    # |z1|^2 -> 1/2 and |z1 z2|^2 -> 1/6 under the unit-mass measure.
    assert integrate_monomial(Monomial(1, 0, 1, 0)) == gr(Fraction(1, 2))
    assert integrate_monomial(Monomial(1, 1, 1, 1)) == gr(Fraction(1, 6))
    for a in range(6):
        for b in range(6):
            assert moment(a, b) == beta_moment(a, b)


def test_inner_product_examples():
    assert inner(z1, z1) == gr(Fraction(1, 2))
    assert inner(z1, z2).is_zero()
    assert inner(one, one) == gr(1)


def test_integrate_agrees_with_oracle_on_random_polys(rng):
    for _ in range(25):
        x = random_poly(rng)
        assert integrate(x) == oracle_integral(x)


def test_inner_agrees_with_oracle_and_is_conjugate_symmetric(rng):
    for _ in range(15):
        x, y = random_poly(rng), random_poly(rng)
        value = inner(x, y)
        assert value == oracle_inner(x, y)
        assert inner(y, x) == value.conj()


def test_norm_positive_definite_on_sphere_functions(rng):
    for _ in range(10):
        x = random_poly(rng)
        value = norm_sq(x)
        assert value.is_real() and value.real_sign() >= 0
        assert (value.real_sign() == 0) == sphere_equal(x, SpherePoly.zero())


def test_parseval_against_harmonic_components(rng):
    for _ in range(10):
        x = random_poly(rng, max_p=2, max_q=2)
        total = gr(0)
        for piece in canonicalize(x).values():
            total = total + inner(piece, piece)
        assert inner(x, x) == total


def test_circle_grading_orthogonality(rng):
    x = random_poly(rng)
    pieces = x.circle_components()
    keys = sorted(pieces)
    for i, mi in enumerate(keys):
        for mj in keys[i + 1:]:
            assert inner(pieces[mi], pieces[mj]).is_zero()


def test_multiplication_by_real_function_is_symmetric(rng):
    g = random_poly(rng, max_p=2, max_q=2)
    g = g + g.conj()  # force real
    mul = MulBy(g)
    for _ in range(5):
        x, y = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
        assert inner(mul(x), y) == inner(x, mul(y))


def test_measure_normalization_must_be_positive_real():
    with pytest.raises(ValueError):
        Measure(gr(-1))
    with pytest.raises(ValueError):
        Measure(gr(0, 1))
    doubled = Measure(gr(2))
    assert integrate(one, doubled) == gr(2)
