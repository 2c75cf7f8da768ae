"""Ring structure, gradings and conjugation of sphere polynomials."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from crlab import Monomial, SpherePoly, gr, one, radius_sq, z1, z1c, z2, z2c
from conftest import SPHERE_POINTS, random_poly


def test_additive_inverse_cancels():
    assert (z1 + (-z1)).is_zero()


def test_addition_merges_terms():
    assert z1 + z1 == z1.scale(2)


def test_real_combination_fixed_by_conjugation():
    x = z1 * z2c + z2 * z1c
    assert len(x) == 2
    assert x.conj() == x


def test_product_of_variable_and_conjugate():
    assert z1 * z1c == SpherePoly.monomial(Monomial(1, 0, 1, 0))


def test_square_of_real_sum():
    lhs = (z1 + z1c) ** 2
    rhs = z1 ** 2 + (z1 * z1c).scale(2) + z1c ** 2
    assert lhs == rhs


def test_unit_modulus_coefficient():
    phi = z2.scale(gr(0, 1))
    assert phi * phi.conj() == z2 * z2c


def test_circle_grade_split_examples():
    parts = (z1 + z2c).circle_components()
    assert parts == {1: z1, -1: z2c}
    assert (z1 * z1c).circle_components() == {0: z1 * z1c}
    parts = (z1 ** 4 + z1 * z2c).circle_components()
    assert parts == {4: z1 ** 4, 0: z1 * z2c}


def test_bigraded_split_examples():
    parts = (z1 + z1 * z1c + one).bigraded_components()
    assert set(parts) == {(1, 0), (1, 1), (0, 0)}
    assert parts[(1, 1)] == z1 * z1c


def test_decompositions_sum_to_whole(rng):
    for _ in range(20):
        x = random_poly(rng)
        total = SpherePoly.zero()
        for piece in x.bigraded_components().values():
            total = total + piece
        assert total == x
        total = SpherePoly.zero()
        for piece in x.circle_components().values():
            total = total + piece
        assert total == x


def test_decompositions_are_idempotent_projections(rng):
    x = random_poly(rng)
    for key, piece in x.bigraded_components().items():
        assert piece.bigraded_components() == {key: piece}
    for key, piece in x.circle_components().items():
        assert piece.circle_components() == {key: piece}


def test_conjugation_is_ring_involution(rng):
    for _ in range(10):
        x, y = random_poly(rng), random_poly(rng)
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x * y).conj() == y.conj() * x.conj()
        assert (x + y).conj() == x.conj() + y.conj()
        assert x.conj().conj() == x


def test_evaluation_is_a_ring_homomorphism(rng):
    x, y = random_poly(rng), random_poly(rng)
    for pt in SPHERE_POINTS[:4]:
        assert (x * y).eval_at(*pt) == x.eval_at(*pt) * y.eval_at(*pt)
        assert (x + y).eval_at(*pt) == x.eval_at(*pt) + y.eval_at(*pt)
        assert x.conj().eval_at(*pt) == x.eval_at(*pt).conj()


def test_high_degree_arithmetic_stays_exact():
    # Total degree 20, checked against exact evaluation at sphere points.
    x = (z1 + z2c.scale(gr(Fraction(1, 3), 1))) ** 10
    y = (z2 - z1c.scale(Fraction(2, 5))) ** 10
    prod = x * y
    assert prod.total_degree() == 20
    for pt in SPHERE_POINTS[:3]:
        assert prod.eval_at(*pt) == x.eval_at(*pt) * y.eval_at(*pt)


def test_radius_polynomial_is_real_and_grade_zero():
    assert radius_sq.conj() == radius_sq
    assert radius_sq.circle_components() == {0: radius_sq}


def test_scale_and_zero_purge():
    assert z1.scale(0).is_zero()
    assert (z1 - z1).is_zero()
    assert not SpherePoly.zero()


@st.composite
def small_polys(draw):
    n = draw(st.integers(0, 4))
    out = SpherePoly.zero()
    for _ in range(n):
        exps = draw(st.tuples(st.integers(0, 2), st.integers(0, 2),
                              st.integers(0, 2), st.integers(0, 2)))
        num = draw(st.integers(-5, 5))
        den = draw(st.integers(1, 4))
        imnum = draw(st.integers(-5, 5))
        out = out + SpherePoly.monomial(Monomial(*exps), gr(Fraction(num, den), imnum))
    return out


@settings(max_examples=60)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
