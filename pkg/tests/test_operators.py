"""The CR vector fields, canonical operators and the Bochner identity."""

import pytest

from crlab import (CONJ_KOHN, KOHN, PANEITZ, SUBLAP, SpherePoly, apply_T,
                   apply_Z1, apply_Z1bar, basis, bochner_residual,
                   common_eigenvalue, conj_kohn, grad_op, gr, inner, kohn,
                   kohn_energy_identity, one, paneitz, radius_sq, sphere_equal,
                   sublap, z1, z1c, z2, z2c)
from crlab.operators import T, Z1, Z1BAR
from conftest import random_poly, vanishes_on_sphere

ZERO = SpherePoly.zero()


def test_z1_on_coordinates():
    assert apply_Z1(z1) == z2c
    assert apply_Z1(z2) == -z1c
    assert apply_Z1(z1c).is_zero()


def test_z1bar_on_coordinates_and_conj_consistency():
    assert apply_Z1bar(z1c) == z2
    assert apply_Z1bar(z1).is_zero()
    assert apply_Z1bar(z1.conj()) == apply_Z1(z1).conj() == z2


def test_fields_are_tangent_to_the_sphere():
    # Annihilate |z1|^2+|z2|^2 exactly, not just modulo the sphere relation.
    assert apply_Z1(radius_sq).is_zero()
    assert apply_Z1bar(radius_sq).is_zero()
    assert apply_T(radius_sq).is_zero()


def test_reeb_acts_by_circle_grade():
    assert apply_T(z1) == z1.scale(gr(0, 1))
    assert apply_T(z1 * z1c).is_zero()
    assert apply_T(z1 ** 4) == (z1 ** 4).scale(gr(0, 4))


def test_second_order_examples():
    assert kohn(z1c) == z1c.scale(2)
    assert conj_kohn(z1) == z1.scale(2)
    assert sublap(z1 * z2c) == (z1 * z2c).scale(4)
    assert sublap(one).is_zero()


def test_paneitz_examples():
    assert paneitz(z1).is_zero()
    assert paneitz(z1 * z2c) == (z1 * z2c).scale(4)
    assert paneitz(z1 ** 2 * z2c) == (z1 ** 2 * z2c).scale(12)


def test_eigenvalue_table_small_range():
    for p in range(4):
        for q in range(4):
            for f in basis(p, q).elements:
                assert kohn(f) == f.scale(2 * (p + 1) * q)
                assert conj_kohn(f) == f.scale(2 * (q + 1) * p)
                assert sublap(f) == f.scale(2 * p * q + p + q)
                assert paneitz(f) == f.scale(p * q * (p + 1) * (q + 1))


def test_common_eigenvalue_helper():
    assert common_eigenvalue(PANEITZ, 1, 1) == gr(4)
    assert common_eigenvalue(KOHN, 0, 1) == gr(2)
    assert common_eigenvalue(SUBLAP, 0, 0) == gr(0)


def test_common_eigenvalue_rejects_non_scalar_action():
    from crlab import MulBy

    with pytest.raises(ArithmeticError):
        common_eigenvalue(MulBy(z1), 1, 0)


def test_kohn_minus_conj_kohn_is_2iT():
    # 2(p+1)q - 2(q+1)p = 2(q-p) matches the action 2i * (i m) = -2m = 2(q-p).
    for p in range(7):
        for q in range(7):
            assert 2 * (p + 1) * q - 2 * (q + 1) * p == 2 * (q - p)
    for p in range(4):
        for q in range(4):
            for f in basis(p, q).elements:
                assert kohn(f) - conj_kohn(f) == apply_T(f).scale(gr(0, 2))


def test_sublaplacian_is_minus_the_symmetrized_composition(rng):
    # sublap = -(Z1 Z1bar + Z1bar Z1), the sign convention behind 2pq+p+q.
    for _ in range(5):
        f = random_poly(rng, 2, 2)
        assert sublap(f) == -(apply_Z1(apply_Z1bar(f)) + apply_Z1bar(apply_Z1(f)))


def test_integration_by_parts_adjoints(rng):
    # <Z1 f, g> = -<f, Z1bar g>; T is skew-adjoint.
    for _ in range(8):
        f, g = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
        assert inner(apply_Z1(f), g) == -inner(f, apply_Z1bar(g))
        assert inner(apply_T(f), g) == -inner(f, apply_T(g))


def test_gradient_pairing_operator():
    assert grad_op(one)(z1 + z2c).is_zero()
    # Hand product-rule expansion: Z1bar(z1 z1c) = z1 z2, Z1(z1 z1c) = z1c z2c,
    # so grad_op(z1 z1c) z1 = z1 z2 * z2c + z1c z2c * 0.
    assert grad_op(z1 * z1c)(z1) == z1 * z2 * z2c


def test_gradient_pairing_product_rule(rng):
    # kohn(g f) = kohn(g) f + g kohn(f) - 2 grad_op(g) f, the identity the
    # second-variation assembly leans on.
    for _ in range(5):
        g = random_poly(rng, 2, 2)
        f = random_poly(rng, 2, 2)
        assert kohn(g * f) == kohn(g) * f + g * kohn(f) - grad_op(g)(f).scale(2)


def test_kohn_and_paneitz_are_symmetric_operators(rng):
    elems = [f for s in range(4) for p in range(s + 1) for f in basis(p, s - p).elements]
    for _ in range(6):
        x, y = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
        assert inner(kohn(x), y) == inner(x, kohn(y))
        assert inner(paneitz(x), y) == inner(x, paneitz(y))
    for f in elems[:6]:
        for h in elems[:6]:
            assert inner(paneitz(f), h) == inner(f, paneitz(h))


def test_bochner_residual_vanishes_for_fixed_examples():
    for phi in [z1, z1c, z1 * z2c + (z2 ** 2).scale(gr(0, 1))]:
        residual = bochner_residual(phi)
        assert sphere_equal(residual, ZERO)
        assert vanishes_on_sphere(residual)


def test_bochner_residual_vanishes_for_random_corpus(rng):
    for _ in range(8):
        phi = random_poly(rng, max_p=3, max_q=3, terms=4)
        assert sphere_equal(bochner_residual(phi), ZERO)


def test_kohn_energy_identity_examples():
    assert kohn_energy_identity(0, 1)   # smallest nonzero eigenvalue 2 = curvature
    assert kohn_energy_identity(1, 0)   # degenerate CR side: 0 = 0
    assert kohn_energy_identity(2, 1)   # eigenvalue 6
    with pytest.raises(ValueError):
        kohn_energy_identity(0, 0)


def test_operator_algebra_composition_linearity(rng):
    op = (2 * (Z1 @ Z1BAR) + T) @ (Z1BAR + Z1)
    x, y = random_poly(rng, 2, 2), random_poly(rng, 2, 2)
    assert op(x + y) == op(x) + op(y)
    left = (Z1 @ (Z1BAR @ T))(x)
    right = ((Z1 @ Z1BAR) @ T)(x)
    assert left == right


def test_conjugate_operator_of_kohn_is_conj_kohn(rng):
    x = random_poly(rng, 2, 2)
    assert KOHN.conj_op()(x) == conj_kohn(x)
    assert CONJ_KOHN.conj_op()(x) == kohn(x)
    assert T.conj_op()(x) == apply_T(x)
