"""Deformed CR structures Z1bar + phi*Z1 on S^3: torsion and expansion jets.

A deformation function phi (with |phi| < 1 where evaluation matters) turns
the standard structure into the one spanned by ``Z1bar + phi Z1``.  Along
the line ``phi_t = t*phi`` the natural normalized frame is

    Z1bar^t = F (Z1bar + t phi Z1),     F = (1 - t^2 |phi|^2)^(-1/2),

with F chosen so the Levi form stays normalized.  The deformed structure's
pseudohermitian torsion has the exact closed form

    A^t = -t (phi_0 - 4i phi) / (1 - t^2 |phi|^2),       phi_0 = T phi,

so the torsion vanishes identically precisely when phi_0 = 4i*phi, i.e.
when every bigraded component of phi lies in P_{q+4,q}.

F is irrational in t, so nothing here represents it in closed form: only
F^2 (an exact rational pair) and truncated t-expansions exist.
:class:`TJet` is the truncated-power-series vehicle carrying those
expansions; its coefficients may be polynomials or operators, and products
truncate beyond the fixed order.  From the jets of F and of the connection
coefficients we assemble the t-expansion of the deformed conjugate Kohn
Laplacian and of (four times) the deformed Paneitz operator, the
independent route against which the closed-form variation operators in
:mod:`crlab.variation` are checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple

from .operators import (LinOp, MulBy, SUBLAP, Z1, Z1BAR, apply_T, apply_Z1,
                        apply_Z1bar)
from .scalars import GaussianRational, I
from .spherepoly import SpherePoly


class UnsupportedOrderError(ValueError):
    """Requested jet order beyond the implemented expansions."""


class DegenerateStructureError(ValueError):
    """The deformed structure degenerates (|t| = 1 in the constant family)."""


class TJet:
    """Polynomial in the deformation parameter t, truncated at a fixed order.

    Coefficients may be any values supporting + and * (SpherePoly for scalar
    jets, LinOp for operator jets, where * is composition).  All arithmetic
    truncates beyond ``order``.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        self.coeffs = coeffs
        self.order = order

    def __getitem__(self, power: int):
        if power < len(self.coeffs):
            return self.coeffs[power]
        raise IndexError(f"jet truncated at order {self.order} has no t^{power} term")

    def __add__(self, other: "TJet") -> "TJet":
        order = min(self.order, other.order)
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(min(n, order + 1)):
            left = self.coeffs[k] if k < len(self.coeffs) else None
            right = other.coeffs[k] if k < len(other.coeffs) else None
            if left is None:
                out.append(right)
            elif right is None:
                out.append(left)
            else:
                out.append(left + right)
        return TJet(out, order)

    def __sub__(self, other: "TJet") -> "TJet":
        return self + other.scale(-1)

    def __mul__(self, other: "TJet") -> "TJet":
        """Truncated convolution; coefficient order is preserved (left*right)."""
        order = min(self.order, other.order)
        out: list = [None] * min(max(len(self.coeffs) + len(other.coeffs) - 1, 1), order + 1)
        for i, left in enumerate(self.coeffs):
            if i > order or left is None:
                continue
            for j, right in enumerate(other.coeffs):
                k = i + j
                if k > order:
                    break
                if right is None:
                    continue
                term = left * right
                out[k] = term if out[k] is None else out[k] + term
        return TJet(out, order)

    def __pow__(self, exponent: int) -> "TJet":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        out = TJet([_one_like(self.coeffs[0])], self.order)
        for _ in range(exponent):
            out = out * self
        return out

    def scale(self, factor) -> "TJet":
        out = []
        for c in self.coeffs:
            if c is None:
                out.append(None)
            elif isinstance(c, SpherePoly):
                out.append(c.scale(factor))
            else:
                out.append(GaussianRational.coerce(factor) * c)
        return TJet(out, self.order)

    def shift(self, powers: int) -> "TJet":
        """Multiply by t^powers."""
        return TJet([None] * powers + list(self.coeffs), self.order)

    def map(self, fn: Callable) -> "TJet":
        return TJet([None if c is None else fn(c) for c in self.coeffs], self.order)

    def coefficient(self, power: int, zero):
        """Coefficient of t^power, with an explicit zero for missing entries."""
        if power > self.order:
            raise UnsupportedOrderError(f"jet truncated at order {self.order}")
        if power < len(self.coeffs) and self.coeffs[power] is not None:
            return self.coeffs[power]
        return zero

    def poly_coefficient(self, power: int) -> SpherePoly:
        return self.coefficient(power, SpherePoly.zero())

    def eval_at(self, t: GaussianRational | int | Fraction) -> SpherePoly:
        """Evaluate a polynomial-coefficient jet at a rational parameter value."""
        t = GaussianRational.coerce(t)
        total = SpherePoly.zero()
        power = GaussianRational(1)
        for coeff in self.coeffs:
            if coeff is not None:
                total = total + coeff.scale(power)
            power = power * t
        return total

    def __repr__(self):
        return f"TJet({self.coeffs!r}, order={self.order})"


def _one_like(sample):
    if isinstance(sample, SpherePoly) or sample is None:
        return SpherePoly.constant(1)
    from .operators import IDENTITY

    return IDENTITY


def poly_jet(coeffs, order: int) -> TJet:
    """Jet with SpherePoly coefficients, coercing scalars."""
    return TJet([c if (c is None or isinstance(c, SpherePoly)) else SpherePoly.constant(c)
                 for c in coeffs], order)


def torsion_factor(phi: SpherePoly) -> SpherePoly:
    """T(phi) - 4i*phi, whose vanishing on S^3 characterizes zero torsion."""
    return apply_T(phi) - phi.scale(GaussianRational(0, 4))


@dataclass(frozen=True)
class DeformationData:
    """Per-deformation bookkeeping: phi and its torsion factor."""

    phi: SpherePoly
    torsion_factor: SpherePoly

    def f_squared_at(self, t) -> "GaussianRational | tuple[SpherePoly, SpherePoly]":
        """F^2 = 1/(1 - t^2 |phi|^2) at rational t.

        Returns an exact scalar when |phi|^2 is constant (raising when the
        structure degenerates), else the exact (numerator, denominator) pair.
        """
        t = GaussianRational.coerce(t)
        norm = self.phi * self.phi.conj()
        den = SpherePoly.constant(1) - norm.scale(t * t)
        if len(norm) <= 1 and norm.bidegree_if_uniform() in ((0, 0), None):
            scalar = den.coefficient((0, 0, 0, 0))
            if scalar.is_zero():
                raise DegenerateStructureError("1 - t^2 |phi|^2 = 0: degenerate structure")
            return GaussianRational(1) / scalar
        return (SpherePoly.constant(1), den)


def deformation_data(phi: SpherePoly) -> DeformationData:
    return DeformationData(phi, torsion_factor(phi))


def torsion(phi: SpherePoly, t=None):
    """Exact torsion of the structure Z1bar + t*phi*Z1 as a rational pair.

    Returns (numerator, denominator) with torsion = numerator/denominator:

        numerator   = -t * (T(phi) - 4i phi)
        denominator = 1 - t^2 |phi|^2.

    With ``t=None`` both sides are returned as t-polynomials (TJet of order
    2, which is exact here); with a rational ``t`` they are polynomials.
    """
    factor = torsion_factor(phi)
    if t is None:
        num = poly_jet([None, -factor], 2)
        den = poly_jet([SpherePoly.constant(1), None, -(phi * phi.conj())], 2)
        return num, den
    t = GaussianRational.coerce(t)
    return factor.scale(-t), SpherePoly.constant(1) - (phi * phi.conj()).scale(t * t)


def zero_torsion_classify(pmax: int = 8, qmax: int = 8) -> list[tuple[int, int]]:
    """Bidegrees (p, q), p <= pmax, q <= qmax, whose every element deforms torsion-free.

    Checks the torsion numerator of each monomial generator of P_{p,q}
    exactly; the result is always the diagonal p = q + 4.
    """
    from .harmonics import bidegree_monomials, sphere_equal

    zero = SpherePoly.zero()
    out = []
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            if all(sphere_equal(torsion_factor(SpherePoly.monomial(m)), zero)
                   for m in bidegree_monomials(p, q)):
                out.append((p, q))
    return out


def rossi(t) -> dict:
    """Closed forms for the constant-deformation (Rossi) family at rational t.

    For the structure Z1 + t*conj(Z1) (equivalently phi = 1) the Webster
    curvature and torsion coefficient are

        |t| < 1:  R = 2(1+t^2)/(1-t^2),   torsion = 4ti/(1-t^2)
        |t| > 1:  R = 2(1+t^2)/(t^2-1),   torsion = 4ti/(1-t^2)

    (the |t| > 1 branch flips the contact form's sign, flipping R's
    denominator).  |t| = 1 degenerates.
    """
    t = GaussianRational.coerce(t)
    if not t.is_real():
        raise ValueError("the family is parametrized by real rational t")
    tt = t.re
    if abs(tt) == 1:
        raise DegenerateStructureError("|t| = 1 is not a CR structure in this family")
    branch = "|t|<1" if abs(tt) < 1 else "|t|>1"
    denom = (1 - tt * tt) if abs(tt) < 1 else (tt * tt - 1)
    webster = GaussianRational(2 * (1 + tt * tt) / denom)
    torsion_coeff = GaussianRational(0, 4 * tt / (1 - tt * tt))
    return {"webster_R": webster, "torsion_coeff": torsion_coeff, "branch": branch}


def levi_normalizer_jet(phi: SpherePoly, order: int = 2) -> TJet:
    """Jet of F = (1 - t^2 |phi|^2)^(-1/2): sum of binom(2k,k)/4^k |phi|^(2k) t^(2k)."""
    norm = phi * phi.conj()
    coeffs: list[SpherePoly | None] = []
    for j in range(order + 1):
        if j % 2:
            coeffs.append(None)
        else:
            k = j // 2
            coeffs.append((norm ** k).scale(Fraction(comb(2 * k, k), 4 ** k)))
    return TJet(coeffs, order)


class ConnectionJets(NamedTuple):
    """t-jets of the deformed connection-form coefficients.

    The connection correction is  -(1/F) (B_h theta^1 + B_a theta^1bar + B_r theta),
    with components along the holomorphic coframe leg, the antiholomorphic
    leg and the Reeb leg.
    """

    along_holo: TJet
    along_antiholo: TJet
    along_reeb: TJet


def connection_coefficient_jets(phi: SpherePoly, order: int = 2) -> ConnectionJets:
    """Second-order t-expansions of the deformed connection coefficients.

    Substituting phi -> t*phi and the F-jet into the closed coefficient
    formulas for the sphere background:

        B_h = F^2 (-2 F_1 - t F pb_b - t^2 pb F p_1 - 2 t pb F_b)
        B_a = F^2 (2 t^2 |phi|^2 F_b + t F p_1 + t^2 F phi pb_b + 2 t phi F_1)
        B_r = -t^2 pb F^3 (T(phi) - 4i phi)

    where p_1 = Z1 phi, pb = conj(phi), pb_b = Z1bar conj(phi), and F_1, F_b
    are the Z1, Z1bar derivatives of F.  Orders above 2 are not available.
    """
    if order > 2:
        raise UnsupportedOrderError("connection coefficients are expanded to order 2 only")
    fj = levi_normalizer_jet(phi, order)
    f2 = fj * fj
    f3 = f2 * fj
    f_1 = fj.map(apply_Z1)
    f_b = fj.map(apply_Z1bar)
    phibar = phi.conj()
    p_1 = apply_Z1(phi)
    pb_b = apply_Z1bar(phibar)
    norm = phi * phibar

    along_holo = f2 * (
        f_1.scale(-2)
        + fj.map(lambda g: g * pb_b).scale(-1).shift(1)
        + fj.map(lambda g: g * (phibar * p_1)).scale(-1).shift(2)
        + f_b.map(lambda g: phibar * g).scale(-2).shift(1)
    )
    along_antiholo = f2 * (
        f_b.map(lambda g: norm * g).scale(2).shift(2)
        + fj.map(lambda g: g * p_1).shift(1)
        + fj.map(lambda g: g * (phi * pb_b)).shift(2)
        + f_1.map(lambda g: phi * g).scale(2).shift(1)
    )
    along_reeb = f3.map(lambda g: (phibar * torsion_factor(phi)) * g).scale(-1).shift(2)
    return ConnectionJets(along_holo, along_antiholo, along_reeb)


def _op_jet(op: LinOp, order: int) -> TJet:
    return TJet([op], order)


def deformed_frame_jets(phi: SpherePoly, order: int = 2) -> tuple[TJet, TJet]:
    """Operator jets of the normalized frame fields (Z1^t, Z1bar^t)."""
    fj = levi_normalizer_jet(phi, order).map(MulBy)
    z1_t = fj * TJet([Z1, MulBy(phi.conj()) @ Z1BAR], order)
    z1bar_t = fj * TJet([Z1BAR, MulBy(phi) @ Z1], order)
    return z1_t, z1bar_t


def conj_kohn_jet(phi: SpherePoly, order: int = 2) -> TJet:
    """Operator jet of the deformed conjugate Kohn Laplacian.

    Assembled from the frame jets and the connection coefficients:

        -2 Z1bar^t Z1^t - 2 (F_b + B_a + t phi F_1 + t phi B_h) Z1^t.
    """
    if order > 2:
        raise UnsupportedOrderError("deformation expansions stop at order 2")
    z1_t, z1bar_t = deformed_frame_jets(phi, order)
    fj = levi_normalizer_jet(phi, order)
    coeffs = connection_coefficient_jets(phi, order)
    scalar = (
        fj.map(apply_Z1bar)
        + coeffs.along_antiholo
        + fj.map(apply_Z1).map(lambda g: phi * g).shift(1)
        + coeffs.along_holo.map(lambda g: phi * g).shift(1)
    )
    return (z1bar_t * z1_t).scale(-2) + (scalar.map(MulBy) * z1_t).scale(-2)


def torsion_correction_jet(phi: SpherePoly, order: int = 2) -> TJet:
    """Operator jet of -2Q^t, the torsion correction to 4 * Paneitz.

    Q^t f = 2i (A Z1 Z1 f + (Z1 A) Z1 f - A c Z1 f) in the deformed frame,
    with A the deformed torsion coefficient and c the conjugate connection
    coefficient; expanded to second order it reads

        -2Q^t = 4t F^4 (E Z1 Z1 + E_1 Z1)
              + 4t^2 F^4 (E (-pb Delta_b + pb_1 Z1bar) + pb E_b Z1 + pb E_1 Z1bar)
              + 4t^2 F^6 E pb_b Z1

    where E = 4 phi + i T(phi), pb = conj(phi), subscripts 1 and b denote Z1
    and Z1bar derivatives.
    """
    if order > 2:
        raise UnsupportedOrderError("deformation expansions stop at order 2")
    fj = levi_normalizer_jet(phi, order)
    f4 = (fj * fj) * (fj * fj)
    f6 = f4 * (fj * fj)
    phibar = phi.conj()
    e = phi.scale(4) + apply_T(phi).scale(I)
    e_1 = apply_Z1(e)
    e_b = apply_Z1bar(e)
    pb_1 = apply_Z1(phibar)
    pb_b = apply_Z1bar(phibar)

    first = _op_jet(MulBy(e) @ Z1 @ Z1 + MulBy(e_1) @ Z1, order)
    part1 = (f4.map(MulBy) * first).scale(4).shift(1)
    second = _op_jet(
        MulBy((e * phibar).scale(-1)) @ SUBLAP
        + MulBy(e * pb_1) @ Z1BAR
        + MulBy(phibar * e_b) @ Z1
        + MulBy(phibar * e_1) @ Z1BAR,
        order,
    )
    part2 = (f4.map(MulBy) * second).scale(4).shift(2)
    part3 = (f6.map(MulBy) * _op_jet(MulBy(e * pb_b) @ Z1, order)).scale(4).shift(2)
    return part1 + part2 + part3


def paneitz_family_jet(phi: SpherePoly, order: int = 2) -> TJet:
    """Operator jet of 4 * P^t, the deformed Paneitz operator (times four).

    4 P^t = box^t conj_box^t - 2 Q^t; the t^1 coefficient is four times the
    first variation and the t^2 coefficient is twice the second variation.
    """
    conj_box = conj_kohn_jet(phi, order)
    box = conj_box.map(lambda op: op.conj_op())
    return box * conj_box + torsion_correction_jet(phi, order)
