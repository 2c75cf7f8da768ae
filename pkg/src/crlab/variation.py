"""First and second variations of the Paneitz operator at the round structure.

Along the deformation line phi_t = t*phi the quadratic form
I_t(f) = <P^t f, f> of the deformed Paneitz operator is studied on

    H  =  direct sum over p >= 1 of H_{p,0} and H_{0,p},

the CR-pluriharmonic directions killed by the undeformed operator.  The
derivative operators at t = 0 have closed forms built from two objects:

    drift              D = phi Z1 Z1 + pb Z1bar Z1bar + phi_1 Z1 + pb_b Z1bar
    torsion potential  E = 4 phi + i T(phi)      (i times the torsion factor)

with pb = conj(phi).  Four times the first variation is

    -2 D conj_kohn - 2 kohn D + 4 (E Z1 Z1 + E_1 Z1),

whose quadratic form vanishes identically on H.  Four times the second
variation is

    16|phi|^2 paneitz + 2|phi|^2 (kohn^2 + conj_kohn^2) + 8 D^2
    - 8 E pb sublap + 8 grad_op(E pb) + 4 kohn(|phi|^2) sublap
    - 8 grad_op(|phi|^2) sublap - 4 grad_op(|phi|^2) conj_kohn
    - 4 kohn grad_op(|phi|^2),

where a multiplication written before an operator composes with it and the
standalone grad_op terms act as first-order operators.  Splitting off the
manifestly nonnegative part 8 D^2 leaves a remainder R with the exact
pairing  <R f, g> = 8 integral (p|phi|^2 - E pb) f_1 conj(g_1)  on
f in H_{p,0} against CR g (and zero from H_{0,p}), which is what ties the
sign of the second variation to the Burns-Epstein condition.

Everything here is verified two ways: these closed forms, and the
independent truncated-expansion route in :mod:`crlab.deformation`
(:func:`variations_from_jets`).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .deformation import paneitz_family_jet
from .harmonics import basis, canonicalize
from .integration import inner
from .operators import (CONJ_KOHN, KOHN, LinOp, MulBy, PANEITZ, SUBLAP, Z1,
                        Z1BAR, apply_T, apply_Z1, apply_Z1bar, grad_op, kohn)
from .scalars import GaussianRational, I
from .spherepoly import SpherePoly


class PreconditionError(ValueError):
    """An argument lies outside the stated domain of the operation."""


class IdentityCheckError(ArithmeticError):
    """An identity that must hold exactly failed; indicates an internal bug."""


POSITIVE_DEFINITE = "positive-definite"
POSITIVE_SEMIDEFINITE = "positive-semidefinite"
NEGATIVE_DEFINITE = "negative-definite"
NEGATIVE_SEMIDEFINITE = "negative-semidefinite"
INDEFINITE = "indefinite"
ZERO_FORM = "zero"


def torsion_potential(phi: SpherePoly) -> SpherePoly:
    """E = 4*phi + i*T(phi); constant multiple (4 + q - p) * phi on P_{p,q}."""
    return phi.scale(4) + apply_T(phi).scale(I)


def drift_operator(phi: SpherePoly) -> LinOp:
    """D = phi Z1 Z1 + conj(phi) Z1bar Z1bar + (Z1 phi) Z1 + (Z1bar conj(phi)) Z1bar."""
    phibar = phi.conj()
    return (
        MulBy(phi) @ Z1 @ Z1
        + MulBy(phibar) @ Z1BAR @ Z1BAR
        + MulBy(apply_Z1(phi)) @ Z1
        + MulBy(apply_Z1bar(phibar)) @ Z1BAR
    )


def first_variation(phi: SpherePoly) -> LinOp:
    """d/dt of the deformed Paneitz operator at t = 0."""
    d_op = drift_operator(phi)
    e = torsion_potential(phi)
    four_times = (
        (-2) * (d_op @ CONJ_KOHN)
        + (-2) * (KOHN @ d_op)
        + 4 * (MulBy(e) @ Z1 @ Z1 + MulBy(apply_Z1(e)) @ Z1)
    )
    return Fraction(1, 4) * four_times


def second_variation(phi: SpherePoly) -> LinOp:
    """d^2/dt^2 of the deformed Paneitz operator at t = 0."""
    d_op = drift_operator(phi)
    e = torsion_potential(phi)
    phibar = phi.conj()
    norm = phi * phibar
    e_pb = e * phibar
    four_times = (
        16 * (MulBy(norm) @ PANEITZ)
        + 2 * (MulBy(norm) @ (KOHN @ KOHN + CONJ_KOHN @ CONJ_KOHN))
        + 8 * (d_op @ d_op)
        + (-8) * (MulBy(e_pb) @ SUBLAP)
        + 8 * grad_op(e_pb)
        + 4 * (MulBy(kohn(norm)) @ SUBLAP)
        + (-8) * (grad_op(norm) @ SUBLAP)
        + (-4) * (grad_op(norm) @ CONJ_KOHN)
        + (-4) * (KOHN @ grad_op(norm))
    )
    return Fraction(1, 4) * four_times


@dataclass(frozen=True)
class VariationOperators:
    """The variation package for one deformation direction phi.

    ``remainder`` is 4*paneitz_ddot - 8*drift^2, the part of the second
    variation not covered by the nonnegative square of the drift.
    """

    drift: LinOp
    torsion_potential: SpherePoly
    paneitz_dot: LinOp
    paneitz_ddot: LinOp
    remainder: LinOp


def variation_operators(phi: SpherePoly) -> VariationOperators:
    d_op = drift_operator(phi)
    ddot = second_variation(phi)
    return VariationOperators(
        drift=d_op,
        torsion_potential=torsion_potential(phi),
        paneitz_dot=first_variation(phi),
        paneitz_ddot=ddot,
        remainder=4 * ddot + (-8) * (d_op @ d_op),
    )


def variations_from_jets(phi: SpherePoly) -> tuple[LinOp, LinOp]:
    """(first, second) variation operators reconstructed from the t-expansion.

    Independent of the closed forms above: the jet of 4*P^t is assembled in
    :mod:`crlab.deformation` from the deformed frame and connection
    coefficients; its t^1 coefficient is 4*paneitz_dot and its t^2
    coefficient is 2*paneitz_ddot.
    """
    jet = paneitz_family_jet(phi, 2)
    from .operators import ZERO_OP

    return (
        Fraction(1, 4) * jet.coefficient(1, ZERO_OP),
        Fraction(1, 2) * jet.coefficient(2, ZERO_OP),
    )


# -- quadratic forms ---------------------------------------------------------


@dataclass(frozen=True)
class HermitianForm:
    """Exact matrix <A f_i, f_j> of a sesquilinear form over a fixed basis."""

    labels: tuple[str, ...]
    elements: tuple[SpherePoly, ...]
    entries: tuple[tuple[GaussianRational, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def diagonal(self) -> tuple[GaussianRational, ...]:
        return tuple(self.entries[i][i] for i in range(self.dimension))

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def is_hermitian(self) -> bool:
        n = self.dimension
        return all(self.entries[j][i] == self.entries[i][j].conj()
                   for i in range(n) for j in range(i, n))


@dataclass(frozen=True)
class BasisVector:
    """One basis direction of the truncated pluriharmonic space H."""

    label: str
    element: SpherePoly
    degree: int
    side: str  # "holomorphic" (H_{k,0}) or "antiholomorphic" (H_{0,k})


def pluriharmonic_basis(pmax: int) -> tuple[BasisVector, ...]:
    """Labeled basis of the truncation of H: H_{k,0} and H_{0,k} for 1 <= k <= pmax."""
    out: list[BasisVector] = []
    for k in range(1, pmax + 1):
        for f in basis(k, 0).elements:
            out.append(BasisVector(f.to_source(), f, k, "holomorphic"))
        for f in basis(0, k).elements:
            out.append(BasisVector(f.to_source(), f, k, "antiholomorphic"))
    return tuple(out)


def _thread_count() -> int:
    raw = os.environ.get("CR_LAB_THREADS", "1")
    try:
        count = int(raw)
    except ValueError as exc:
        raise ValueError(f"CR_LAB_THREADS must be an integer >= 1, got {raw!r}") from exc
    if count < 1:
        raise ValueError(f"CR_LAB_THREADS must be an integer >= 1, got {raw!r}")
    return count


def assemble_form(op: LinOp, pmax: int, expect_hermitian: bool = False) -> HermitianForm:
    """Matrix of <op f_i, f_j> over the pluriharmonic basis up to degree pmax.

    Results are deterministic regardless of CR_LAB_THREADS (rows are
    computed independently and collected by index).  ``expect_hermitian``
    turns a failed conjugate-symmetry check into an error, which is how the
    "the variation operators are real" claims are asserted.
    """
    if pmax < 1:
        raise PreconditionError("pmax must be >= 1")
    vectors = pluriharmonic_basis(pmax)
    elements = tuple(v.element for v in vectors)

    def row(i: int) -> tuple[GaussianRational, ...]:
        image = op(elements[i])
        return tuple(inner(image, f) for f in elements)

    threads = _thread_count()
    indices = range(len(elements))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            entries = tuple(pool.map(row, indices))
    else:
        entries = tuple(row(i) for i in indices)
    form = HermitianForm(tuple(v.label for v in vectors), elements, entries)
    if expect_hermitian and not form.is_hermitian():
        raise IdentityCheckError("assembled form is not Hermitian")
    return form


def classify(form: HermitianForm) -> str:
    """Exact definiteness class of a Hermitian form.

    Recursive pivoting with rational pivots: each nonzero diagonal entry
    contributes its sign and is eliminated by a Schur complement; a state
    with zero diagonal but a nonzero off-diagonal entry is indefinite
    (its 2x2 principal block has eigenvalues of both signs); remaining
    zero rows only reduce the rank.  Sylvester's law of inertia makes the
    outcome basis-independent.
    """
    if not form.is_hermitian():
        raise PreconditionError("classification requires a Hermitian matrix")
    matrix = [list(row) for row in form.entries]
    active = list(range(form.dimension))
    pos = neg = 0
    rank_deficit = 0
    while active:
        pivot = next((i for i in active if not matrix[i][i].is_zero()), None)
        if pivot is None:
            if all(matrix[i][j].is_zero() for i in active for j in active):
                rank_deficit += len(active)
                break
            return INDEFINITE
        d = matrix[pivot][pivot]
        if d.real_sign() > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        for i in active:
            factor = matrix[i][pivot] / d
            if factor.is_zero():
                continue
            for j in active:
                matrix[i][j] = matrix[i][j] - factor * matrix[pivot][j]
    if pos and neg:
        return INDEFINITE
    if pos:
        return POSITIVE_DEFINITE if not rank_deficit else POSITIVE_SEMIDEFINITE
    if neg:
        return NEGATIVE_DEFINITE if not rank_deficit else NEGATIVE_SEMIDEFINITE
    return ZERO_FORM


# -- exact identities around the second variation ------------------------------


def _canonical_split(f: SpherePoly) -> dict[tuple[int, int], SpherePoly]:
    return canonicalize(f)


def drift_square_form(phi: SpherePoly, f: SpherePoly) -> GaussianRational:
    """<D^2 f, f> for f in the kernel of the Paneitz operator.

    Splitting f = u + v into CR and anti-CR parts, the value equals the
    plain squared norm of D f = (phi u_11 + phi_1 u_1) + (pb v_bb + pb_b v_b),
    hence is real and nonnegative; both routes are computed and compared.
    """
    parts = _canonical_split(f)
    if any(p > 0 and q > 0 for (p, q) in parts):
        raise PreconditionError("f must lie in the kernel of the Paneitz operator")
    rep = SpherePoly.zero()
    for piece in parts.values():
        rep = rep + piece
    d_op = drift_operator(phi)
    image = d_op(rep)
    value = inner(d_op(image), rep)
    direct = inner(image, image)
    if value != direct:
        raise IdentityCheckError("<D^2 f, f> disagrees with |D f|^2 on Ker paneitz")
    if not value.is_real() or value.real_sign() < 0:
        raise IdentityCheckError("<D^2 f, f> must be real and nonnegative")
    return value


def remainder_form(phi: SpherePoly, f: SpherePoly, g: SpherePoly) -> GaussianRational:
    """<R f, g> for f in a single H_{p,0} or H_{0,p} and CR g.

    Evaluates <(4*paneitz_ddot - 8*drift^2) f, g> directly and checks it
    against the closed form: zero when f is anti-CR, and

        8 * integral (p |phi|^2 - E conj(phi)) (Z1 f) conj(Z1 g)

    when f is in H_{p,0}.
    """
    g_parts = _canonical_split(g)
    if any(q != 0 for (_, q) in g_parts):
        raise PreconditionError("g must be a CR function (components H_{k,0} only)")
    f_parts = _canonical_split(f)
    if len(f_parts) > 1 or any(p > 0 and q > 0 for (p, q) in f_parts):
        raise PreconditionError("f must lie in a single H_{p,0} or H_{0,p}")
    g_rep = SpherePoly.zero()
    for piece in g_parts.values():
        g_rep = g_rep + piece
    if not f_parts:
        return GaussianRational(0)
    (p, q), f_rep = next(iter(f_parts.items()))
    d_op = drift_operator(phi)
    ddot = second_variation(phi)
    value = inner(ddot(f_rep).scale(4) - d_op(d_op(f_rep)).scale(8), g_rep)
    if q > 0:
        expected = GaussianRational(0)
    else:
        weight = (phi * phi.conj()).scale(p) - torsion_potential(phi) * phi.conj()
        expected = inner(weight * apply_Z1(f_rep), apply_Z1(g_rep)) * 8
    if value != expected:
        raise IdentityCheckError("remainder pairing disagrees with its closed form")
    return value


def weighted_gradient_pairing(phi: SpherePoly, k: int, l: int, side: str,
                              f_k: SpherePoly, f_l: SpherePoly) -> GaussianRational:
    """integral of (k|phi|^2 - E conj(phi)) d(f_k) conj(d(f_l)) for uniform phi.

    ``side`` selects d = Z1 on "holomorphic" (elements of H_{k,0}) or
    d = Z1bar on "antiholomorphic" (elements of H_{0,k}).  For phi of
    uniform bidegree (p1, q1) the value vanishes when k != l and equals

        (k + p1 - q1 - 4) * integral |phi|^2 |d f_k|^2

    when k = l; both laws are checked before returning.
    """
    bidegree = phi.bidegree_if_uniform()
    if bidegree is None:
        raise PreconditionError("phi must be bihomogeneous (uniform bidegree)")
    if side == "holomorphic":
        derivative = apply_Z1
    elif side == "antiholomorphic":
        derivative = apply_Z1bar
    else:
        raise PreconditionError(f"side must be holomorphic|antiholomorphic, got {side!r}")
    p1, q1 = bidegree
    norm = phi * phi.conj()
    weight = norm.scale(k) - torsion_potential(phi) * phi.conj()
    df_k = derivative(f_k)
    df_l = derivative(f_l)
    value = inner(weight * df_k, df_l)
    if k != l:
        if not value.is_zero():
            raise IdentityCheckError("cross-degree weighted pairing must vanish")
    else:
        expected = inner(norm * df_k, df_l) * (k + p1 - q1 - 4)
        if value != expected:
            raise IdentityCheckError("diagonal weighted pairing disagrees with closed form")
    return value


@dataclass(frozen=True)
class SecondVariationSplit:
    """Exact decomposition <paneitz_ddot f, f> = lower_bound + drift_part."""

    value: GaussianRational        # <paneitz_ddot f, f>
    lower_bound: GaussianRational  # the weighted-gradient double sum
    drift_part: GaussianRational   # 2 <D^2 f, f>, always >= 0


def second_variation_decomposition(phi: SpherePoly, f: SpherePoly) -> SecondVariationSplit:
    """Split the second variation's quadratic form on f in H.

    With f = sum f^k + sum g^k (components in H_{k,0} and H_{0,k}) and
    w_k = k|phi|^2 - E conj(phi),

        <paneitz_ddot f, f> = 2 sum_{k,l} integral w_k (Z1 f^k) conj(Z1 f^l)
                            + 2 sum_{k,l} integral conj(w_k) (Z1bar g^k) conj(Z1bar g^l)
                            + 2 <D^2 f, f>,

    verified exactly; the drift part is nonnegative, so the double sum is an
    exact lower bound for the quadratic form.  The antiholomorphic side
    carries the conjugate weight (for bihomogeneous phi the weight is real,
    so both sides then share w_k).
    """
    parts = _canonical_split(f)
    if any((p > 0 and q > 0) or (p == 0 and q == 0) for (p, q) in parts):
        raise PreconditionError("f must lie in H: components H_{k,0}, H_{0,k}, k >= 1")
    holo = {p: piece for (p, q), piece in parts.items() if q == 0}
    anti = {q: piece for (p, q), piece in parts.items() if p == 0}
    rep = SpherePoly.zero()
    for piece in parts.values():
        rep = rep + piece

    norm = phi * phi.conj()
    e_pb = torsion_potential(phi) * phi.conj()
    total = GaussianRational(0)
    for k, fk in holo.items():
        weight = norm.scale(k) - e_pb
        dfk = apply_Z1(fk)
        for fl in holo.values():
            total = total + inner(weight * dfk, apply_Z1(fl))
    for k, gk in anti.items():
        weight = (norm.scale(k) - e_pb).conj()
        dgk = apply_Z1bar(gk)
        for gl in anti.values():
            total = total + inner(weight * dgk, apply_Z1bar(gl))
    lower = total * 2

    d_op = drift_operator(phi)
    drift_part = inner(d_op(d_op(rep)), rep) * 2
    value = inner(second_variation(phi)(rep), rep)
    if value != lower + drift_part:
        raise IdentityCheckError("second-variation decomposition failed to balance")
    if not drift_part.is_real() or drift_part.real_sign() < 0:
        raise IdentityCheckError("drift part of the second variation must be >= 0")
    return SecondVariationSplit(value=value, lower_bound=lower, drift_part=drift_part)
