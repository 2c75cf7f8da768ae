"""Bigraded spherical harmonics on S^3 and the sphere-restriction normal form.

``H_{p,q}`` is the space of bihomogeneous polynomials of bidegree (p, q)
annihilated by the flat Laplacian d^2/dz1 dconj(z1) + d^2/dz2 dconj(z2); its
dimension is p+q+1.  For bihomogeneous polynomials this kernel condition is
the same as being a spherical-harmonic eigenfunction of degree p+q.

Every polynomial splits uniquely as

    f = h_0 + r^2 h_1 + r^4 h_2 + ...,    h_k harmonic, r^2 = |z1|^2+|z2|^2,

so on the sphere (r^2 = 1) it equals the sum of its harmonic components.
That sum, bucketed by bidegree, is the *canonical form* computed by
:func:`canonicalize`; two polynomials restrict to the same function on S^3
exactly when their canonical forms coincide (:func:`sphere_equal`).

The decomposition is computed recursively: if f has bidegree (p, q) and
Delta f = sum_j r^(2j) u_j, then the higher components of f are
h_{j+1} = u_j / ((j+1)(p+q-j))  (from Delta(r^(2k) h) = k(p+q-k+1) r^(2k-2) h
for h of bidegree (p-k, q-k)), and h_0 is whatever remains.  The recursion
terminates after min(p, q) steps.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .scalars import GaussianRational
from .spherepoly import Monomial, SpherePoly, radius_sq


def flat_laplacian(x: SpherePoly) -> SpherePoly:
    """d^2 x / dz1 dconj(z1) + d^2 x / dz2 dconj(z2)."""
    return x.d_dz1().d_dz1c() + x.d_dz2().d_dz2c()


def bidegree_monomials(p: int, q: int) -> list[Monomial]:
    """Monomial basis of P_{p,q} in lexicographic exponent order."""
    monos = [Monomial(a, p - a, c, q - c) for a in range(p + 1) for c in range(q + 1)]
    monos.sort()
    return monos


@dataclass(frozen=True)
class HarmonicBasis:
    p: int
    q: int
    elements: tuple[SpherePoly, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)


_basis_cache: dict[tuple[int, int, bool], HarmonicBasis] = {}
_basis_lock = threading.Lock()


def basis(p: int, q: int, orthogonal: bool = False) -> HarmonicBasis:
    """Basis of H_{p,q} over the Gaussian rationals; dimension p+q+1.

    The default basis is the reduced-row-echelon kernel basis of the flat
    Laplacian P_{p,q} -> P_{p-1,q-1} under the lexicographic monomial order,
    which makes the output deterministic.  With ``orthogonal=True`` the
    basis is additionally Gram-Schmidt orthogonalized (exactly, without
    normalizing lengths).
    """
    if p < 0 or q < 0:
        raise ValueError("bidegrees must be nonnegative")
    key = (p, q, orthogonal)
    with _basis_lock:
        cached = _basis_cache.get(key)
    if cached is not None:
        return cached
    elements = _kernel_basis(p, q)
    if orthogonal:
        elements = _gram_schmidt(elements)
    result = HarmonicBasis(p, q, tuple(elements))
    if len(result.elements) != p + q + 1:
        raise ArithmeticError(f"H_({p},{q}) kernel rank {len(result.elements)} != {p + q + 1}")
    with _basis_lock:
        _basis_cache.setdefault(key, result)
    return result


def _kernel_basis(p: int, q: int) -> list[SpherePoly]:
    source = bidegree_monomials(p, q)
    if p == 0 or q == 0:
        # The Laplacian target space is empty: all of P_{p,q} is harmonic.
        return [SpherePoly.monomial(m) for m in source]
    target = bidegree_monomials(p - 1, q - 1)
    target_index = {m: i for i, m in enumerate(target)}
    # Column j holds Delta(source[j]) expanded over the target monomials.
    rows = [[Fraction(0)] * len(source) for _ in target]
    for j, mono in enumerate(source):
        if mono.a and mono.c:
            i = target_index[Monomial(mono.a - 1, mono.b, mono.c - 1, mono.d)]
            rows[i][j] += mono.a * mono.c
        if mono.b and mono.d:
            i = target_index[Monomial(mono.a, mono.b - 1, mono.c, mono.d - 1)]
            rows[i][j] += mono.b * mono.d
    pivots = _rref(rows)
    pivot_cols = set(pivots)
    out = []
    for j in range(len(source)):
        if j in pivot_cols:
            continue
        coeffs = {source[j]: Fraction(1)}
        for row_idx, col in enumerate(pivots):
            if rows[row_idx][j]:
                coeffs[source[col]] = -rows[row_idx][j]
        out.append(SpherePoly({m: GaussianRational(v) for m, v in coeffs.items()}))
    return out


def _rref(rows: list[list[Fraction]]) -> list[int]:
    """In-place reduced row echelon form; returns pivot column per pivot row."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    del rows[r:]
    return pivots


def _gram_schmidt(elements: list[SpherePoly]) -> list[SpherePoly]:
    from .integration import inner

    out: list[SpherePoly] = []
    for f in elements:
        g = f
        for h in out:
            g = g - h.scale(inner(g, h) / inner(h, h))
        out.append(g)
    return out


def solid_decomposition(f: SpherePoly, p: int, q: int) -> list[tuple[int, SpherePoly]]:
    """Write bihomogeneous f of bidegree (p,q) as sum of r^(2k) h_k exactly.

    Returns [(k, h_k)] with h_k in H_{p-k,q-k}; the polynomial identity
    f = sum r^(2k) h_k holds, not just the sphere restriction.
    """
    if p == 0 or q == 0:
        return [(0, f)] if not f.is_zero() else []
    lap = flat_laplacian(f)
    if lap.is_zero():
        return [(0, f)] if not f.is_zero() else []
    higher: list[tuple[int, SpherePoly]] = []
    remainder = f
    r2_powers: dict[int, SpherePoly] = {}
    for j, u in solid_decomposition(lap, p - 1, q - 1):
        k = j + 1
        h = u.scale(Fraction(1, k * (p + q - j)))
        higher.append((k, h))
        r2k = r2_powers.get(k)
        if r2k is None:
            r2k = radius_sq ** k
            r2_powers[k] = r2k
        remainder = remainder - r2k * h
    out = higher
    if not remainder.is_zero():
        out = [(0, remainder)] + out
    return out


def canonicalize(x: SpherePoly) -> dict[tuple[int, int], SpherePoly]:
    """Harmonic components of x: x agrees on S^3 with the sum of the values.

    The result maps (p, q) to a nonzero element of H_{p,q}; an empty map
    means x vanishes on the sphere.  This is the normal form behind
    :func:`sphere_equal`, and applying it to any single component returns
    that component unchanged.
    """
    out: dict[tuple[int, int], SpherePoly] = {}
    for (p, q), piece in x.bigraded_components().items():
        for k, h in solid_decomposition(piece, p, q):
            key = (p - k, q - k)
            acc = out.get(key)
            total = h if acc is None else acc + h
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
    return out


def canonical_form(x: SpherePoly) -> SpherePoly:
    """The sum of the harmonic components: the unique harmonic representative."""
    total = SpherePoly.zero()
    for piece in canonicalize(x).values():
        total = total + piece
    return total


def sphere_equal(x: SpherePoly, y: SpherePoly) -> bool:
    """True when x and y agree as functions on the unit sphere."""
    if x.terms == y.terms:
        return True
    return not canonicalize(x - y)


@dataclass(frozen=True)
class BEVerdict:
    """Result of the Burns-Epstein sign condition on a deformation function."""

    satisfies_be: bool
    violating_components: tuple[tuple[int, int], ...]
    components: dict[tuple[int, int], SpherePoly]


def be_check(phi: SpherePoly) -> BEVerdict:
    """Burns-Epstein condition: every harmonic component sits in p >= q + 4.

    Deformations of the standard sphere structure along such phi stay
    embeddable; the verdict lists the offending components otherwise.
    """
    components = canonicalize(phi)
    violating = tuple(sorted(key for key in components if key[0] < key[1] + 4))
    return BEVerdict(not violating, violating, components)
