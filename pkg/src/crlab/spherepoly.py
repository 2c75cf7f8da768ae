"""Polynomial functions on the unit 3-sphere in C^2.

A :class:`SpherePoly` is a finite linear combination of monomials
``z1^a * z2^b * conj(z1)^c * conj(z2)^d`` with Gaussian-rational
coefficients, stored sparsely as ``{Monomial: GaussianRational}`` with no
zero coefficients.  Restricted to ``|z1|^2 + |z2|^2 = 1`` these span the
polynomial functions on S^3 (a dense subalgebra of the smooth functions).

Gradings used throughout:

* bidegree ``(p, q) = (a + b, c + d)`` -- holomorphic/antiholomorphic degree;
* circle grade ``m = p - q`` -- the Fourier mode along the Hopf fiber, on
  which the Reeb rotation acts by ``e^{i m psi}``.

Two distinct polynomials can agree as functions on the sphere (they differ
by a multiple of ``z1*conj(z1) + z2*conj(z2) - 1``); that equivalence is
decided by :func:`crlab.harmonics.sphere_equal`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, NamedTuple

from .scalars import GaussianRational, ScalarLike


class Monomial(NamedTuple):
    """Exponents of z1, z2, conj(z1), conj(z2)."""

    a: int
    b: int
    c: int
    d: int

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.a + self.b, self.c + self.d)

    @property
    def circle_grade(self) -> int:
        return (self.a + self.b) - (self.c + self.d)

    def conj(self) -> "Monomial":
        return Monomial(self.c, self.d, self.a, self.b)

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.a + other.a, self.b + other.b,
                        self.c + other.c, self.d + other.d)


_VAR_MONOS = {
    "z1": Monomial(1, 0, 0, 0),
    "z2": Monomial(0, 1, 0, 0),
    "z1c": Monomial(0, 0, 1, 0),
    "z2c": Monomial(0, 0, 0, 1),
}


class SpherePoly:
    """Immutable sparse polynomial in z1, z2 and their conjugates."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, ScalarLike] | None = None):
        clean: dict[Monomial, GaussianRational] = {}
        if terms:
            for mono, coeff in terms.items():
                val = GaussianRational.coerce(coeff)
                if not val.is_zero():
                    clean[Monomial(*mono)] = val
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "SpherePoly":
        return cls()

    @classmethod
    def constant(cls, value: ScalarLike) -> "SpherePoly":
        return cls({Monomial(0, 0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> "SpherePoly":
        return cls({_VAR_MONOS[name]: 1})

    @classmethod
    def monomial(cls, mono: Monomial | tuple[int, int, int, int],
                 coeff: ScalarLike = 1) -> "SpherePoly":
        return cls({Monomial(*mono): coeff})

    # -- term access ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, GaussianRational]:
        """The underlying term map.  Treat as read-only."""
        return self._terms

    def sorted_terms(self) -> list[tuple[Monomial, GaussianRational]]:
        """Terms in lexicographic exponent order (the canonical iteration order)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def coefficient(self, mono: Monomial | tuple[int, int, int, int]) -> GaussianRational:
        return self._terms.get(Monomial(*mono), GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations -----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "SpherePoly":
        if isinstance(value, SpherePoly):
            return value
        return SpherePoly.constant(GaussianRational.coerce(value))

    def __add__(self, other):
        try:
            o = SpherePoly._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in o._terms.items():
            acc = out.get(mono)
            val = coeff if acc is None else acc + coeff
            if val.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = val
        result = SpherePoly.__new__(SpherePoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = SpherePoly._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = SpherePoly._coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        result = SpherePoly.__new__(SpherePoly)
        result._terms = {mono: -coeff for mono, coeff in self._terms.items()}
        return result

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        if not isinstance(other, SpherePoly):
            return NotImplemented
        out: dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = Monomial(m1.a + m2.a, m1.b + m2.b, m1.c + m2.c, m1.d + m2.d)
                val = c1 * c2
                acc = out.get(mono)
                if acc is not None:
                    val = acc + val
                if val.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = val
        result = SpherePoly.__new__(SpherePoly)
        result._terms = out
        return result

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def scale(self, value: ScalarLike) -> "SpherePoly":
        factor = GaussianRational.coerce(value)
        if factor.is_zero():
            return SpherePoly.zero()
        result = SpherePoly.__new__(SpherePoly)
        result._terms = {mono: coeff * factor for mono, coeff in self._terms.items()}
        return result

    def __pow__(self, exponent: int) -> "SpherePoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = SpherePoly.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def conj(self) -> "SpherePoly":
        result = SpherePoly.__new__(SpherePoly)
        result._terms = {mono.conj(): coeff.conj() for mono, coeff in self._terms.items()}
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = SpherePoly._coerce(other)
        if not isinstance(other, SpherePoly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # mutable dict inside; identity-free value type without hashing

    # -- gradings ------------------------------------------------------------

    def bigraded_components(self) -> dict[tuple[int, int], "SpherePoly"]:
        """Split into pieces of uniform bidegree (p, q).  Pieces sum to self."""
        buckets: dict[tuple[int, int], dict[Monomial, GaussianRational]] = {}
        for mono, coeff in self._terms.items():
            buckets.setdefault(mono.bidegree, {})[mono] = coeff
        out = {}
        for key, terms in buckets.items():
            piece = SpherePoly.__new__(SpherePoly)
            piece._terms = terms
            out[key] = piece
        return out

    def circle_components(self) -> dict[int, "SpherePoly"]:
        """Split into pieces of uniform circle grade m = p - q."""
        buckets: dict[int, dict[Monomial, GaussianRational]] = {}
        for mono, coeff in self._terms.items():
            buckets.setdefault(mono.circle_grade, {})[mono] = coeff
        out = {}
        for key, terms in buckets.items():
            piece = SpherePoly.__new__(SpherePoly)
            piece._terms = terms
            out[key] = piece
        return out

    def bidegree_if_uniform(self) -> tuple[int, int] | None:
        """The bidegree if every term shares one, else None."""
        degrees = {mono.bidegree for mono in self._terms}
        if len(degrees) == 1:
            return next(iter(degrees))
        return None

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(m.a + m.b + m.c + m.d for m in self._terms)

    # -- calculus ------------------------------------------------------------

    def _partial(self, slot: int) -> "SpherePoly":
        out: dict[Monomial, GaussianRational] = {}
        for mono, coeff in self._terms.items():
            exp = mono[slot]
            if exp == 0:
                continue
            lowered = list(mono)
            lowered[slot] = exp - 1
            key = Monomial(*lowered)
            val = coeff * exp
            acc = out.get(key)
            if acc is not None:
                val = acc + val
            if val.is_zero():
                out.pop(key, None)
            else:
                out[key] = val
        result = SpherePoly.__new__(SpherePoly)
        result._terms = out
        return result

    def d_dz1(self) -> "SpherePoly":
        return self._partial(0)

    def d_dz2(self) -> "SpherePoly":
        return self._partial(1)

    def d_dz1c(self) -> "SpherePoly":
        return self._partial(2)

    def d_dz2c(self) -> "SpherePoly":
        return self._partial(3)

    def eval_at(self, z1_value: GaussianRational, z2_value: GaussianRational) -> GaussianRational:
        """Exact evaluation at a point of C^2 with Gaussian-rational coordinates."""
        z1c_value = z1_value.conj()
        z2c_value = z2_value.conj()
        total = GaussianRational(0)
        for mono, coeff in self._terms.items():
            total = total + coeff * (z1_value ** mono.a) * (z2_value ** mono.b) \
                * (z1c_value ** mono.c) * (z2c_value ** mono.d)
        return total

    # -- sphere-level equality -------------------------------------------------

    def sphere_equal(self, other: "SpherePoly | ScalarLike") -> bool:
        """True when self and other agree as functions on S^3."""
        from . import harmonics  # local import; harmonics builds on this module

        return harmonics.sphere_equal(self, SpherePoly._coerce(other))

    # -- formatting -------------------------------------------------------------

    def to_source(self, conj_style: str = "suffix") -> str:
        """Render in the expression grammar accepted by :mod:`crlab.parsing`.

        ``conj_style`` is ``"suffix"`` (z1c) or ``"call"`` (conj(z1)).  The
        output reparses to a structurally identical polynomial.
        """
        if not self._terms:
            return "0"
        if conj_style not in ("suffix", "call"):
            raise ValueError(f"unknown conj_style {conj_style!r}")
        pieces: list[tuple[int, str]] = []  # (sign, unsigned text)
        for mono, coeff in self.sorted_terms():
            factors = []
            names = (("z1", mono.a), ("z2", mono.b))
            cnames = (("z1c", mono.c, "z1"), ("z2c", mono.d, "z2"))
            for name, exp in names:
                if exp:
                    factors.append(name if exp == 1 else f"{name}^{exp}")
            for name, exp, base in cnames:
                if exp:
                    text = name if conj_style == "suffix" else f"conj({base})"
                    factors.append(text if exp == 1 else f"{text}^{exp}")
            sign, coeff_text = _coefficient_text(coeff, bool(factors))
            body = "*".join(([coeff_text] if coeff_text else []) + factors)
            pieces.append((sign, body))
        sign, body = pieces[0]
        out = ("-" if sign < 0 else "") + body
        for sign, body in pieces[1:]:
            out += (" - " if sign < 0 else " + ") + body
        return out

    def __str__(self) -> str:
        return self.to_source()

    def __repr__(self) -> str:
        return f"SpherePoly({self.to_source()!r})"


def _rat_text(value: Fraction) -> str:
    return str(value)


def _coefficient_text(coeff: GaussianRational, has_monomial: bool) -> tuple[int, str]:
    """Sign and unsigned source text for a coefficient; '' drops an implicit 1."""
    if coeff.im == 0:
        sign = 1 if coeff.re > 0 else -1
        mag = abs(coeff.re)
        if mag == 1 and has_monomial:
            return sign, ""
        return sign, _rat_text(mag)
    if coeff.re == 0:
        sign = 1 if coeff.im > 0 else -1
        mag = abs(coeff.im)
        if mag == 1:
            return sign, "i"
        return sign, f"{_rat_text(mag)}*i"
    # Mixed real and imaginary part: parenthesize so it stays one factor.
    im_sign = " + " if coeff.im > 0 else " - "
    mag = abs(coeff.im)
    imag = "i" if mag == 1 else f"{_rat_text(mag)}*i"
    return 1, f"({_rat_text(coeff.re)}{im_sign}{imag})"


z1 = SpherePoly.variable("z1")
z2 = SpherePoly.variable("z2")
z1c = SpherePoly.variable("z1c")
z2c = SpherePoly.variable("z2c")
one = SpherePoly.constant(1)

#: |z1|^2 + |z2|^2, the defining polynomial of S^3 (equal to 1 on the sphere).
radius_sq = z1 * z1c + z2 * z2c
