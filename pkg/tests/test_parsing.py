"""Expression grammar: parsing, evaluation, errors, and print round-trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from crlab import Monomial, SpherePoly, gr, one, parse_poly, sphere_equal, z1, z1c, z2, z2c
from crlab.parsing import LexicalError, ParseError, SyntaxParseError, evaluate, parse


def test_basic_expression():
    poly = parse_poly("z1^2*z2c - i/3")
    assert poly == z1 ** 2 * z2c - one.scale(gr(0, Fraction(1, 3)))


def test_parenthesized_square_expands():
    assert parse_poly("(z1+z1c)^2") == z1 ** 2 + (z1 * z1c).scale(2) + z1c ** 2


def test_imaginary_unit_squares():
    assert parse_poly("i*i") == one.scale(-1)


def test_rational_literal_reduces():
    assert parse_poly("2/4 * z1") == z1.scale(Fraction(1, 2))


def test_defining_relation_parses_to_sphere_one():
    assert sphere_equal(parse_poly("z1*z1c + z2*z2c"), one)


def test_conj_alias():
    assert parse_poly("conj(z1)") == z1c
    assert parse_poly("conj(i*z1 + z2)") == z1c.scale(gr(0, -1)) + z2c


def test_precedence_and_associativity():
    assert parse_poly("-z1^2") == -(z1 ** 2)
    assert parse_poly("1 - 2 - 3") == one.scale(-4)
    assert parse_poly("2*z1+3*z2") == z1.scale(2) + z2.scale(3)
    assert parse_poly("-2^2") == one.scale(-4)


def test_whitespace_insensitive():
    assert parse_poly(" z1 \t*  z2c\n+ 1/2 ") == parse_poly("z1*z2c+1/2")


def test_unknown_variable_is_lexical_error_with_column():
    with pytest.raises(LexicalError) as err:
        parse("z3")
    assert "z3" in str(err.value)
    assert err.value.column == 1
    with pytest.raises(LexicalError) as err:
        parse("z1 + w")
    assert err.value.column == 6


def test_unknown_character_is_lexical_error():
    with pytest.raises(LexicalError):
        parse("z1 @ z2")


def test_syntax_errors_are_positioned():
    with pytest.raises(SyntaxParseError) as err:
        parse("z1 + ")
    assert err.value.column == 6
    with pytest.raises(SyntaxParseError):
        parse("z1^z2")        # exponent must be an unsigned integer literal
    with pytest.raises(SyntaxParseError):
        parse("z1^-2")
    with pytest.raises(SyntaxParseError):
        parse("(z1")
    with pytest.raises(SyntaxParseError):
        parse("z1 z2")


def test_zero_denominator_rejected_at_parse_time():
    with pytest.raises(ParseError):
        parse("1/0")


def test_float_literals_are_rejected():
    with pytest.raises(ParseError):
        parse("0.5*z1")


def test_printer_round_trips_fixed_cases():
    cases = [
        SpherePoly.zero(),
        one,
        -z1,
        z1.scale(gr(Fraction(-3, 2))),
        z1.scale(gr(0, 1)) + z2.scale(gr(0, -2)),
        (z1 ** 3) * z2c + z2.scale(gr(Fraction(1, 2), Fraction(-5, 3))),
        z1 * z2 * z1c * z2c,
    ]
    for poly in cases:
        assert parse_poly(poly.to_source()) == poly
        assert parse_poly(poly.to_source(conj_style="call")) == poly


@st.composite
def polys(draw):
    out = SpherePoly.zero()
    for _ in range(draw(st.integers(0, 5))):
        mono = Monomial(*(draw(st.integers(0, 3)) for _ in range(4)))
        re = Fraction(draw(st.integers(-8, 8)), draw(st.integers(1, 6)))
        im = Fraction(draw(st.integers(-8, 8)), draw(st.integers(1, 6)))
        out = out + SpherePoly.monomial(mono, gr(re, im))
    return out


@settings(max_examples=80)
@given(polys())
def test_print_parse_round_trip(poly):
    assert parse_poly(poly.to_source()) == poly


@settings(max_examples=40)
@given(polys())
def test_call_style_round_trip(poly):
    assert parse_poly(poly.to_source(conj_style="call")) == poly


def test_evaluate_rejects_foreign_objects():
    with pytest.raises(TypeError):
        evaluate("not an ast")
