"""Grammar coverage and error reporting for the expression parser."""

import pytest

from multres import ParseError, Polynomial, parse, parse_ring


@pytest.fixture
def ring():
    return parse_ring("Q[x,y,z]")


def test_literal_reading(ring):
    f = parse("z^2 - x^2*y", ring)
    assert f.terms == {
        (0, 0, 2): 1,
        (2, 1, 0): -1,
    }


def test_zero(ring):
    assert parse("0", ring) == Polynomial.zero(ring)


def test_negative_exponent_rejected(ring):
    with pytest.raises(ParseError, match="negative exponent"):
        parse("x^(-1)", ring)


def test_fractional_exponent_rejected(ring):
    with pytest.raises(ParseError, match="non-integer exponent"):
        parse("x^(1/2)", ring)


def test_symbolic_exponent_rejected(ring):
    with pytest.raises(ParseError, match="non-integer exponent"):
        parse("x^y", ring)


def test_unknown_variable_with_position(ring):
    with pytest.raises(ParseError) as err:
        parse("x + w", ring)
    assert "unknown variable" in str(err.value)
    assert err.value.position == 4


def test_trailing_garbage(ring):
    with pytest.raises(ParseError, match="trailing"):
        parse("x + y )", ring)


def test_mandatory_star(ring):
    with pytest.raises(ParseError):
        parse("2x", ring)


def test_unary_minus_forms(ring):
    assert parse("-x + y", ring) == parse("y - x", ring)
    assert parse("-x^2", ring) == -parse("x^2", ring)
    assert parse("2 - -3", ring) == parse("5", ring)


def test_rational_literals(ring):
    from fractions import Fraction

    f = parse("3/4*x", ring)
    assert f.terms == {(1, 0, 0): Fraction(3, 4)}
    with pytest.raises(ParseError, match="zero denominator"):
        parse("1/0", ring)


def test_parenthesized_powers(ring):
    assert parse("(x + y)^3", ring) == parse("x + y", ring) ** 3
    assert parse("x^(2)", ring) == parse("x^2", ring)


def test_caret_binds_tightest(ring):
    assert parse("2*x^2", ring) == 2 * parse("x", ring) ** 2
    assert parse("-x^2", ring) == -(parse("x", ring) ** 2)


def test_primed_names_allowed():
    ring = parse_ring("Q[x,z']")
    f = parse("z'^2 - x", ring)
    assert f.degree_in("z'") == 2


def test_char_p_rational_literal():
    ring = parse_ring("F5[x]")
    # 1/2 = 3 mod 5
    assert parse("1/2*x", ring) == parse("3*x", ring)
