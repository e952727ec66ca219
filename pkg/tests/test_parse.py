from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from interlace.errors import ParseError
from interlace.family import family_parameters
from interlace.parse import parse_polynomial
from interlace.polycore import Poly, X, render


def test_plain_cubic():
    assert parse_polynomial("x^3 - 3*x + 1").coeffs == (1, -3, 0, 1)


def test_quintic_with_rational_coefficient():
    p = parse_polynomial("x^5 + (10/3)x^3 + 10x^2 + 60x + 72")
    assert family_parameters(p).c == (1, 1, 3, Fraction(18, 5))


def test_whitespace_and_implicit_products():
    assert parse_polynomial("  2 x ^ 2+x") == 2 * X ** 2 + X
    assert parse_polynomial("(x-1)^3 (x+3)") == Poly.from_roots([1, 1, 1, -3])
    assert parse_polynomial("-x^2") == -(X ** 2)
    assert parse_polynomial("x/2 + 0.25") == X / 2 + Fraction(1, 4)
    assert parse_polynomial("x^0") == Poly([1])


@pytest.mark.parametrize(
    "text, position",
    [
        ("x^2 + y", 6),
        ("x^1.5", 2),
        ("x^-1", 2),
        ("2 3", 2),
        ("(x", 2),
        ("", 0),
        ("x^", 2),
        ("3/0", 1),
        ("x / x", 2),
        ("x $ 1", 2),
        ("x^(2)", 2),
    ],
)
def test_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.position == position


def test_unknown_symbol_message():
    with pytest.raises(ParseError, match="unknown symbol 'y'"):
        parse_polynomial("x^2 + y")


coeff = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(st.lists(coeff, max_size=8))
def test_round_trip(coeffs):
    p = Poly(coeffs)
    assert parse_polynomial(render(p)) == p
