from fractions import Fraction

import pytest

from fibspec.localring import (
    MonomialOrder,
    Polynomial,
    PolynomialSyntaxError,
    parse_polynomial,
)

V4 = ("z", "x", "y", "w")


def test_parse_four_term_cubic():
    f = parse_polynomial("z^3 + x^2 + y^2 + w^2", V4)
    assert len(f.terms) == 4
    assert f.total_degree() == 3


def test_parse_cancellation_to_zero():
    assert parse_polynomial("x - x", ("x",)).is_zero()


def test_parenthesized_exponent_rejected():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x^(2)", ("x",))


def test_empty_input_rejected():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("   ", ("x",))


def test_unknown_symbol_rejected():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("x + q", ("x",))


def test_implicit_multiplication_rejected():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("2 x", ("x",))


def test_rational_coefficients():
    f = parse_polynomial("1/2*x + 3*y - 2/3", ("x", "y"))
    assert f.terms[(1, 0)] == Fraction(1, 2)
    assert f.terms[(0, 0)] == Fraction(-2, 3)


def test_print_parse_fixed_point():
    texts = [
        "z^3 + x^2 + y^2 + w^2",
        "x^5 + y^5 + 3*x^3*y^3 - 1/2*x",
        "2*z - w + 7",
    ]
    for text in texts:
        f = parse_polynomial(text, V4)
        again = parse_polynomial(str(f), V4)
        assert again == f
        assert str(again) == str(f)


def test_leading_monomial_local_vs_global():
    f = parse_polynomial("x + x^2", ("x", "y"))
    local = MonomialOrder("local")
    glob = MonomialOrder("global")
    assert f.leading_monomial(local) == (1, 0)
    assert f.leading_monomial(glob) == (2, 0)
    one = parse_polynomial("1 + x", ("x", "y"))
    assert one.leading_monomial(local) == (0, 0)
    assert one.leading_monomial(glob) == (1, 0)


def test_diff():
    f = parse_polynomial("x^2*y", ("x", "y"))
    assert f.diff(0) == parse_polynomial("2*x*y", ("x", "y"))
    assert f.diff(1) == parse_polynomial("x^2", ("x", "y"))
