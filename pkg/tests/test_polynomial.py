from fractions import Fraction

import pytest

from quivercount import CountPolynomial, InexactDivisionError
from quivercount.counting import poly_ops

Q = CountPolynomial((0, 1))


def test_canonical_trailing_zeros():
    assert CountPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert CountPolynomial((0, 0)).is_zero()
    assert CountPolynomial(()).degree == -1


def test_arithmetic():
    p = Q * Q - 1
    assert p == CountPolynomial((-1, 0, 1))
    assert p + 1 == Q * Q
    assert (Q - 1) * (Q + 1) == p
    assert -(Q - 1) == CountPolynomial((1, -1))


def test_div_exact():
    assert (Q * Q - 1).div_exact(Q - 1) == Q + 1
    assert (Q * Q * Q).div_exact(Q) == Q * Q
    with pytest.raises(InexactDivisionError):
        (Q * Q + 1).div_exact(Q - 1)
    with pytest.raises(ZeroDivisionError):
        Q.div_exact(CountPolynomial.zero())


def test_evaluation():
    assert (Q + 1)(4) == 5
    assert isinstance((Q + 1)(4), int)
    half = CountPolynomial((Fraction(1, 2),))
    assert half(3) == Fraction(1, 2)


def test_coefficient_predicates():
    assert (Q + 1).has_integer_coeffs()
    assert (Q + 1).has_nonnegative_coeffs()
    assert not (Q - 1).has_nonnegative_coeffs()
    assert not CountPolynomial((Fraction(1, 2), 1)).has_integer_coeffs()


def test_pretty():
    assert (Q * Q + Q + 1).pretty() == "q^2 + q + 1"
    assert (Q + 1).pretty() == "q + 1"
    assert (Q - 1).pretty() == "q - 1"
    assert (1 - Q).pretty() == "-q + 1"
    assert (2 * Q - 3).pretty() == "2*q - 3"
    assert CountPolynomial.zero().pretty() == "0"
    assert CountPolynomial.monomial(12).pretty() == "q^12"
    assert (Q + 1).pretty(var="t") == "t + 1"
    assert CountPolynomial((Fraction(1, 2),)).pretty() == "1/2"


def test_coeff_line():
    assert (Q * Q + Q + 1).coeff_line() == "1 1 1"
    assert CountPolynomial.zero().coeff_line() == "0"
    assert CountPolynomial((Fraction(1, 2), -2)).coeff_line() == "1/2 -2"


def test_poly_ops_dispatch():
    assert poly_ops("add", Q, 1) == Q + 1
    assert poly_ops("mul", Q - 1, Q + 1) == Q * Q - 1
    assert poly_ops("div_exact", Q * Q - 1, Q - 1) == Q + 1
    assert poly_ops("eval_at_integer", Q + 1, 4) == 5
    with pytest.raises(InexactDivisionError):
        poly_ops("div_exact", Q * Q + 1, Q - 1)
    with pytest.raises(ValueError):
        poly_ops("sub", Q, Q)


def test_immutability_and_hash():
    p = Q + 1
    with pytest.raises(AttributeError):
        p.coeffs = (0,)
    assert hash(Q + 1) == hash(CountPolynomial((1, 1)))
