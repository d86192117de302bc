"""Exact Laurent arithmetic."""

import pytest
from hypothesis import given, strategies as st

from bandknot.laurent import LaurentPolynomial, parse_poly


def lp(d):
    return LaurentPolynomial(d)


def test_basic_arithmetic():
    p = lp({1: 1, -1: 1, 0: -1})  # t - 1 + 1/t
    q = lp({0: 1})
    assert p + q == lp({1: 1, -1: 1})
    assert p - p == LaurentPolynomial.zero()
    assert p * q == p
    assert (-p) + p == 0


def test_monomial_and_shift():
    t = LaurentPolynomial.var()
    assert t.shift(-2) == lp({-1: 1})
    assert (t + 1) * (t - 1) == lp({2: 1, 0: -1})
    assert (t + 1) ** 2 == lp({2: 1, 1: 2, 0: 1})


def test_symmetry_and_span():
    p = lp({2: -1, 0: 3, -2: -1})
    assert p.is_symmetric()
    assert p.span() == 4
    assert not lp({1: 1}).is_symmetric()
    assert LaurentPolynomial.zero().span() == 0


def test_reverse_and_compose():
    p = lp({2: 5, -1: 3})
    assert p.reverse() == lp({-2: 5, 1: 3})
    assert p.compose_power(2) == lp({4: 5, -2: 3})


def test_exact_division():
    a = lp({3: 1, 0: -1})            # t^3 - 1
    b = lp({1: 1, 0: -1})            # t - 1
    q = a.exact_div(b)
    assert q == lp({2: 1, 1: 1, 0: 1})
    with pytest.raises(ArithmeticError):
        lp({2: 1, 0: 1}).exact_div(b)


def test_evaluate_unit():
    p = lp({2: -1, 0: 3, -2: -1})
    assert p.evaluate_unit(1) == 1
    assert p.evaluate_unit(-1) == 1
    assert lp({1: 1, 0: -1, -1: 1}).evaluate_unit(-1) == -3


def test_parse_and_print_roundtrip():
    text = "-3 + 4*t + 4*t^-1 - 2*t^2 - 2*t^-2"
    p = parse_poly(text)
    assert p == lp({0: -3, 1: 4, -1: 4, 2: -2, -2: -2})
    assert parse_poly(str(p)) == p


def test_serialization_pairs():
    p = lp({-2: -2, 0: -3, 1: 4})
    pairs = p.to_pairs()
    assert pairs == [[-2, -2], [0, -3], [1, 4]]
    assert LaurentPolynomial.from_pairs(pairs) == p


coeff_dicts = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
)


@given(coeff_dicts, coeff_dicts, coeff_dicts)
def test_ring_axioms(a, b, c):
    p, q, r = lp(a), lp(b), lp(c)
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)


@given(coeff_dicts, coeff_dicts)
def test_multiplication_then_exact_division(a, b):
    p, q = lp(a), lp(b)
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


@given(coeff_dicts)
def test_reverse_involution(a):
    p = lp(a)
    assert p.reverse().reverse() == p
