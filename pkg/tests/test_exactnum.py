from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from airyherm.exactnum import (
    BivariatePolynomial,
    RationalPolynomial,
    SeriesError,
    TruncatedSeries,
    catalan_series,
    pochhammer,
    ts_compose,
    ts_div,
    ts_exp,
    ts_mul,
    ts_shift_div,
    ts_sqrt,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=9)


def series(order=6, unit=False, zero_const=False):
    coeffs = st.lists(fractions, min_size=order, max_size=order)

    def fix(c):
        c = list(c)
        if unit:
            c[0] = F(1)
        if zero_const:
            c[0] = F(0)
        return TruncatedSeries(c)
    return coeffs.map(fix)


def test_catalan_numbers():
    assert list(catalan_series(8).coeffs) == [1, 1, 2, 5, 14, 42, 132, 429]


@pytest.mark.parametrize("a,k,expected", [
    (F(1, 2), 0, F(1)),
    (F(1, 2), 3, F(15, 8)),
    (1, 5, F(120)),
    (-2, 3, F(0)),
])
def test_pochhammer(a, k, expected):
    assert pochhammer(a, k) == expected


def test_exp_of_z():
    e = ts_exp(TruncatedSeries.monomial(1, 6))
    assert list(e.coeffs) == [1, 1, F(1, 2), F(1, 6), F(1, 24), F(1, 120)]


def test_sqrt_one_minus_4z_is_catalan_numerator():
    s = ts_sqrt(TruncatedSeries([1, -4], order=8))
    w = ts_shift_div(1 - s, 1).scale(F(1, 2))
    assert w.coeffs == catalan_series(7).coeffs


def test_series_errors():
    with pytest.raises(SeriesError):
        ts_div(TruncatedSeries.one(4), TruncatedSeries([0, 1], order=4))
    with pytest.raises(SeriesError):
        ts_shift_div(TruncatedSeries([1, 1], order=4), 1)
    with pytest.raises(SeriesError):
        ts_sqrt(TruncatedSeries([2, 1], order=4))
    with pytest.raises(SeriesError):
        ts_exp(TruncatedSeries([1, 1], order=4))


@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_mul_ring_laws(a, b, c):
    assert ts_mul(a, b) == ts_mul(b, a)
    assert ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c))
    assert ts_mul(a, b + c) == ts_mul(a, b) + ts_mul(a, c)


@settings(max_examples=40, deadline=None)
@given(series(), series(unit=True))
def test_div_inverts_mul(a, b):
    assert ts_mul(ts_div(a, b), b) == a


@settings(max_examples=30, deadline=None)
@given(series(unit=True))
def test_sqrt_squares_back(a):
    r = ts_sqrt(a)
    assert ts_mul(r, r) == a


@settings(max_examples=30, deadline=None)
@given(series(zero_const=True), series(zero_const=True))
def test_exp_is_a_homomorphism(a, b):
    assert ts_exp(a + b) == ts_mul(ts_exp(a), ts_exp(b))


@settings(max_examples=30, deadline=None)
@given(series(zero_const=True))
def test_compose_with_identity(inner):
    ident = TruncatedSeries.monomial(1, inner.order)
    assert ts_compose(ident, inner) == inner
    assert ts_compose(inner, ident) == inner


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, max_size=6), st.lists(fractions, max_size=6), fractions)
def test_polynomial_evaluation_is_a_ring_map(p, q, u):
    P, Q = RationalPolynomial(p), RationalPolynomial(q)
    assert (P * Q)(u) == P(u) * Q(u)
    assert (P + Q)(u) == P(u) + Q(u)


def test_polynomial_basics():
    p = RationalPolynomial([1, 0, 3, 0, 0])
    assert p.degree == 2
    assert RationalPolynomial().degree == -1
    assert p.derivative() == RationalPolynomial([0, 6])
    assert p(F(1, 3)) == F(4, 3)
    assert isinstance(p(0.5), float)


def test_bivariate_derivatives():
    # x^2 t + 3x
    b = BivariatePolynomial([RationalPolynomial(), RationalPolynomial([3]),
                             RationalPolynomial([0, 1])])
    assert b(F(2), F(1)) == 5
    assert b.d_x() (F(2), F(1)) == 7
    assert b.d_t()(F(5), F(3)) == 9
    assert b.coefficient(2, 1) == 1
    assert (b - b).is_zero
