from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alpha_ci.series import (
    OrderMismatchError,
    TruncatedIntSeries,
    TruncationError,
    alternating_geometric,
    binomial_power,
    coefficient,
    geom_inverse_pow,
    hilbert_series,
    mul,
)
from oracles import hilbert_coefficient


def S(*cs):
    return TruncatedIntSeries(len(cs) - 1, tuple(cs))


def series(order, lo=-50, hi=50):
    return st.lists(st.integers(lo, hi), min_size=order + 1, max_size=order + 1).map(
        lambda cs: TruncatedIntSeries(order, tuple(cs))
    )


def test_geom_inverse_pow_examples():
    assert geom_inverse_pow(4, 3).coeffs == (1, 4, 10, 20)
    assert geom_inverse_pow(0, 3).coeffs == (1, 0, 0, 0)
    assert geom_inverse_pow(1, 3).coeffs == (1, 1, 1, 1)


@given(st.integers(0, 30), st.integers(0, 30))
def test_geom_inverse_pow_coefficients(e, order):
    s = geom_inverse_pow(e, order)
    expected = [1 if j == 0 else 0 for j in range(order + 1)] if e == 0 else [
        comb(j + e - 1, j) for j in range(order + 1)
    ]
    assert list(s.coeffs) == expected


def test_mul_examples():
    assert mul(S(1, 1, 1, 1), S(1, -1, 0, 0)) == S(1, 0, 0, 0)
    assert mul(S(1, 2, 0, 0), S(1, 0, 3, 0)) == S(1, 2, 3, 6)
    a = S(3, -1, 4, 1, -5)
    assert mul(a, TruncatedIntSeries.one(4)) == a
    assert a * S(0, 1, 0, 0, 0) == S(0, 3, -1, 4, 1)


def test_mul_rejects_order_mismatch():
    with pytest.raises(OrderMismatchError):
        mul(S(1, 2), S(1, 2, 3))


def test_coefficient_examples():
    s = S(1, 4, 10, 20)
    assert coefficient(s, 2) == 10
    assert coefficient(s, -3) == 0
    with pytest.raises(TruncationError):
        coefficient(s, 7)


def test_series_validates_length():
    with pytest.raises(ValueError):
        TruncatedIntSeries(3, (1, 2))


@settings(max_examples=50)
@given(st.integers(0, 20).flatmap(lambda n: st.tuples(series(n), series(n), series(n))))
def test_mul_commutative_associative(abc):
    a, b, c = abc
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@given(st.integers(0, 12), st.integers(-5, 5))
def test_alternating_geometric_inverts_linear_factor(order, c):
    linear = TruncatedIntSeries.from_coeffs([1, c], order)
    assert mul(linear, alternating_geometric(c, order)) == TruncatedIntSeries.one(order)


@given(st.integers(0, 20), st.integers(0, 20))
def test_binomial_power(e, order):
    assert list(binomial_power(e, order).coeffs) == [comb(e, j) for j in range(order + 1)]


def test_hilbert_series_examples():
    assert hilbert_series(2, (), 2).coeffs == (1, 3, 6)
    assert hilbert_series(1, (2, 2), 0).coefficient(0) == 1
    assert hilbert_series(1, (1,), 2).coeffs == (1, 2, 3)
    # Elliptic quartic: h^0(O(j)) = 4j for j >= 1.
    assert hilbert_series(1, (2, 2), 5).coeffs == (1, 4, 8, 12, 16, 20)


@settings(max_examples=200)
@given(
    st.integers(1, 9),
    st.lists(st.integers(1, 8), max_size=4),
    st.integers(0, 40),
)
def test_hilbert_series_matches_inclusion_exclusion(n, d, order):
    s = hilbert_series(n, d, order)
    assert all(c >= 0 for c in s.coeffs)
    assert list(s.coeffs) == [hilbert_coefficient(n, d, j) for j in range(order + 1)]


def test_hilbert_series_padding_invariance():
    from itertools import combinations_with_replacement

    for n in range(1, 10):
        for k in range(4):
            for d in combinations_with_replacement(range(1, 9), k):
                assert hilbert_series(n, d, 12) == hilbert_series(n, d + (1,), 12)


def test_hilbert_series_rejects_bad_input():
    with pytest.raises(ValueError):
        hilbert_series(0, (2,), 3)
    with pytest.raises(ValueError):
        hilbert_series(2, (0,), 3)


def test_mod2_and_substitute_power():
    s = S(1, 3, 4, 5)
    assert s.mod2() == 0b1011
    assert s.substitute_power(2, 6).coeffs == (1, 0, 3, 0, 4, 0, 5)
    assert s.substitute_power(3, 4).coeffs == (1, 0, 0, 3, 0)
