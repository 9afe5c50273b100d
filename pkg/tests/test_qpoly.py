import json
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from csp_lab.qpoly import (
    ONE,
    Q,
    ZERO,
    InexactDivision,
    IntPolynomial,
    RationalQ,
    exp_q_truncated,
    poly_divmod,
    poly_exact_div,
    poly_gcd,
    q_binomial,
    q_factorial,
    q_int,
    reduce_cyclic,
)

polys = st.lists(st.integers(-20, 20), max_size=7).map(IntPolynomial)
nonzero = polys.filter(bool)


@lru_cache(maxsize=None)
def pascal(n, k):
    """Gauss binomial from the q-Pascal rule, independent of division."""
    if k == 0 or k == n:
        return ONE
    return pascal(n - 1, k - 1) + pascal(n - 1, k).shift(k)


def test_canonical_form():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]) == ZERO
    assert ZERO.degree is None
    assert IntPolynomial([0, 0, 3]).degree == 2


def test_q_int():
    assert q_int(0) == ZERO
    assert q_int(1) == ONE
    assert q_int(4) == IntPolynomial([1, 1, 1, 1])


def test_q_factorial():
    assert q_factorial(0) == ONE
    assert q_factorial(2) == 1 + Q
    assert q_factorial(3) == IntPolynomial([1, 2, 2, 1])


@pytest.mark.parametrize("n", range(10))
def test_q_binomial_matches_pascal(n):
    for k in range(n + 1):
        b = q_binomial(n, k)
        assert b == pascal(n, k)
        assert b.has_nonnegative_coefficients()
        assert b == q_binomial(n, n - k)


def test_q_binomial_rejects_bad_k():
    with pytest.raises(ValueError):
        q_binomial(3, 4)
    with pytest.raises(ValueError):
        q_binomial(3, -1)


def test_reduce_cyclic():
    f = Q**6 + Q**8 + Q**9 + Q**10 + Q**12
    assert reduce_cyclic(f, 6) == IntPolynomial([2, 0, 1, 1, 1])
    assert reduce_cyclic(Q**2 + Q**4, 4) == IntPolynomial([1, 0, 1])
    with pytest.raises(ValueError):
        reduce_cyclic(f, 0)


@given(polys, st.integers(1, 9))
def test_reduce_cyclic_is_remainder(f, n):
    r = reduce_cyclic(f, n)
    quotient, rem = poly_divmod(f, Q**n - 1)
    assert rem == r
    assert r(1) == f(1)
    assert r.degree is None or r.degree < n


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == ZERO


@given(nonzero, nonzero)
def test_degree_of_product(f, g):
    assert (f * g).degree == f.degree + g.degree


@given(polys, nonzero)
def test_exact_division_roundtrip(f, g):
    assert poly_exact_div(f * g, g) == f


def test_inexact_division_raises():
    with pytest.raises(InexactDivision):
        poly_exact_div(Q + 2, Q + 1)


def test_gcd():
    a = (1 + Q) * (1 + Q + Q**2)
    b = (1 + Q) * (1 - Q) * 3
    g = poly_gcd(a, b)
    assert g == 1 + Q


@given(polys)
def test_json_roundtrip(f):
    assert IntPolynomial.from_json(f.to_json()) == f
    assert json.loads(f.to_json()) == list(f.coeffs)


def test_str():
    assert str(IntPolynomial([1, 1, 2])) == "1 + q + 2q^2"
    assert str(ZERO) == "0"


def test_rational_reduced():
    r = RationalQ(q_int(4), q_int(2))
    assert r.is_polynomial()
    assert r.numerator == 1 + Q**2
    s = RationalQ(-2 * (1 + Q), -4 * (1 + Q) * (1 + Q))
    assert s.numerator == ONE
    assert s.denominator == 2 + 2 * Q


@given(polys, polys)
def test_rational_embeds_polynomials(f, g):
    assert RationalQ(f) + RationalQ(g) == RationalQ(f + g)
    assert RationalQ(f) * RationalQ(g) == RationalQ(f * g)


@given(polys, nonzero, polys, nonzero)
def test_rational_field_ops(a, b, c, d):
    x, y = RationalQ(a, b), RationalQ(c, d)
    assert (x + y) - y == x
    if c:
        assert (x * y) / y == x


def test_exp_q_coefficients():
    coeffs = exp_q_truncated(4)
    assert coeffs[0] == RationalQ(1)
    assert coeffs[3] * RationalQ(q_factorial(3)) == RationalQ(1)
