import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from quasimod.numkernel import bernoulli, binomial, fmt_rational, parse_rational, sigma, sigma_table

from conftest import brute_sigma


def akiyama_tanigawa(n):
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]  # B_n with B_1 = +1/2


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize("h", range(0, 61, 2))
def test_bernoulli_even_matches_independent_routes(h):
    assert bernoulli(h) == akiyama_tanigawa(h)
    assert bernoulli(h) == Fraction(str(sympy.bernoulli(h)))


def test_bernoulli_odd_vanish():
    assert all(bernoulli(h) == 0 for h in range(3, 51, 2))


def test_bernoulli_negative():
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(12, 1) == 12
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(0, 200), st.data())
def test_binomial_symmetry(a, data):
    b = data.draw(st.integers(0, a))
    assert binomial(a, b) == binomial(a, a - b) == math.factorial(a) // (math.factorial(b) * math.factorial(a - b))


def test_sigma_examples():
    assert sigma(1, 6) == 12
    assert sigma(3, 1) == 1
    assert sigma(5, 2) == 33
    with pytest.raises(ValueError):
        sigma(1, 0)


@given(st.integers(1, 7), st.integers(1, 3000))
def test_sigma_brute_force(h, n):
    assert sigma(h, n) == brute_sigma(h, n)


@given(st.integers(1, 5), st.integers(1, 10_000), st.integers(1, 10_000))
def test_sigma_multiplicative(h, m, n):
    if math.gcd(m, n) == 1:
        assert sigma(h, m * n) == sigma(h, m) * sigma(h, n)


def test_sigma_table_agrees():
    for h in (1, 3, 5):
        tab = sigma_table(h, 200)
        assert tab[0] == 0
        assert tab[1:] == [sigma(h, n) for n in range(1, 201)]


@given(st.fractions())
def test_rational_text_round_trip(x):
    assert parse_rational(fmt_rational(x)) == x
