"""Integer and rational combinatorics: Bernoulli numbers, binomials, divisor sums."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = ["bernoulli", "binomial", "factorial", "sigma", "sigma_table", "fmt_rational", "parse_rational"]


@lru_cache(maxsize=None)
def _bernoulli_upto(h: int) -> tuple[Fraction, ...]:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1
    table = [Fraction(1)]
    for m in range(1, h + 1):
        acc = sum(math.comb(m + 1, j) * table[j] for j in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli(h: int) -> Fraction:
    """Bernoulli number B_h with the convention B_1 = -1/2."""
    if h < 0:
        raise ValueError(f"bernoulli index must be >= 0, got {h}")
    # grow the cached table in steps of 64 so repeated calls share work
    return _bernoulli_upto(-(-(h + 1) // 64) * 64)[h]


def binomial(a: int, b: int) -> int:
    if a < 0:
        raise ValueError(f"binomial top must be >= 0, got C({a}, {b})")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def sigma(h: int, n: int) -> int:
    """Sum of the h-th powers of the positive divisors of n."""
    if n <= 0:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    if h < 0:
        raise ValueError(f"sigma needs h >= 0, got {h}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**h
            e = n // d
            if e != d:
                total += e**h
        d += 1
    return total


def sigma_table(h: int, nmax: int) -> list[int]:
    """[0, sigma(h,1), ..., sigma(h,nmax)] by a divisor sieve."""
    out = [0] * (nmax + 1)
    for d in range(1, nmax + 1):
        p = d**h
        for m in range(d, nmax + 1, d):
            out[m] += p
    return out


def fmt_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        if int(q) <= 0:
            raise ValueError(f"bad denominator in {text!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(text))
