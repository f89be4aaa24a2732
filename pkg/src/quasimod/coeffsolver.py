"""Recover the bracket coefficients as the kernel of the depth-reduction constraints.

The constraint rows are indexed by (u, v, alpha, beta) with u <= s, v <= t,
alpha + beta <= u + v + n - s - t - 1; the entry in column r is
C(r, alpha) C(n-r, beta) (k+r-u-1)! (l+n-r-v-1)!.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .brackets import BracketParams, rc_coeffs
from .linalg import nullspace
from .numkernel import binomial, factorial

__all__ = [
    "ConstraintIndex",
    "CoefficientDiscrepancy",
    "constraint_set",
    "constraint_matrix",
    "nullspace",
    "solve_and_confirm",
    "pi_polynomial_check",
    "series_p1",
    "series_p2",
    "pi1",
    "pi2",
]


class ConstraintIndex(NamedTuple):
    u: int
    v: int
    alpha: int
    beta: int


class CoefficientDiscrepancy(ArithmeticError):
    pass


def constraint_set(s: int, t: int, n: int) -> list[ConstraintIndex]:
    out = []
    for u in range(s + 1):
        for v in range(t + 1):
            bound = u + v + n - s - t - 1
            for alpha in range(bound + 1):
                for beta in range(bound - alpha + 1):
                    out.append(ConstraintIndex(u, v, alpha, beta))
    return out


def constraint_matrix(k: int, l: int, s: int, t: int, n: int) -> list[list[int]]:
    BracketParams(n, k, s, l, t)  # validates the ranges
    rows = []
    for u, v, alpha, beta in constraint_set(s, t, n):
        rows.append(
            [
                binomial(r, alpha) * binomial(n - r, beta) * factorial(k + r - u - 1) * factorial(l + n - r - v - 1)
                for r in range(n + 1)
            ]
        )
    return rows


def solve_and_confirm(k: int, l: int, s: int, t: int, n: int) -> tuple[int, ...]:
    """Check the kernel is the line spanned by the closed-form coefficients; return them."""
    if n <= 0:
        raise ValueError("solve_and_confirm needs n >= 1")
    closed = rc_coeffs(BracketParams(n, k, s, l, t))
    kernel = nullspace(constraint_matrix(k, l, s, t, n), n + 1)
    if len(kernel) != 1:
        raise CoefficientDiscrepancy(
            f"kernel dimension {len(kernel)} != 1 at (k,l,s,t,n)=({k},{l},{s},{t},{n})"
        )
    v = kernel[0]
    # proportional iff every 2x2 minor vanishes
    if any(v[i] * closed[j] != v[j] * closed[i] for i in range(n + 1) for j in range(i + 1, n + 1)):
        raise CoefficientDiscrepancy(f"kernel vector {v} not proportional to {closed}")
    if all(x == 0 for x in v):
        raise CoefficientDiscrepancy("zero kernel vector")
    return closed


# truncated power series in X as coefficient lists


def _series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def _exp_series(sign: int, order: int):
    return [Fraction(sign**r, factorial(r)) for r in range(order + 1)]


def series_p1(k, s, u, alpha, order):
    return [
        Fraction((-1) ** r * binomial(r, alpha) * binomial(k - u - 1 + r, s - u), factorial(r))
        for r in range(order + 1)
    ]


def series_p2(l, t, v, beta, order):
    return [
        Fraction(binomial(r, beta) * binomial(l - v - 1 + r, t - v), factorial(r))
        for r in range(order + 1)
    ]


def pi1(k, s, u, alpha):
    """Polynomial factor of P1 = Pi1 exp(-X), as a coefficient list.

    The sign pattern is (-1)^r on each term; P2's factor carries no signs.
    """
    out = [Fraction(0)] * (s - u + alpha + 1)
    for r in range(alpha, s - u + alpha + 1):
        out[r] = Fraction(
            (-1) ** r * binomial(k + alpha - u - 1, k + r - s - 1) * binomial(r, alpha), factorial(r)
        )
    return out


def pi2(l, t, v, beta):
    out = [Fraction(0)] * (t - v + beta + 1)
    for r in range(beta, t - v + beta + 1):
        out[r] = Fraction(
            binomial(l + beta - v - 1, l + r - t - 1) * binomial(r, beta), factorial(r)
        )
    return out


def pi_polynomial_check(k, l, s, t, u, v, alpha, beta, order, n=None) -> bool:
    """P1 = Pi1 e^-X, P2 = Pi2 e^X and P1 P2 has degree alpha+beta+s+t-u-v, to X^order.

    With ``n`` given, also require the X^n coefficient of P1 P2 to vanish
    whenever alpha + beta - u - v < n - s - t.
    """
    p1 = series_p1(k, s, u, alpha, order)
    p2 = series_p2(l, t, v, beta, order)
    if p1 != _series_mul(pi1(k, s, u, alpha), _exp_series(-1, order), order):
        return False
    if p2 != _series_mul(pi2(l, t, v, beta), _exp_series(1, order), order):
        return False
    prod = _series_mul(p1, p2, order)
    deg = alpha + beta + s + t - u - v
    if any(prod[d] for d in range(deg + 1, order + 1)):
        return False
    if deg <= order and not prod[deg]:
        return False
    if n is not None and alpha + beta - u - v < n - s - t and n <= order and prod[n]:
        return False
    return True
