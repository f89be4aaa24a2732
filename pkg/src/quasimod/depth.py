"""Depth components of quasimodular forms, in rational normalization.

For f = P(E2, E4, E6) of weight k the slash action only moves E2, by the
shift E2 -> E2 + (12/2 pi i) X. Hence the coefficient of X^i is
(12/2 pi i)^i R_i(f), where R_i(f) = (1/i!) d^i P / dE2^i is rational.
All laws below are the classical ones rewritten in terms of R_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numkernel import binomial, factorial
from .ring import ZERO, GradedPoly, QuasiForm, derive_poly, depth_of

__all__ = [
    "DepthComponents",
    "component",
    "components",
    "check_first_derivative_law",
    "check_derqm",
    "check_qsds",
]


@dataclass(frozen=True)
class DepthComponents:
    base: QuasiForm
    parts: tuple[GradedPoly, ...]

    def __getitem__(self, i: int) -> GradedPoly:
        if i < 0 or i >= len(self.parts):
            return ZERO
        return self.parts[i]


@lru_cache(maxsize=1 << 14)
def component(p: GradedPoly, i: int) -> GradedPoly:
    """i-th Taylor coefficient of p in the variable E2 (zero outside 0..deg)."""
    if isinstance(p, QuasiForm):
        p = p.poly
    if i < 0:
        return ZERO
    return GradedPoly(
        {(a - i, b, c): binomial(a, i) * x for (a, b, c), x in p.items() if a >= i}
    )


def components(f) -> DepthComponents:
    f = QuasiForm.of(f)
    top = max(depth_of(f.poly), 0)
    return DepthComponents(f, tuple(component(f.poly, i) for i in range(top + 1)))


def _d_iter(p: GradedPoly, r: int) -> GradedPoly:
    for _ in range(r):
        p = derive_poly(p)
    return p


def check_first_derivative_law(f) -> bool:
    """R_i(Df) == D R_i(f) + ((k - i + 1)/12) R_{i-1}(f) for every i."""
    f = QuasiForm.of(f)
    if f.weight <= 0:
        raise ValueError("first-derivative law needs positive weight")
    k = f.weight
    df = derive_poly(f.poly)
    top = max(depth_of(f.poly), 0) + 1
    for i in range(top + 1):
        rhs = derive_poly(component(f.poly, i)) + component(f.poly, i - 1).scale(Fraction(k - i + 1, 12))
        if component(df, i) != rhs:
            return False
    return True


def derqm_rhs(f: QuasiForm, r: int, i: int) -> GradedPoly:
    """Predicted R_i(D^r f) from the components of f."""
    k = f.weight
    out = ZERO
    for j in range(r + 1):
        base = component(f.poly, i - j)
        if not base:
            continue
        c = Fraction(factorial(j) * binomial(r, j) * binomial(k + r - i + j - 1, j), 12**j)
        out = out + _d_iter(base, r - j).scale(c)
    return out


def check_derqm(f, r: int) -> bool:
    f = QuasiForm.of(f)
    if f.weight <= 0:
        raise ValueError("derivative transformation law needs positive weight")
    lhs_poly = _d_iter(f.poly, r)
    top = max(depth_of(f.poly), 0) + r
    return all(component(lhs_poly, i) == derqm_rhs(f, r, i) for i in range(top + 2))


def check_qsds(g, s: int) -> bool:
    """R_s(D^s g) == 12^-s s! C(k-s-1, s) g for modular g, with k = weight(g) + 2s."""
    g = QuasiForm.of(g)
    if depth_of(g.poly) > 0:
        raise ValueError("check_qsds needs a modular (depth 0) form")
    if s < 1:
        raise ValueError("s must be positive")
    k = g.weight + 2 * s
    lhs = component(_d_iter(g.poly, s), s)
    return lhs == g.poly.scale(Fraction(factorial(s) * binomial(k - s - 1, s), 12**s))
