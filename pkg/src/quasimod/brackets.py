"""Rankin-Cohen brackets on quasimodular forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numkernel import binomial
from .ring import (
    DELTA,
    GradedPoly,
    GradingError,
    QuasiForm,
    ZERO,
    derive_poly,
    depth_of,
)

__all__ = [
    "BracketParams",
    "DepthBoundViolation",
    "rc_coeffs",
    "bracket",
    "bracket_poly",
    "combine",
    "check_leibniz",
    "delta_factor",
]


class DepthBoundViolation(AssertionError):
    """A bracket produced a form deeper than s + t."""


@dataclass(frozen=True)
class BracketParams:
    n: int
    k: int
    s: int
    l: int
    t: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.k <= 0 or self.l <= 0:
            raise ValueError(f"weights must be positive, got k={self.k}, l={self.l}")
        if not 0 <= self.s <= self.k // 2:
            raise ValueError(f"s={self.s} outside 0..{self.k // 2}")
        if not 0 <= self.t <= self.l // 2:
            raise ValueError(f"t={self.t} outside 0..{self.l // 2}")


def rc_coeffs(p: BracketParams) -> tuple[int, ...]:
    """a_r = (-1)^r C(k-s+n-1, n-r) C(l-t+n-1, r), r = 0..n."""
    n = p.n
    return tuple(
        (-1) ** r * binomial(p.k - p.s + n - 1, n - r) * binomial(p.l - p.t + n - 1, r)
        for r in range(n + 1)
    )


def _derivatives(p: GradedPoly, n: int) -> list[GradedPoly]:
    out = [p]
    for _ in range(n):
        out.append(derive_poly(out[-1]))
    return out


def combine(f: GradedPoly, g: GradedPoly, coeffs) -> GradedPoly:
    """sum_r coeffs[r] D^r f D^{n-r} g with n = len(coeffs) - 1."""
    n = len(coeffs) - 1
    df = _derivatives(f, n)
    dg = _derivatives(g, n)
    out = ZERO
    for r, a in enumerate(coeffs):
        if a:
            out = out + (df[r] * dg[n - r]).scale(a)
    return out


def bracket_poly(f: GradedPoly, g: GradedPoly, p: BracketParams) -> GradedPoly:
    return combine(f, g, rc_coeffs(p))


def _params_for(f: QuasiForm, g: QuasiForm, n: int) -> BracketParams:
    return BracketParams(n, f.weight, max(depth_of(f.poly), 0), g.weight, max(depth_of(g.poly), 0))


def bracket(f, g, n: int, override: BracketParams | None = None) -> QuasiForm:
    """Phi_{n;k,s;l,t}(f, g); (k, s, l, t) default to exact weight and depth."""
    f = QuasiForm.of(f)
    g = QuasiForm.of(g)
    if f.weight == 0 or g.weight == 0:
        raise GradingError("brackets need inputs of positive weight")
    p = override if override is not None else _params_for(f, g, n)
    if override is not None:
        if p.n != n:
            raise ValueError(f"override n={p.n} does not match n={n}")
        if (f.poly and f.weight != p.k) or (g.poly and g.weight != p.l):
            raise GradingError("override weights do not match the inputs")
        if depth_of(f.poly) > p.s or depth_of(g.poly) > p.t:
            raise GradingError("override depth bounds are below the inputs' depths")
    h = bracket_poly(f.poly, g.poly, p)
    if depth_of(h) > p.s + p.t:
        raise DepthBoundViolation(f"bracket of depth {depth_of(h)} exceeds s+t={p.s + p.t} for {p}")
    return QuasiForm(h, p.k + p.l + 2 * n, p.s + p.t)


def check_leibniz(f, g, n: int, params: BracketParams | None = None) -> bool:
    """D Phi_{n;k,s;l,t}(f,g) == Phi_{n;k,s;l+2,t+1}(f,Dg) + Phi_{n;k+2,s+1;l,t}(Df,g)."""
    f = QuasiForm.of(f)
    g = QuasiForm.of(g)
    p = params if params is not None else _params_for(f, g, n)
    lhs = derive_poly(bracket_poly(f.poly, g.poly, p))
    right_g = BracketParams(n, p.k, p.s, p.l + 2, p.t + 1)
    right_f = BracketParams(n, p.k + 2, p.s + 1, p.l, p.t)
    rhs = bracket_poly(f.poly, derive_poly(g.poly), right_g) + bracket_poly(derive_poly(f.poly), g.poly, right_f)
    return lhs == rhs


def delta_factor(f, g, n: int) -> QuasiForm:
    """The form h with Phi(f, Delta g) = Delta h."""
    from .spaces import Line, basis_quasimodular, membership

    f = QuasiForm.of(f)
    g = QuasiForm.of(g)
    dg = QuasiForm.of(DELTA * g.poly)
    phi = bracket(f, dg, n)
    s = max(depth_of(f.poly), 0)
    t = max(depth_of(dg.poly), 0)
    w = phi.weight - 12
    candidates = [m for m in basis_quasimodular(w, s + t)]
    coords = membership(phi, [Line(QuasiForm.of(DELTA * m)) for m in candidates])
    if coords is None:
        raise ArithmeticError(f"bracket {phi} is not Delta times a form of weight {w}, depth <= {s + t}")
    h = ZERO
    for c, m in zip(coords, candidates):
        h = h + m.scale(c)
    if DELTA * h != phi.poly:
        raise ArithmeticError("Delta-factor reassembly failed")
    return QuasiForm(h, w, min(s + t, w // 2))
