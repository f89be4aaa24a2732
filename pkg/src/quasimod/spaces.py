"""Graded pieces of the quasimodular algebra and membership in direct sums."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence, Union

from . import linalg
from .numkernel import factorial
from .ring import (
    DELTA,
    E2,
    GradedPoly,
    GradingError,
    QuasiForm,
    ZERO,
    depth_of,
    derive_poly,
    monomial,
)
from .depth import component

__all__ = [
    "Modular",
    "Cusp",
    "DerivedModular",
    "DerivedCusp",
    "Line",
    "SpaceSpec",
    "Decomposition",
    "basis_modular",
    "basis_cusp",
    "basis_quasimodular",
    "decompose",
    "membership",
    "summand_basis",
]


def _check_even(w: int):
    if w % 2:
        raise ValueError(f"weight must be even, got {w}")


def basis_modular(w: int) -> list[GradedPoly]:
    """Monomials E4^a E6^b of weight w."""
    _check_even(w)
    if w < 0:
        return []
    return [monomial(0, a, (w - 4 * a) // 6) for a in range(w // 4, -1, -1) if (w - 4 * a) % 6 == 0]


def basis_cusp(w: int) -> list[GradedPoly]:
    _check_even(w)
    return [DELTA * m for m in basis_modular(w - 12)]


def basis_quasimodular(w: int, s: int) -> list[GradedPoly]:
    """Monomials of weight w and E2-degree at most s."""
    _check_even(w)
    out = []
    for a in range(min(s, w // 2), -1, -1):
        out.extend(E2**a * m for m in basis_modular(w - 2 * a))
    return out


@dataclass(frozen=True)
class Modular:
    w: int


@dataclass(frozen=True)
class Cusp:
    w: int


@dataclass(frozen=True)
class DerivedModular:
    j: int
    w: int


@dataclass(frozen=True)
class DerivedCusp:
    j: int
    w: int


@dataclass(frozen=True)
class Line:
    generator: QuasiForm


Summand = Union[Modular, Cusp, DerivedModular, DerivedCusp, Line]
SpaceSpec = Sequence[Summand]


def _d(p: GradedPoly, j: int) -> GradedPoly:
    for _ in range(j):
        p = derive_poly(p)
    return p


def summand_weight(s: Summand) -> int | None:
    if isinstance(s, (Modular, Cusp)):
        return s.w
    if isinstance(s, (DerivedModular, DerivedCusp)):
        return s.w + 2 * s.j
    g = QuasiForm.of(s.generator)
    return g.weight if g.poly else None


def summand_basis(s: Summand) -> list[GradedPoly]:
    if isinstance(s, Modular):
        return basis_modular(s.w)
    if isinstance(s, Cusp):
        return basis_cusp(s.w)
    if isinstance(s, DerivedModular):
        return [_d(m, s.j) for m in basis_modular(s.w)]
    if isinstance(s, DerivedCusp):
        return [_d(m, s.j) for m in basis_cusp(s.w)]
    if isinstance(s, Line):
        return [QuasiForm.of(s.generator).poly]
    raise TypeError(f"unknown summand {s!r}")


class _SpanSolver:
    """Row-reduced form of a fixed basis, reused across membership queries."""

    def __init__(self, basis: list[GradedPoly]):
        self.size = len(basis)
        self.monos = sorted({m for b in basis for m in b.terms}, reverse=True)
        self.index = {m: i for i, m in enumerate(self.monos)}
        nm = len(self.monos)
        # rows: monomials; columns: basis elements followed by an identity block
        aug = [
            [b.coeff(m) for b in basis] + [Fraction(int(i == r)) for i in range(nm)]
            for r, m in enumerate(self.monos)
        ]
        red, pivots = linalg.rref(aug)
        self.pivots = [p for p in pivots if p < self.size]
        rank = len(self.pivots)
        self.transform = [row[self.size:] for row in red]
        # rows of the transform past the rank annihilate the span
        self.rank = rank

    def solve(self, target: GradedPoly) -> list[Fraction] | None:
        if any(m not in self.index for m in target.terms):
            return None
        y = [target.coeff(m) for m in self.monos]
        z = [sum((e * v for e, v in zip(row, y) if e and v), Fraction(0)) for row in self.transform]
        if any(z[self.rank:]):
            return None
        x = [Fraction(0)] * self.size
        for i, pc in enumerate(self.pivots):
            x[pc] = z[i]
        return x


@lru_cache(maxsize=4096)
def _solver(spec: tuple) -> _SpanSolver:
    return _SpanSolver([b for s in spec for b in summand_basis(s)])


def membership(f, spec: SpaceSpec) -> list[Fraction] | None:
    """Coordinates of f in the concatenated summand bases, or None if outside the span.

    Coordinates are unique when the summands are independent; otherwise free
    coordinates are set to zero.
    """
    f = QuasiForm.of(f)
    spec = tuple(spec)
    w = f.weight if f.poly else None
    for s in spec:
        sw = summand_weight(s)
        if sw is None:
            continue
        if w is None:
            w = sw
        elif sw != w:
            raise GradingError(f"summand {s} has weight {sw}, ambient weight is {w}")
    return _solver(spec).solve(f.poly)


@dataclass
class Decomposition:
    weight: int
    parts: list[tuple[int, GradedPoly]] = field(default_factory=list)
    line: Fraction = Fraction(0)

    def reassemble(self) -> GradedPoly:
        out = ZERO
        for j, m in self.parts:
            out = out + _d(m, j)
        if self.line:
            out = out + _d(E2, self.weight // 2 - 1).scale(self.line)
        return out


def decompose(f) -> Decomposition:
    """Write f as sum_j D^j m_j + c D^{k/2-1} E2 with m_j modular of weight k - 2j."""
    f = QuasiForm.of(f)
    k = f.weight
    if k <= 0:
        raise ValueError("decompose needs positive weight")
    out = Decomposition(k)
    residual = f.poly
    while residual:
        s = depth_of(residual)
        top = component(residual, s)
        if 2 * s == k:
            c = top.coeff((0, 0, 0)) * Fraction(12 ** (s - 1), factorial(s - 1))
            out.line = c
            residual = residual - _d(E2, s - 1).scale(c)
        else:
            m = top.scale(Fraction(12**s * factorial(k - 2 * s - 1), factorial(k - s - 1)))
            out.parts.append((s, m))
            residual = residual - _d(m, s)
        if residual and depth_of(residual) >= s:
            raise ArithmeticError(f"descent failed to lower depth at s={s}")
    out.parts.sort(key=lambda jm: jm[0])
    return out
