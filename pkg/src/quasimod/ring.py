"""The graded ring Q[E2, E4, E6] with the Ramanujan derivation.

Weights of the generators are 2, 4, 6; the depth of a polynomial is its
degree in E2. A monomial E2^a E4^b E6^c is keyed by the triple (a, b, c).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import qseries
from .numkernel import fmt_rational, parse_rational

__all__ = [
    "GradedPoly",
    "QuasiForm",
    "GradingError",
    "E2",
    "E4",
    "E6",
    "DELTA",
    "ONE",
    "ZERO",
    "weight_of",
    "depth_of",
    "derive",
    "derive_poly",
    "derive_n",
    "to_qseries",
    "constant_term",
    "monomial",
]

Monomial = tuple[int, int, int]
NEG_INF = float("-inf")


class GradingError(ValueError):
    """A polynomial is not homogeneous, or a weight/depth bound is violated."""


def _mono_weight(m: Monomial) -> int:
    return 2 * m[0] + 4 * m[1] + 6 * m[2]


class GradedPoly:
    """Sparse polynomial in E2, E4, E6 with Fraction coefficients. Immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(m) != 3 or min(m) < 0:
                    raise ValueError(f"bad exponent triple {m!r}")
                clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> GradedPoly:
        return cls({(0, 0, 0): c})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.const(other)
        if isinstance(other, QuasiForm):
            other = other.poly
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> GradedPoly:
        c = Fraction(c)
        return GradedPoly({m: c * x for m, x in self._terms.items()})

    def e2_degree(self):
        """Largest E2 exponent; -inf for the zero polynomial."""
        return max((m[0] for m in self._terms), default=NEG_INF)

    def weights(self) -> set[int]:
        return {_mono_weight(m) for m in self._terms}

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        # canonical order: lexicographic descending on (a, b, c)
        return sorted(self._terms.items(), reverse=True)

    def __repr__(self):
        return f"GradedPoly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)

    def to_records(self) -> list[dict]:
        return [
            {"a": m[0], "b": m[1], "c": m[2], "coefficient": fmt_rational(c)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> GradedPoly:
        out = {}
        for r in records:
            m = (int(r["a"]), int(r["b"]), int(r["c"]))
            if m in out:
                raise ValueError(f"duplicate monomial {m}")
            out[m] = parse_rational(r["coefficient"])
        return cls(out)

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_json(cls, text: str) -> GradedPoly:
        return cls.from_records(json.loads(text))


def _as_poly(x):
    if isinstance(x, GradedPoly):
        return x
    if isinstance(x, QuasiForm):
        return x.poly
    if isinstance(x, (int, Fraction)):
        return GradedPoly.const(x)
    return None


@lru_cache(maxsize=1 << 16)
def _mul(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    out: dict[Monomial, Fraction] = {}
    for (a1, b1, c1), x in p._terms.items():
        for (a2, b2, c2), y in q._terms.items():
            m = (a1 + a2, b1 + b2, c1 + c2)
            out[m] = out.get(m, 0) + x * y
    return GradedPoly(out)


def monomial(a: int, b: int = 0, c: int = 0, coeff=1) -> GradedPoly:
    return GradedPoly({(a, b, c): coeff})


ZERO = GradedPoly()
ONE = GradedPoly.const(1)
E2 = monomial(1, 0, 0)
E4 = monomial(0, 1, 0)
E6 = monomial(0, 0, 1)
DELTA = (E4**3 - E6**2) / 1728


def format_poly(p: GradedPoly) -> str:
    """Render as an expression the CLI parser reads back to the same polynomial."""
    if p.is_zero():
        return "0"
    parts = []
    for (a, b, c), x in p.sorted_terms():
        gens = [f"{g}^{e}" if e > 1 else g for g, e in (("E2", a), ("E4", b), ("E6", c)) if e]
        body = "*".join(gens)
        if not body:
            parts.append(fmt_rational(x))
        elif x == 1:
            parts.append(body)
        elif x == -1:
            parts.append("-1*" + body)
        else:
            parts.append(f"{fmt_rational(x)}*{body}")
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def weight_of(p: GradedPoly) -> int:
    if isinstance(p, QuasiForm):
        p = p.poly
    ws = p.weights()
    if len(ws) != 1:
        if not ws:
            raise GradingError("the zero polynomial has no single weight")
        raise GradingError(f"polynomial is not weight-homogeneous (weights {sorted(ws)})")
    return ws.pop()


def depth_of(p: GradedPoly):
    if isinstance(p, QuasiForm):
        p = p.poly
    return p.e2_degree()


@dataclass(frozen=True)
class QuasiForm:
    """A homogeneous polynomial with its declared weight and depth bound."""

    poly: GradedPoly
    weight: int
    depth: int

    def __post_init__(self):
        if self.weight < 0 or self.weight % 2:
            raise GradingError(f"weight must be a nonnegative even integer, got {self.weight}")
        if self.depth < 0 or self.depth > self.weight // 2:
            raise GradingError(f"depth bound {self.depth} outside 0..{self.weight // 2}")
        if self.poly and self.poly.weights() != {self.weight}:
            raise GradingError(f"polynomial weights {sorted(self.poly.weights())} != declared {self.weight}")
        if self.poly.e2_degree() > self.depth:
            raise GradingError(f"E2-degree {self.poly.e2_degree()} exceeds depth bound {self.depth}")

    @classmethod
    def of(cls, p, weight: int | None = None) -> QuasiForm:
        """Wrap a polynomial with its exact weight and depth."""
        if isinstance(p, QuasiForm):
            return p
        p = _as_poly(p)
        if weight is None:
            weight = weight_of(p) if p else 0
        return cls(p, weight, max(depth_of(p), 0))

    @property
    def exact_depth(self):
        return depth_of(self.poly)

    def _coerce(self, other) -> QuasiForm:
        if isinstance(other, QuasiForm):
            return other
        p = _as_poly(other)
        if p is None:
            raise TypeError(f"cannot combine QuasiForm with {type(other).__name__}")
        return QuasiForm(ZERO, self.weight, 0) if not p else QuasiForm.of(p)

    def __add__(self, other):
        other = self._coerce(other)
        if not other.poly:
            return self
        if not self.poly:
            return other
        if self.weight != other.weight:
            raise GradingError(f"cannot add weights {self.weight} and {other.weight}")
        return QuasiForm(self.poly + other.poly, self.weight, max(self.depth, other.depth))

    __radd__ = __add__

    def __neg__(self):
        return QuasiForm(-self.poly, self.weight, self.depth)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuasiForm(self.poly.scale(other), self.weight, self.depth)
        other = QuasiForm.of(other)
        return QuasiForm(self.poly * other.poly, self.weight + other.weight, self.depth + other.depth)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QuasiForm):
            return self.poly == other.poly and (not self.poly or self.weight == other.weight)
        if isinstance(other, (GradedPoly, int, Fraction)):
            return self.poly == other
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def __str__(self):
        return format_poly(self.poly)


# Ramanujan: D E2 = (E2^2 - E4)/12, D E4 = (E2 E4 - E6)/3, D E6 = (E2 E6 - E4^2)/2
_DGEN = (
    (E2 * E2 - E4) / 12,
    (E2 * E4 - E6) / 3,
    (E2 * E6 - E4 * E4) / 2,
)


@lru_cache(maxsize=None)
def _derive_monomial(m: Monomial) -> GradedPoly:
    out = ZERO
    for i, e in enumerate(m):
        if e:
            rest = list(m)
            rest[i] -= 1
            out = out + _DGEN[i] * monomial(*rest, coeff=e)
    return out


@lru_cache(maxsize=1 << 14)
def derive_poly(p: GradedPoly) -> GradedPoly:
    out: dict[Monomial, Fraction] = {}
    for m, c in p._terms.items():
        for mm, x in _derive_monomial(m)._terms.items():
            out[mm] = out.get(mm, 0) + c * x
    return GradedPoly(out)


def derive(f):
    """Ramanujan derivation D = q d/dq; raises weight by 2 and depth by at most 1."""
    if isinstance(f, GradedPoly):
        return derive_poly(f)
    f = QuasiForm.of(f)
    if not f.poly:
        return QuasiForm(ZERO, f.weight + 2, 0)
    if f.weight == 0:
        return QuasiForm(ZERO, 2, 0)
    return QuasiForm(derive_poly(f.poly), f.weight + 2, min(f.depth + 1, f.weight // 2 + 1))


def derive_n(f, r: int):
    for _ in range(r):
        f = derive(f)
    return f


def to_qseries(f, order: int) -> qseries.QSeries:
    """Substitute the Eisenstein expansions into the polynomial."""
    p = _as_poly(f)
    gens = [qseries.eisenstein(h, order) for h in (2, 4, 6)]
    powers: dict[tuple[int, int], qseries.QSeries] = {}

    def power(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = qseries.QSeries(order, {0: 1}) if e == 0 else power(i, e - 1) * gens[i]
        return powers[(i, e)]

    out = qseries.QSeries(order)
    for (a, b, c), x in p._terms.items():
        out = out + qseries.scale(x, power(0, a) * power(1, b) * power(2, c))
    return out


def constant_term(f) -> Fraction:
    """Fourier coefficient at q^0: every generator has constant term 1."""
    return sum(_as_poly(f)._terms.values(), Fraction(0))
