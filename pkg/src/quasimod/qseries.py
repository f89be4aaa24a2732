"""Truncated q-expansions with exact rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .numkernel import bernoulli, fmt_rational, parse_rational, sigma_table

__all__ = ["QSeries", "eisenstein", "delta", "tau", "add", "mul", "scale", "derive"]


class QSeries:
    """Coefficients of q^0..q^order; exponents absent from ``coeffs`` are zero.

    Values are immutable. Binary operations truncate to the smaller order and
    equality compares on the common tracked range only.
    """

    __slots__ = ("order", "_coeffs")

    def __init__(self, order: int, coeffs: Mapping[int, Fraction | int] | None = None):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        clean = {}
        for e, c in (coeffs or {}).items():
            if e < 0 or e > order:
                raise ValueError(f"exponent {e} outside tracked range 0..{order}")
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        self.order = order
        self._coeffs = clean

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient q^{n} not tracked (order {self.order})")
        return self._coeffs.get(n, Fraction(0))

    def to_list(self) -> list[Fraction]:
        return [self[n] for n in range(self.order + 1)]

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend series of order {self.order} to {order}")
        return QSeries(order, {e: c for e, c in self._coeffs.items() if e <= order})

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return all(self[n] == other[n] for n in range(m + 1))

    __hash__ = None

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __repr__(self):
        terms = ", ".join(f"{e}: {fmt_rational(c)}" for e, c in sorted(self._coeffs.items()))
        return f"QSeries(order={self.order}, {{{terms}}})"

    def to_json(self) -> str:
        return json.dumps(
            {
                "order": self.order,
                "coeffs": {str(e): fmt_rational(c) for e, c in sorted(self._coeffs.items())},
            }
        )

    @classmethod
    def from_json(cls, text: str) -> QSeries:
        obj = json.loads(text)
        return cls(int(obj["order"]), {int(e): parse_rational(c) for e, c in obj["coeffs"].items()})


def add(a: QSeries, b: QSeries) -> QSeries:
    m = min(a.order, b.order)
    out = {}
    for e in set(a._coeffs) | set(b._coeffs):
        if e <= m:
            out[e] = a._coeffs.get(e, 0) + b._coeffs.get(e, 0)
    return QSeries(m, out)


def mul(a: QSeries, b: QSeries) -> QSeries:
    m = min(a.order, b.order)
    out: dict[int, Fraction] = {}
    bitems = sorted(b._coeffs.items())
    for i, x in a._coeffs.items():
        if i > m:
            continue
        for j, y in bitems:
            if i + j > m:
                break
            out[i + j] = out.get(i + j, 0) + x * y
    return QSeries(m, out)


def scale(c, a: QSeries) -> QSeries:
    c = Fraction(c)
    return QSeries(a.order, {e: c * x for e, x in a._coeffs.items()})


def derive(a: QSeries) -> QSeries:
    """q d/dq, i.e. the normalized derivative (1/2 pi i) d/dz."""
    return QSeries(a.order, {e: e * x for e, x in a._coeffs.items()})


@lru_cache(maxsize=64)
def eisenstein(h: int, order: int) -> QSeries:
    if h < 2 or h % 2:
        raise ValueError(f"Eisenstein series needs even h >= 2, got {h}")
    c = -Fraction(2 * h) / bernoulli(h)
    sig = sigma_table(h - 1, order)
    return QSeries(order, {0: 1, **{n: c * sig[n] for n in range(1, order + 1)}})


@lru_cache(maxsize=16)
def delta(order: int) -> QSeries:
    """Discriminant (E4^3 - E6^2) / 1728."""
    e4 = eisenstein(4, order)
    e6 = eisenstein(6, order)
    return scale(Fraction(1, 1728), mul(mul(e4, e4), e4) - mul(e6, e6))


def tau(n: int) -> int:
    if n < 1:
        raise ValueError(f"tau(n) needs n >= 1, got {n}")
    c = delta(n)[n]
    assert c.denominator == 1
    return c.numerator
