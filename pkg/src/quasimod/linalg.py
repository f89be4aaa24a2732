"""Fraction-exact Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = ["rref", "nullspace", "solve", "rank"]

Matrix = Sequence[Sequence]


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are chosen as the first nonzero entry in column order.
    """
    rows = [[Fraction(x) for x in row] for row in m]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def _normalize_row(row):
    # divide an integer row by its content; purely to keep entries small
    ints = [int(x) for x in row if x]
    if not ints or any(Fraction(x).denominator != 1 for x in row):
        return row
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [Fraction(x) / g for x in row]


def nullspace(m: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel {v : m v = 0}."""
    if ncols is None:
        if not m:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(m[0])
    red, pivots = rref([_normalize_row(row) for row in m]) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(columns: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coordinates x with sum_j x_j columns[j] == target, or None.

    When the columns are dependent the free coordinates are set to zero.
    """
    n = len(columns)
    nrows = len(target)
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(nrows)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x
