from fractions import Fraction
from math import factorial

import pytest
import sympy

from quasimod.brackets import BracketParams, rc_coeffs
from quasimod.coeffsolver import (
    CoefficientDiscrepancy,
    ConstraintIndex,
    constraint_matrix,
    constraint_set,
    nullspace,
    pi1,
    pi2,
    pi_polynomial_check,
    series_p1,
    series_p2,
    solve_and_confirm,
)
from quasimod.linalg import rank, solve


def brute_constraint_set(s, t, n):
    return {
        (u, v, a, b)
        for u in range(s + 1)
        for v in range(t + 1)
        for a in range(n + s + t + 2)
        for b in range(n + s + t + 2)
        if a + b <= u + v + n - s - t - 1
    }


def test_constraint_set_examples():
    assert constraint_set(0, 0, 1) == [ConstraintIndex(0, 0, 0, 0)]
    assert constraint_set(0, 0, 0) == []
    # alpha + beta <= u + v - 2 leaves only u = v = 1
    assert constraint_set(1, 1, 1) == [ConstraintIndex(1, 1, 0, 0)]
    assert set(constraint_set(1, 1, 2)) == {(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 0, 1)}


@pytest.mark.parametrize("stn", [(s, t, n) for s in range(4) for t in range(4) for n in range(6)])
def test_constraint_set_enumeration(stn):
    assert set(constraint_set(*stn)) == brute_constraint_set(*stn)


def test_constraint_matrix_examples():
    assert constraint_matrix(2, 2, 0, 0, 1) == [[2, 2]]
    assert constraint_matrix(2, 12, 1, 0, 1) == [[factorial(12), factorial(11)]]


def test_nullspace_examples():
    assert nullspace([[1, 0], [0, 1]]) == []
    assert len(nullspace([[0, 0]])) == 2
    (v,) = nullspace([[factorial(12), factorial(11)]])
    assert v[0] * -12 == v[1] * 1


@pytest.mark.parametrize("seed", range(12))
def test_nullspace_against_sympy(seed):
    m = sympy.randMatrix(4, 7, -5, 5, seed=seed)
    m[3, :] = m[0, :] * 2 - m[1, :]
    mine = nullspace(m.tolist())
    ref = m.nullspace()
    assert len(mine) == len(ref)
    assert rank([list(v) for v in mine] + [[Fraction(str(x)) for x in r] for r in ref]) == len(ref)
    for v in mine:
        assert all(sum(Fraction(int(a)) * b for a, b in zip(row, v)) == 0 for row in m.tolist())


def test_solve_inconsistent():
    assert solve([[1, 0], [2, 0]], [1, 1]) is None
    assert solve([[1, 0], [0, 1]], [3, 4]) == [3, 4]


def test_solve_and_confirm_examples():
    assert solve_and_confirm(2, 2, 1, 1, 4) == (1, -16, 36, -16, 1)
    assert solve_and_confirm(2, 12, 1, 0, 1) == (1, -12)
    v = solve_and_confirm(4, 6, 0, 0, 1)
    assert v[0] * -6 == v[1] * 4


def test_closed_form_satisfies_every_row():
    for k in range(2, 13, 2):
        for l in range(2, 13, 2):
            for s in range(k // 2 + 1):
                for t in range(l // 2 + 1):
                    for n in range(1, 6):
                        a = rc_coeffs(BracketParams(n, k, s, l, t))
                        for row in constraint_matrix(k, l, s, t, n):
                            assert sum(x * y for x, y in zip(row, a)) == 0


def test_solve_and_confirm_needs_positive_n():
    with pytest.raises(ValueError):
        solve_and_confirm(4, 4, 0, 0, 0)


def test_pi_examples():
    assert pi1(6, 2, 2, 0) == [1]
    assert pi2(8, 1, 1, 0) == [1]
    assert pi_polynomial_check(6, 8, 2, 1, 2, 1, 0, 0, order=10)
    # (s,t,0,0): P1 P2 is a nonzero constant
    assert pi_polynomial_check(4, 4, 1, 1, 1, 1, 0, 0, order=8, n=1)


def test_pi_product_degree_exact():
    k, l, s, t = 8, 6, 3, 2
    for n in range(1, 6):
        for u, v, a, b in constraint_set(s, t, n):
            assert pi_polynomial_check(k, l, s, t, u, v, a, b, order=n + 15, n=n)


def test_pi_check_detects_a_wrong_factor():
    # P1 is not Pi2-shaped: swapping the roles breaks the identity
    p1 = series_p1(6, 2, 0, 1, 10)
    assert p1 != series_p2(6, 2, 0, 1, 10)
