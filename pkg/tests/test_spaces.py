from fractions import Fraction

import pytest
from hypothesis import given, settings

from quasimod.brackets import bracket
from quasimod.ring import DELTA, E2, E4, E6, ONE, GradingError, QuasiForm, constant_term, derive
from quasimod.spaces import (
    Cusp,
    DerivedCusp,
    DerivedModular,
    Line,
    Modular,
    basis_cusp,
    basis_modular,
    basis_quasimodular,
    decompose,
    membership,
)

from strategies import forms


def d(p, j=1):
    for _ in range(j):
        p = derive(p)
    return p


def test_basis_modular():
    assert basis_modular(12) == [E4**3, E6**2]
    assert basis_modular(2) == []
    assert basis_modular(0) == [ONE]
    assert basis_modular(-4) == []
    with pytest.raises(ValueError):
        basis_modular(3)


def test_modular_dimensions_match_classical_formula():
    def dim(w):
        if w % 12 == 2:
            return w // 12
        return w // 12 + 1

    assert all(len(basis_modular(w)) == dim(w) for w in range(0, 120, 2))


def test_basis_cusp():
    assert basis_cusp(12) == [DELTA]
    assert basis_cusp(10) == []
    assert basis_cusp(16) == [DELTA * E4]
    assert all(constant_term(b) == 0 for w in range(12, 60, 2) for b in basis_cusp(w))


def test_basis_quasimodular_counts():
    assert len(basis_quasimodular(12, 6)) == 7
    assert len(basis_quasimodular(4, 0)) == 1


def test_decompose_examples():
    dec = decompose(E2 * E2)
    assert dec.parts == [(0, E4)] and dec.line == 12
    assert dec.reassemble() == E4 + d(E2) * 12
    assert decompose(E4).parts == [(0, E4)]
    dec = decompose(E2)
    assert dec.parts == [] and dec.line == 1


@settings(max_examples=80, deadline=None)
@given(forms(max_weight=24))
def test_decompose_reassembles(f):
    dec = decompose(f)
    assert dec.reassemble() == f.poly
    for j, m in dec.parts:
        assert m.e2_degree() == 0 and m.weights() == {f.weight - 2 * j}


def test_membership_examples():
    assert membership(bracket(E2, E2, 2), [Line(QuasiForm.of(d(E4, 2)))]) is not None
    coords = membership(bracket(E2, E2, 6), [Cusp(16), DerivedCusp(2, 12)])
    assert coords is not None and len(coords) == 2
    assert membership(E4, [Cusp(4)]) is None


def test_membership_coordinates_are_exact():
    f = E4 * 3 + d(E2) * Fraction(-2, 7)
    assert membership(f, [Modular(4), Line(QuasiForm.of(d(E2)))]) == [3, Fraction(-2, 7)]


def test_membership_weight_mismatch():
    with pytest.raises(GradingError):
        membership(E4, [Modular(6)])
    with pytest.raises(GradingError):
        membership(E4, [Modular(4), DerivedModular(1, 4)])


def test_membership_rejects_out_of_span():
    assert membership(d(E6), [Cusp(8), Line(QuasiForm.of(d(E2, 3)))]) is None
    assert membership(E2 * E6, [Modular(8), DerivedModular(1, 6)]) == [1, 2]
    assert membership(E2 * E6, [Modular(8)]) is None
    assert membership(E2 * E2 * E4, [Modular(8), DerivedModular(1, 6)]) is None
