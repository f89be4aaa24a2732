from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quasimod.depth import check_derqm, check_first_derivative_law, check_qsds, component, components
from quasimod.ring import DELTA, E2, E4, E6, ONE, ZERO, QuasiForm, derive
from quasimod.spaces import basis_modular, basis_quasimodular

from strategies import forms


def test_components_examples():
    c = components(E2)
    assert c.parts == (E2, ONE)
    c = components(E2 * E2)
    assert c.parts == (E2 * E2, E2 * 2, ONE)
    assert components(DELTA).parts == (DELTA,)
    assert c[5] == ZERO


def test_first_derivative_law_examples():
    assert component(derive(E2), 1) == E2 / 6
    assert component(derive(E2), 1) == derive(ONE) + E2 * Fraction(2, 12)
    for f in (E2, DELTA, E2 * E4):
        assert check_first_derivative_law(f)


def test_derqm_examples():
    assert check_derqm(E2, 1)
    assert check_derqm(DELTA, 3)
    assert check_derqm(E2 * E2, 2)


def test_qsds_examples():
    assert component(derive(E4), 1) == E4 / 3
    assert check_qsds(E4, 1)
    assert check_qsds(DELTA, 2)
    assert check_qsds(QuasiForm(ONE, 0, 0), 1)
    with pytest.raises(ValueError):
        check_qsds(E2, 1)


def test_first_derivative_law_rejects_a_wrong_constant():
    # the law is sharp: shifting the (k-i+1)/12 factor breaks it
    f = E2 * E4
    i = 1
    wrong = derive(component(f, i)) + component(f, i - 1) * Fraction(6 - i + 2, 12)
    assert component(derive(f), i) != wrong


@settings(max_examples=60, deadline=None)
@given(forms(), forms())
def test_product_law(f, g):
    h = f.poly * g.poly
    for i in range(f.weight // 2 + g.weight // 2 + 1):
        expected = ZERO
        for j in range(i + 1):
            expected = expected + component(f.poly, j) * component(g.poly, i - j)
        assert component(h, i) == expected


@given(forms(max_weight=24))
def test_components_vanish_past_half_weight(f):
    assert component(f.poly, f.weight // 2 + 1).is_zero()
    for i, part in enumerate(components(f).parts):
        if part:
            assert part.weights() == {f.weight - 2 * i}
            assert part.e2_degree() <= f.depth - i


def test_derqm_on_bases():
    for k in range(2, 17, 2):
        for b in basis_quasimodular(k, k // 2):
            assert check_first_derivative_law(b)
            for r in range(5):
                assert check_derqm(b, r), (b, r)


def test_qsds_on_modular_bases():
    for w in range(0, 17, 2):
        for g in basis_modular(w):
            for s in range(1, 5):
                assert check_qsds(QuasiForm(g, w, 0), s)
