from fractions import Fraction
from math import comb

import pytest

from exls.repn import (NotAnEigenvector, SliceWindowError, WeightVec, annihilated_by_negative,
                       closed_two_forms_dim, enumerate_slice, generation_check,
                       generation_displays, negative_basis, singular_absence, v_r, weight_of)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_highest_weight(r):
    assert weight_of(v_r(r)) == WeightVec(r, 0, 0, Fraction(-r, 2) - 2)
    assert str(weight_of(v_r(2))) == "(2,0,0; -3)"


def test_special_weights():
    assert weight_of(v_r(-1)) == WeightVec(0, 0, 1, Fraction(1, 2))
    assert weight_of(v_r(0)) == WeightVec(0, 0, 0, -2)


@pytest.mark.parametrize("r", [-1, 0, 1, 2, 3])
def test_annihilated(r):
    assert annihilated_by_negative(v_r(r))


def test_not_annihilated(P):
    assert not annihilated_by_negative(P("e510", "x1*D2"))


def test_weight_requires_eigenvector(P):
    with pytest.raises(NotAnEigenvector):
        weight_of(P("e510", "x2*D1 + D2"))


def test_negative_basis_size():
    assert len(negative_basis()) == 7


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_slice_dimensions(r):
    assert enumerate_slice(r, 2 * r - 2).dim == comb(r + 3, 3)
    assert enumerate_slice(r, 2 * r - 1).dim == closed_two_forms_dim(r)


def test_slice_window():
    with pytest.raises(SliceWindowError):
        enumerate_slice(2, 20, 3)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_no_singular_vectors(r):
    assert singular_absence(r).ok


@pytest.mark.parametrize("r", [-1, 0, 1])
def test_generation(r):
    assert generation_check(r, 3).ok


def test_generation_displays_match():
    shown = generation_displays(1)
    assert all(str(got) == str(exp) for _, got, exp in shown)
    assert ("[x1*d23 + x2*d13, v_1]", "-2*x2*d23") in [(lab, str(got)) for lab, got, _ in shown]
