import random

import pytest

from exls.formcalc import (DiffForm, EulerWeightZero, VectorField, form_contract, form_d,
                           form_from_vf, form_lie, form_wedge, int_op, vf_apply, vf_bracket, vf_div,
                           vf_from_form)
from exls.sampling import _rand_form, rand_poly
from exls.series import RING_X4, RING_X5

SEEDS = range(25)


def rand_field(rng, ring):
    return VectorField(ring, {j: rand_poly(rng, ring, 2, 2) for j in rng.sample(range(ring.nvars), 2)})


@pytest.mark.parametrize("seed", SEEDS)
def test_d_squared(seed):
    rng = random.Random(seed)
    for k in range(4):
        w = _rand_form(rng, RING_X5, k, 3, 3)
        assert form_d(form_d(w)).is_zero()


@pytest.mark.parametrize("seed", SEEDS)
def test_d_is_a_graded_derivation(seed):
    rng = random.Random(seed)
    a, b = _rand_form(rng, RING_X4, 1, 2, 2), _rand_form(rng, RING_X4, 2, 2, 2)
    assert form_d(form_wedge(a, b)) == form_wedge(form_d(a), b) - form_wedge(a, form_d(b))


@pytest.mark.parametrize("seed", SEEDS)
def test_lie_derivative_on_one_forms_in_coordinates(seed):
    # (L_X w)_i = X(w_i) + sum_j w_j d_i X_j
    rng = random.Random(seed)
    X, w = rand_field(rng, RING_X4), _rand_form(rng, RING_X4, 1, 2, 3)
    expected = {}
    for i in range(4):
        c = vf_apply(X, w.coefficient((i,)))
        for j in range(4):
            c = c + w.coefficient((j,)) * X.component(j).partial(i)
        expected[(i,)] = c
    assert form_lie(X, w) == DiffForm(RING_X4, 1, expected)


@pytest.mark.parametrize("seed", SEEDS)
def test_lie_derivative_is_a_representation(seed):
    rng = random.Random(seed)
    X, Y = rand_field(rng, RING_X4), rand_field(rng, RING_X4)
    w = _rand_form(rng, RING_X4, 2, 2, 2)
    lhs = form_lie(vf_bracket(X, Y), w)
    assert lhs == form_lie(X, form_lie(Y, w)) - form_lie(Y, form_lie(X, w))


@pytest.mark.parametrize("seed", SEEDS)
def test_divergence_through_volume_form(seed):
    rng = random.Random(seed)
    X = rand_field(rng, RING_X5)
    top = form_d(form_from_vf(X))
    assert top.coefficient((0, 1, 2, 3, 4)) == vf_div(X)
    assert vf_from_form(form_from_vf(X)) == X


@pytest.mark.parametrize("seed", SEEDS)
def test_homotopy_formula(seed):
    rng = random.Random(seed)
    for k in range(1, 4):
        w = _rand_form(rng, RING_X5, k, 3, 3)
        if any(m == 0 for m in w.homogeneous_parts()):
            continue
        assert form_d(int_op(w)) + int_op(form_d(w)) == w
        assert int_op(int_op(w)).is_zero()


def test_contraction_anticommutes():
    X = VectorField(RING_X4, {0: RING_X4.one(), 2: RING_X4.var("x2")})
    Y = VectorField(RING_X4, {1: RING_X4.var("x3")})
    w = DiffForm(RING_X4, 2, {(0, 1): RING_X4.one(), (1, 2): RING_X4.var("x1")})
    assert form_contract(X, form_contract(Y, w)) == -form_contract(Y, form_contract(X, w))


def test_int_on_functions():
    assert int_op(DiffForm.function(RING_X5.var("x1"))).is_zero()
    with pytest.raises(EulerWeightZero):
        int_op(DiffForm.function(RING_X5.one()))


def test_index_order_sign():
    p = RING_X4.one()
    assert DiffForm(RING_X4, 2, {(1, 0): p}) == -DiffForm(RING_X4, 2, {(0, 1): p})
    assert DiffForm(RING_X4, 2, {(1, 1): p}).is_zero()
