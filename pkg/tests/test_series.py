import pytest

from exls.series import RING_T, RING_X4, RING_X5, VariableMismatch, ps_int_t


def test_truncated_power():
    t = RING_T.var("t")
    p = (1 + t).with_trunc(4)
    q = p * p * p * p
    assert str(q) == "1 + 4*t + 6*t^2 + 4*t^3 + O(t^4)"
    assert q.trunc == 4


def test_truncated_equality_uses_common_order():
    t = RING_T.var("t")
    assert (1 + t).with_trunc(1) == RING_T.one()
    assert 1 + t != RING_T.one()


def test_partial_and_integral():
    t = RING_T.var("t")
    f = 3 * t * t + 1
    assert f.partial("t") == 6 * t
    assert ps_int_t(f).partial("t") == f


def test_mixed_rings_rejected():
    with pytest.raises(VariableMismatch):
        RING_X4.var("x1") + RING_X5.var("x1")


def test_multivariate_product():
    x1, x2 = RING_X5.var("x1"), RING_X5.var("x2")
    assert str((x1 + x2) * (x1 - x2)) in ("x1^2 - x2^2", "-x2^2 + x1^2")
    assert ((x1 + x2) * (x1 - x2)).is_homogeneous()
