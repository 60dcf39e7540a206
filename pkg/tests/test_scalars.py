from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from exls.scalars import I, ONE, ZERO, Scalar, parse_scalar

R2 = Scalar(0, 1)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.builds(Scalar, small, small, small, small)


def test_generators():
    assert R2 * R2 == 2
    assert I * I == -1
    assert (I * R2) * (I * R2) == -2


def test_inverse_of_unit():
    assert (1 + R2).inv() == R2 - 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_str_and_parse():
    x = Scalar(Fraction(1, 3), Fraction(1, 3))
    assert str(x) == "1/3 + 1/3*r2"
    assert parse_scalar("(1+r2)/3") == x
    assert parse_scalar(str(Scalar(0, "1/2", 0, -1))) == Scalar(0, "1/2", 0, -1)


def test_compare_with_int():
    assert Scalar(3) == 3
    assert ONE != I


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@given(scalars)
def test_inverse(a):
    if a:
        assert a * a.inv() == ONE


@given(scalars)
def test_str_roundtrip(a):
    assert parse_scalar(str(a)) == a
