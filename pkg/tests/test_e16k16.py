import pytest

from exls.e16k16 import (HeadroomError, K16Elt, bracket_e16, bracket_k16, is_exceptional_pair,
                         op_A, op_iota)
from exls.grassmann import RHO, XIETA, popcount
from exls.scalars import ONE


@pytest.mark.parametrize("a,b,expected", [
    ("xi2", "eta2", "-1"),
    ("1", "t^2", "4*t"),
    ("t", "xi2", "-xi2"),
    ("xi2*xi3", "eta3", "-xi2"),
    ("t*xi2", "t*eta2", "-t^2"),
])
def test_k16_brackets(P, a, b, expected):
    assert str(bracket_k16(P("k16", a), P("k16", b))) == expected


@pytest.mark.parametrize("a,b,expected", [
    ("Dt", "t^2*Dt", "2*t*Dt"),
    ("x2*D3", "x3*D2", "x2*D2 - x3*D3"),
    ("x2*x2*dt", "d34*dt", "2*x2*D5"),
    ("d23*dt", "d34*dt", "0"),
    ("d23*dt", "d45*dt", "Dt"),
])
def test_e16_brackets(P, a, b, expected):
    assert str(bracket_e16(P("e16", a), P("e16", b))) == expected


def test_k16_coordinates_agree():
    f = K16Elt({(1, 0b000011): ONE}, XIETA)
    g = K16Elt({(0, 0b011000): ONE}, XIETA)
    assert bracket_k16(f.to(RHO), g.to(RHO)).to(XIETA) == bracket_k16(f, g)


@pytest.mark.parametrize("text,expected", [
    ("xi2*xi3*eta4", "2*xi2*xi3*eta4"),
    ("eta2*eta3*eta4", "2*eta2*eta3*eta4"),
    ("xi2*eta3*eta4", "0"),
    ("xi2*xi3", "xi2*xi3"),
])
def test_iota_values(P, text, expected):
    assert str(op_iota(P("k16", text))) == expected


def test_A_vanishes_in_low_degree():
    for n in range(3):
        for m in range(64):
            if n + popcount(m) <= 2:
                assert op_A(K16Elt({(n, m): ONE}, RHO)).is_zero()


def test_A_is_an_involution_where_nonzero():
    for n in range(3):
        for m in range(64):
            f = K16Elt({(n, m): ONE}, RHO)
            Af = op_A(f)
            if Af:
                assert op_A(Af) == f


def test_headroom(P):
    with pytest.raises(HeadroomError):
        op_A(P("k16", "t^4*xi2*xi3*xi4*eta2"), 4)
    assert str(op_A(P("k16", "t^2*xi2*xi3*xi4*eta2"), 4)) == "-1/3*t^3*xi3*xi4"


def test_exceptional_pairs():
    full = 0b111111
    assert is_exceptional_pair((0, 0b000001), (0, full ^ 0b000010)) is False  # product vanishes
    assert is_exceptional_pair((0, 0b000001), (0, 0b011110))
    assert not is_exceptional_pair((1, 0b000001), (0, 0b011110))
    assert not is_exceptional_pair((0, 0b000011), (0, 0b001100))
