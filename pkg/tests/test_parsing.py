import random

import pytest

from exls.parsing import ParseError, parse_element
from exls.sampling import SAMPLERS


@pytest.mark.parametrize("alg", ["e510", "e44", "e16", "k16"])
@pytest.mark.parametrize("seed", range(15))
def test_printed_elements_parse_back(alg, seed):
    rng = random.Random(seed)
    for parity in (0, 1):
        x = SAMPLERS[alg](rng, parity)
        assert parse_element(alg, str(x)) == x


@pytest.mark.parametrize("alg,text", [
    ("e510", "x1*d23 + x2*d13"),
    ("e510", "x1*D1 - x2*D2"),
    ("e44", "x2*D1 + x1*dx1"),
    ("e16", "t*Dt + t^2*x2*D3 + x2*x3*dt + d23*dt"),
    ("k16", "1/2*r2*t*xi2*eta3 - i*xi4"),
    ("k16", "t^2*rho1*rho2 + (1+i)*rho6"),
])
def test_roundtrip_examples(alg, text):
    x = parse_element(alg, text)
    assert parse_element(alg, str(x)) == x


def test_truncation_marker():
    x = parse_element("k16", "t + t^5 + O(t^3)")
    assert str(x) == "t + O(t^3)"


def test_unary_minus():
    assert parse_element("e510", "-d12 + D1") == parse_element("e510", "D1 - d12")


@pytest.mark.parametrize("alg,text,pos", [
    ("e510", "d12+", 4),
    ("e510", "x1*d23", 0),           # not closed
    ("e510", "x1*D1", 0),            # not divergence free
    ("e510", "(1+r2*d12", None),
    ("k16", "xi2*foo", 4),
    ("e16", "t*Dt + xi2", 7),
    ("k16", "xi2 + rho1", 6),
])
def test_errors_carry_positions(alg, text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(alg, text)
    assert "at position" in str(info.value)
    if pos is not None:
        assert info.value.pos == pos


def test_unknown_algebra():
    with pytest.raises((ParseError, ValueError)):
        parse_element("e99", "D1")
