import itertools
import random

import pytest

from exls.formcalc import form_d, vf_div
from exls.sampling import rand_e44, rand_e510
from exls.vfalgebras import bracket_e44, bracket_e510, eps_quintuple


def perm_sign(p):
    p, s = list(p), 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


@pytest.mark.parametrize("i,j,k,l", [q for q in itertools.permutations(range(1, 6), 4)])
def test_eps_against_permutation_sign(i, j, k, l):
    sign, m = eps_quintuple(i, j, k, l)
    (rest,) = set(range(1, 6)) - {i, j, k, l}
    assert m == rest
    assert sign == perm_sign([x - 1 for x in (i, j, k, l, rest)])


def test_eps_repeated_index():
    assert eps_quintuple(1, 2, 2, 3)[0] == 0


@pytest.mark.parametrize("a,b,expected", [
    ("d12", "d34", "D5"),
    ("d12", "d35", "-D4"),
    ("d13", "d24", "-D5"),
    ("d12", "d12", "0"),
    ("x1*D1 - x2*D2", "d12", "0"),
    ("D1", "x1^2*D2", "2*x1*D2"),
])
def test_e510_brackets(P, a, b, expected):
    assert str(bracket_e510(P("e510", a), P("e510", b))) == expected


@pytest.mark.parametrize("a,b,expected", [
    ("dx1", "dx1", "0"),
    ("x1*D1", "dx2", "-1/2*dx2"),
    ("x1*D1", "dx1", "1/2*dx1"),
])
def test_e44_brackets(P, a, b, expected):
    assert str(bracket_e44(P("e44", a), P("e44", b))) == expected


@pytest.mark.parametrize("seed", range(10))
def test_e510_bracket_stays_in_algebra(seed):
    rng = random.Random(seed)
    for pa, pb in itertools.product((0, 1), repeat=2):
        c = bracket_e510(rand_e510(rng, pa), rand_e510(rng, pb))
        assert vf_div(c.even).is_zero()
        assert form_d(c.odd).is_zero()


@pytest.mark.parametrize("seed", range(10))
def test_e44_anticommutativity(seed):
    rng = random.Random(seed)
    for pa, pb in itertools.product((0, 1), repeat=2):
        a, b = rand_e44(rng, pa), rand_e44(rng, pb)
        s = 1 if pa and pb else -1
        assert bracket_e44(a, b) == bracket_e44(b, a) * s
