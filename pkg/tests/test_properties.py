from hypothesis import given, settings, strategies as st

from exls.e16k16 import K16Elt, bracket_e16, bracket_k16, is_exceptional_pair, op_A, op_iota
from exls.embeddings import e16_basis, psi
from exls.grassmann import RHO, popcount
from exls.scalars import ONE, Scalar
from exls.vfalgebras import bracket_e510

coeffs = st.sampled_from([ONE, Scalar(-2), Scalar(0, 1), Scalar("1/3", 0, 1)])
k16_mono = st.tuples(st.integers(0, 3), st.integers(0, 63))
E16_BASIS = e16_basis(2)


def k16(terms):
    return K16Elt({k: c for k, c in terms}, RHO)


def parity(key):
    return popcount(key[1]) & 1


@settings(max_examples=150, deadline=None)
@given(k16_mono, k16_mono, k16_mono, coeffs)
def test_k16_super_jacobi(a, b, c, s):
    f, g, h = k16([(a, s)]), k16([(b, ONE)]), k16([(c, ONE)])
    sign = -1 if parity(a) and parity(b) else 1
    lhs = bracket_k16(f, bracket_k16(g, h))
    assert lhs == bracket_k16(bracket_k16(f, g), h) + bracket_k16(g, bracket_k16(f, h)) * sign


@settings(max_examples=150, deadline=None)
@given(st.integers(0, len(E16_BASIS) - 1), st.integers(0, len(E16_BASIS) - 1), coeffs)
def test_psi_on_basis_pairs(i, j, s):
    a, b = E16_BASIS[i] * s, E16_BASIS[j]
    assert bracket_e510(psi(a), psi(b)) == psi(bracket_e16(a, b))


@settings(max_examples=200, deadline=None)
@given(k16_mono, k16_mono)
def test_iota_compatible_with_bracket(a, b):
    f, g = k16([(a, ONE)]), k16([(b, ONE)])
    Af, Ag = op_A(f), op_A(g)
    if is_exceptional_pair(a, b):
        h = bracket_k16(Af, g) + bracket_k16(f, Ag)
    else:
        h = bracket_k16(f, g) + bracket_k16(Af, Ag)
    assert bracket_k16(op_iota(f), op_iota(g)) == op_iota(h)
