import random

import pytest

from exls.e16k16 import bracket_e16, op_iota
from exls.embeddings import (NotInG0, NotInImage, Psi, build_iota_basis, corollary_basis,
                             e16_basis, principal_dimensions, psi, psi_inverse, psi_regressions,
                             psi_with_provenance, table1_rows, table2_rows)
from exls.sampling import rand_e16
from exls.vfalgebras import bracket_e44, bracket_e510


@pytest.mark.parametrize("seed", range(40))
def test_psi_preserves_random_brackets(seed):
    rng = random.Random(seed)
    a, b = rand_e16(rng, rng.randint(0, 1), 2), rand_e16(rng, rng.randint(0, 1), 2)
    assert bracket_e510(psi(a), psi(b)) == psi(bracket_e16(a, b))


@pytest.mark.parametrize("name,a,b,expected", psi_regressions(), ids=[r[0] for r in psi_regressions()])
def test_psi_named_cases(name, a, b, expected):
    assert bracket_e16(a, b) == expected
    assert bracket_e510(psi(a), psi(b)) == psi(expected)


def test_psi_of_grading_element(P):
    img = psi_with_provenance(P("e16", "t*Dt"))
    assert str(img.elt) == "x1*D1 - 1/4*x2*D2 - 1/4*x3*D3 - 1/4*x4*D4 - 1/4*x5*D5"


def test_psi_inverse_roundtrip():
    for b in e16_basis(2):
        assert psi_inverse(psi(b)) == b


def test_psi_inverse_rejects_other_degrees(P):
    with pytest.raises(NotInG0):
        psi_inverse(P("e510", "x2^2*D1"))


def test_iota_basis_dimensions():
    basis = build_iota_basis(2)
    assert basis.rank == len(e16_basis(2)) == 96
    assert principal_dimensions(basis, range(-2, 2)) == [1, 6, 16, 16]
    assert basis.vanishing_relations_ok()


def test_Psi_rejects_elements_outside_the_image(P):
    with pytest.raises(NotInImage):
        Psi(P("k16", "xi2*eta3*eta4"))


@pytest.mark.parametrize("text,expected", [
    ("1", "D1"),
    ("eta2*eta3*eta4", "-r2*dx1"),
    ("xi2*xi3*eta4", "-r2*x4^2*dx1"),
    ("xi2*eta3", "x3*D2"),
])
def test_Psi_values(P, text, expected):
    assert str(Psi(op_iota(P("k16", text)))) == expected


def test_Psi_preserves_a_bracket(P):
    f, g = op_iota(P("k16", "t*xi2*xi3")), op_iota(P("k16", "eta2*eta3*eta4"))
    from exls.e16k16 import bracket_k16
    assert bracket_e44(Psi(f), Psi(g)) == Psi(bracket_k16(f, g))


def test_table_row_counts():
    assert len(table1_rows()) == 18
    assert len(table2_rows()) == 33


def test_corollary_basis_sizes():
    V0, V1 = corollary_basis()
    assert (len(V0), len(V1)) == (16, 16)
