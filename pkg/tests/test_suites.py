import pytest

from exls.suites import ALIASES, SUITES, SuiteOptions, resolve_suite, run_suite


def test_aliases_resolve():
    for alias, target in ALIASES.items():
        assert resolve_suite(alias) == target
    with pytest.raises(KeyError):
        resolve_suite("nothing")


@pytest.mark.parametrize("name", ["diesis", "tables", "corollary", "jacobi-e44", "jacobi-e16"])
def test_quick_suites_pass(name):
    rep = run_suite(name, SuiteOptions(quick=True, trials=40))
    assert rep.ok, rep.human()
    assert rep.attempted > 0


def test_jacobi_depends_on_seed_only():
    a = run_suite("jacobi-e510", SuiteOptions(seed=3, trials=20))
    b = run_suite("jacobi-e510", SuiteOptions(seed=3, trials=20))
    c = run_suite("jacobi-e510", SuiteOptions(seed=4, trials=20))
    assert [f.inputs for f in a.failures] == [f.inputs for f in b.failures] == []
    assert a.attempted == b.attempted == c.attempted


def test_every_suite_registered():
    assert set(SUITES) >= {"dint", "diesis", "propertiesofA", "commutator", "iota-closure", "psi-hom",
                           "Psi-hom", "corollary", "generation", "singular-vectors"}


def test_all_quick_has_no_failures():
    rep = run_suite("all", SuiteOptions(quick=True))
    assert rep.failures == [] and not rep.inconclusive
    assert rep.passed == rep.attempted > 0
