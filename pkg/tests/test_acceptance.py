"""The ten acceptance criteria, run at their stated sizes.

Each test prints one line ``[PASS] <n> <title> ...`` or ``[FAIL] ...``.  The file
can also be run directly: ``python tests/test_acceptance.py``.
"""

import json
import time
from fractions import Fraction
from pathlib import Path

import pytest

from exls import embeddings as emb
from exls import repn
from exls.cli import main
from exls.e16k16 import K16Elt, bracket_e16, bracket_k16, op_iota
from exls.grassmann import XIETA, GrassElt
from exls.suites import SuiteOptions, run_suite
from exls.tables import table_check
from exls.vfalgebras import bracket_e510

GOLDEN = Path(__file__).parent / "golden"


def _xieta(n, names):
    return K16Elt.from_grass(GrassElt.mono(names, coord=XIETA), n)


def report_line(num, title, ok, detail, emit=print):
    emit(f"[{'PASS' if ok else 'FAIL'}] {num:>2} {title}: {detail}")


# -- criterion bodies: each returns (ok, detail) -------------------------------------------

def c1_table_iota():
    t0 = time.perf_counter()
    rep = table_check("iota")
    dt = time.perf_counter() - t0
    ok = rep.ok and rep.attempted == 18 and dt < 1.0
    return ok, f"{rep.passed}/{rep.attempted} rows exact in {dt:.2f}s (limit 1s)"


def c2_Psi_hom():
    t0 = time.perf_counter()
    rep = emb.verify_hom("Psi", ns=(0, 1))
    displays = 0
    ig = op_iota(_xieta(0, ("eta2", "eta3", "eta4")))
    for n in range(4):
        a = bracket_k16(op_iota(_xieta(n, ("xi2", "xi3", "eta3"))), ig)
        b = bracket_k16(op_iota(_xieta(n, ("xi3", "xi4"))), ig)
        displays += a.is_zero()
        displays += b == op_iota(_xieta(n, ("xi4", "eta2", "eta4"))) * -2
    dt = time.perf_counter() - t0
    ok = rep.ok and displays == 8 and dt < 30.0
    return ok, (f"{rep.passed}/{rep.attempted} bracket instances, {displays}/8 exceptional displays, "
                f"{dt:.1f}s (limit 30s)")


def c3_psi_hom():
    t0 = time.perf_counter()
    rep = emb.verify_hom("psi", window=5)
    named = emb.psi_regressions()
    named_ok = all(bracket_e16(a, b) == exp and bracket_e510(emb.psi(a), emb.psi(b)) == emb.psi(exp)
                   for _, a, b, exp in named)
    dt = time.perf_counter() - t0
    ok = rep.ok and named_ok and dt < 60.0
    return ok, (f"{rep.passed}/{rep.attempted} pairs at t-degree <= 5, {len(named)} named cases, "
                f"{dt:.1f}s (limit 60s)")


def c4_dint():
    t0 = time.perf_counter()
    rep = run_suite("dint")
    dt = time.perf_counter() - t0
    return rep.ok and dt < 10.0, f"{rep.passed}/{rep.attempted} identities in {dt:.1f}s (limit 10s)"


def c5_diesis():
    rep = run_suite("diesis")
    return rep.ok and rep.passed == 64, f"{rep.passed}/{rep.attempted} monomials"


def c6_A_and_iota():
    reps = [run_suite(n) for n in ("propertiesofA", "commutator", "iota-closure")]
    closure = sum("closure violation" in f.got.lower() for r in reps for f in r.failures)
    exceptional = reps[0].notes[0] if reps[0].notes else "no exceptional pairs recorded"
    ok = all(r.ok for r in reps) and closure == 0 and "exceptional" in exceptional
    counts = ", ".join(f"{r.check} {r.passed}/{r.attempted}" for r in reps)
    return ok, f"{counts}; {exceptional}; {closure} closure violations"


def c7_jacobi():
    parts, ok = [], True
    for alg in ("e510", "e44", "e16", "k16"):
        rep = run_suite(f"jacobi-{alg}", SuiteOptions(seed=7))
        trials = rep.params["trials"]
        again = run_suite(f"jacobi-{alg}", SuiteOptions(seed=7))
        ok &= rep.ok and trials >= 500 and again.to_dict()["failures"] == rep.to_dict()["failures"]
        ok &= again.attempted == rep.attempted
        parts.append(f"{alg} {rep.passed}/{rep.attempted}")
    return ok, "; ".join(parts) + " (500 triples each, seed 7, rerun identical)"


def c8_generation():
    reps = [repn.generation_check(r, 3) for r in (-1, 0, 1, 2)]
    shown = [d for r in (1, 2) for d in repn.generation_displays(r)]
    exact = sum(str(got) == str(exp) for _, got, exp in shown)
    ok = all(r.ok for r in reps) and exact == len(shown)
    return ok, (f"r=-1..2: {sum(r.passed for r in reps)}/{sum(r.attempted for r in reps)} checks; "
                f"{exact}/{len(shown)} displayed brackets byte-exact")


def c9_highest_weights():
    ok, parts = True, []
    special = {-1: repn.WeightVec(0, 0, 1, Fraction(1, 2)), 0: repn.WeightVec(0, 0, 0, -2)}
    for r in (-1, 0, 1, 2, 3):
        w = repn.weight_of(repn.v_r(r))
        exp = special.get(r) or repn.WeightVec(r, 0, 0, Fraction(-r, 2) - 2)
        ok &= w == exp and repn.annihilated_by_negative(repn.v_r(r))
        parts.append(f"v_{r}:{w}")
    for r in (1, 2, 3):
        ok &= repn.singular_absence(r).ok
    return ok, " ".join(parts) + "; no singular vectors for r=1,2,3"


def c10_corollary():
    rep = emb.corollary_subalgebra_check(4)
    dims = emb.principal_dimensions(emb.build_iota_basis(4), range(-2, 2))
    ok = rep.ok and dims == [1, 6, 16, 16]
    return ok, f"{rep.passed}/{rep.attempted} checks at window 4; dims in degrees -2..1 = {dims}"


CRITERIA = [
    (1, "iota table", c1_table_iota),
    (2, "Psi homomorphism and exceptional displays", c2_Psi_hom),
    (3, "psi homomorphism sweep", c3_psi_hom),
    (4, "homotopy operator identities", c4_dint),
    (5, "star versus sharp", c5_diesis),
    (6, "A identities, commutator, iota-image closure", c6_A_and_iota),
    (7, "super Jacobi and anticommutativity", c7_jacobi),
    (8, "generation of the module", c8_generation),
    (9, "highest weights and singular vectors", c9_highest_weights),
    (10, "embedded subalgebra and principal dimensions", c10_corollary),
]


@pytest.mark.parametrize("num,title,body", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(num, title, body, capsys):
    ok, detail = body()
    with capsys.disabled():
        report_line(num, title, ok, detail, emit=lambda s: print("\n" + s, end=" "))
    assert ok, detail


def test_cli_entry_points(capsys):
    assert main(["table", "iota"]) == 0
    assert capsys.readouterr().out == (GOLDEN / "iota.md").read_text()
    assert main(["verify", "thm-4-7", "--n", "0..2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["failures"] == []
    assert main(["verify", "diesis", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["passed"] == 64


if __name__ == "__main__":
    import sys
    failed = 0
    for num, title, body in CRITERIA:
        ok, detail = body()
        report_line(num, title, ok, detail)
        failed += not ok
    sys.exit(1 if failed else 0)
