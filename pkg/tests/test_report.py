import json

from exls.report import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, VerifyReport, merge_reports


def test_counts_and_exit_codes():
    rep = VerifyReport("demo", {"n": 2})
    rep.record("a", True)
    assert rep.finish().exit_code == EXIT_PASS
    rep.record("b", False, "1", "2")
    assert rep.passed + len(rep.failures) == rep.attempted == 2
    assert rep.exit_code == EXIT_FAIL
    assert "FAILED b" in rep.human()
    assert "expected: 1" in rep.human()


def test_inconclusive():
    rep = VerifyReport("demo")
    rep.inconclusive = True
    assert rep.exit_code == EXIT_INCONCLUSIVE
    assert not rep.ok


def test_json_schema():
    rep = VerifyReport("demo", {"seed": 1})
    rep.record("x", False, "e", "g")
    d = json.loads(rep.finish().to_json())
    assert set(d) == {"check", "params", "attempted", "passed", "failures", "notes", "inconclusive",
                      "wall_time"}
    assert d["failures"] == [{"inputs": "x", "expected": "e", "got": "g"}]


def test_merge_keeps_order_and_time():
    a, b = VerifyReport("a"), VerifyReport("b")
    a.record("1", True)
    b.record("2", False)
    a.wall_time, b.wall_time = 1.0, 2.0
    m = merge_reports("ab", [a, b])
    assert (m.attempted, m.passed) == (2, 1)
    assert m.failures[0].inputs == "[b] 2"
    assert m.wall_time == 3.0
