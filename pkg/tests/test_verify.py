from latdual import fixtures as fx
from latdual.corpus import CorpusConfig, Subject
from latdual.verify import ORDER, SUITES, Check, run_suites, verify_reflection


def test_check_reports_smallest_failure():
    c = Check("s", "c")
    c.add(Subject("P3.1", None, 5), False, (1, 2))
    c.add(Subject("P2.0", None, 3), True)
    c.add(Subject("P2.1", None, 3), False, (0,))
    c.add(Subject("P1.0", None, 4), False, (9,))
    r = c.record()
    assert (r.verdict, r.subjects, r.failures, r.subject, r.witness) == ("fail", 4, 3, "P2.1", "(0,)")


def test_info_checks_never_fail():
    c = Check("s", "c", info=True)
    c.subjects = 2
    c.note(Subject("B", None, 2), "w")
    assert c.record().verdict == "info" and c.record().subject == "B"


def test_every_suite_has_a_statement():
    assert set(ORDER) == set(SUITES)
    assert all(SUITES[s].statement for s in ORDER)


def test_empty_corpus_gives_empty_report():
    assert run_suites(CorpusConfig(max_poset=0)) == []
    assert verify_reflection(CorpusConfig(max_poset=0)) == []


def test_reflection_on_named_corpus():
    lats = [(n, fx.LATTICES[n]) for n in ("C2", "C3", "B2", "L5")]
    sps = [(n, fx.SPACES[n]) for n in ("D1", "D2", "D3")]
    recs = verify_reflection(CorpusConfig(), lats, sps)
    assert recs and all(r.verdict != "fail" for r in recs)
    logged = [r for r in recs if r.check == "non-closed-subfit-excluded"]
    # C3 -> C2 sending m to 1 is not closed subfit and is logged, not checked
    assert logged[0].failures > 0 and logged[0].witness is not None


def test_determinism():
    cfg = CorpusConfig(max_poset=3, max_space_points=3, random_trials=3, seed=5)
    a = [r[:7] for r in run_suites(cfg)]
    b = [r[:7] for r in run_suites(cfg)]
    assert a == b and all(r[4] != "fail" for r in a)


def test_unknown_suite():
    import pytest
    with pytest.raises(KeyError):
        run_suites(CorpusConfig(), "nope")
