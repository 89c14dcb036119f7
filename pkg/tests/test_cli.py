import io
import json
import pathlib
import subprocess
import sys

import pytest

from latdual import docs
from latdual import fixtures as fx
from latdual.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(*argv, stdin=None):
    out = io.StringIO()
    if stdin is not None:
        old, sys.stdin = sys.stdin, io.StringIO(stdin)
    try:
        code = main(list(argv), out)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue()


@pytest.mark.parametrize("argv,golden,code", [
    (["check", "subfit", "@C3"], "check_subfit_C3.txt", 1),
    (["check", "normal", "@C3"], "check_normal_C3.txt", 0),
    (["check", "t1", "@D2"], "check_t1_D2.txt", 0),
    (["check", "subfit", "@C3", "--format", "json"], "check_subfit_C3.json", 1),
    (["functor", "wallman", "@C3"], "functor_wallman_C3.txt", 0),
    (["functor", "wallman", "@L5"], "functor_wallman_L5.txt", 0),
    (["functor", "stone", "@C3"], "functor_stone_C3.txt", 0),
    (["functor", "beta", "@X3"], "functor_beta_X3.txt", 0),
    (["verify", "--suite", "all", "--max-poset", "0"], "verify_all_max_poset_0.txt", 0),
    (["verify", "--suite", "charsubfitmorphism"], "verify_charsubfitmorphism.txt", 0),
    (["enumerate", "topologies", "3"], "enumerate_topologies_3.txt", 0),
    (["enumerate", "posets", "0"], "enumerate_posets_0.txt", 0),
])
def test_golden(argv, golden, code):
    got_code, got = run(*argv)
    assert got_code == code
    assert got == (GOLDEN / golden).read_text(encoding="utf-8")


def test_check_witness_is_reported():
    _, out = run("check", "subfit", "@C3")
    rec = docs.decode_report(docs.parse_doc(out))[0]
    assert rec == {"predicate": "subfit", "subject": docs.encode_lattice(fx.C3).id,
                   "verdict": "false", "witness": "(0,1)"}


def test_functor_outputs_match_fixtures():
    _, out = run("functor", "stone", "@C3")
    d = docs.parse_doc(out)
    assert d.id == docs.encode_space(fx.SIERPINSKI).id
    assert dict(d.meta) == {"functor": "stone", "input": docs.encode_lattice(fx.C3).id}
    _, out = run("functor", "wallman", "@L5")
    assert docs.decode(docs.parse_doc(out)) == fx.D2


def test_functor_chain_through_files(tmp_path):
    _, eps = run("functor", "epsilon", "@C3")
    p = tmp_path / "eps.txt"
    p.write_text(eps, encoding="utf-8")
    code, out = run("functor", "pistar", str(p))
    assert code == 0
    m = docs.decode(docs.parse_doc(out))
    assert m.map == (0,)
    code, out = run("functor", "fi", "-", stdin=eps)
    assert code == 0 and docs.decode(docs.parse_doc(out)).map == (0,)


def test_eta_and_kf():
    code, out = run("functor", "eta", "@D2")
    assert code == 0
    d = docs.parse_doc(out)
    code, out = run("functor", "kf", "-", stdin=docs.print_doc(d))
    assert code == 0
    assert docs.parse_doc(out).kind == "morphism"


def test_sobrify():
    code, out = run("functor", "sobrify", "@X3")
    assert code == 0 and docs.decode(docs.parse_doc(out)).points == 3


def test_error_exit_codes(tmp_path):
    assert run("check", "subfit", "@D2")[0] == 2          # kind mismatch
    assert run("check", "nonsense", "@C3")[0] == 2
    assert run("check", "subfit", "@NOPE")[0] == 2
    assert run("check", "subfit", str(tmp_path / "missing"))[0] == 2
    assert run("functor", "wallman", "@D2")[0] == 2
    assert run("functor", "eta", "@S2")[0] == 2           # not T1
    bad = tmp_path / "bad.txt"
    bad.write_text("kind: lattice\nn=3\ncovers: 0 1\n", encoding="utf-8")
    assert run("check", "subfit", str(bad))[0] == 2       # not a lattice
    assert run("check", "subfit", "-", stdin="garbage")[0] == 2
    assert run("enumerate", "posets", "9")[0] == 2        # SizeBound


def test_morphism_checks(tmp_path):
    from latdual.order import validate_morphism
    d = docs.encode_morphism(validate_morphism(fx.C3, fx.C2, (0, 1, 1)))
    code, out = run("check", "closed-subfit", "-", stdin=docs.print_doc(d))
    assert code == 1
    assert docs.decode_report(docs.parse_doc(out))[0]["witness"] == "(1,0)"
    assert run("functor", "pistar", "-", stdin=docs.print_doc(d))[0] == 2


def test_enumerate_counts():
    for kind, n, labeled, unlabeled in [("topologies", 4, 355, 33), ("posets", 3, 19, 5),
                                        ("lattices", 2, 3, 2), ("posets", 0, 1, 1)]:
        code, out = run("enumerate", kind, str(n))
        rec = docs.decode_report(docs.parse_stream(out)[-1])[0]
        assert code == 0
        assert (int(rec["labeled"]), int(rec["unlabeled"])) == (labeled, unlabeled)


def test_json_stream():
    _, out = run("enumerate", "lattices", "2", "--format", "json")
    items = json.loads(out)
    assert [i["kind"] for i in items] == ["lattice", "lattice", "report"]


def test_verify_is_byte_identical_across_runs():
    a = run("verify", "--suite", "stone-dual", "--max-poset", "4")
    b = run("verify", "--suite", "stone-dual", "--max-poset", "4")
    assert a == b and a[0] == 0


def test_verify_timings_and_list():
    code, out = run("verify", "--suite", "fixtures", "--timings")
    assert code == 0 and "seconds=" in out
    code, out = run("verify", "--list")
    assert code == 0 and out.startswith("lattice-laws: ")


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "latdual.cli", "check", "t1", "@D2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "verdict=true" in r.stdout
