import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latdual import docs
from latdual import fixtures as fx
from latdual.errors import KindMismatch, ParseError
from latdual.filters import minimal_prime_filters
from latdual.order import validate_morphism
from latdual.topology import PointMap

from .conftest import lattices, spaces


@given(lattices())
def test_lattice_round_trip(l):
    d = docs.encode_lattice(l)
    assert docs.parse_doc(docs.print_doc(d)) == d
    assert docs.decode(d) == l


@given(spaces())
def test_space_round_trip(sp):
    d = docs.encode_space(sp)
    assert docs.parse_doc(docs.print_doc(d)) == d
    assert docs.decode(d) == sp


def test_arrow_and_family_round_trip():
    items = [
        (docs.encode_morphism(validate_morphism(fx.C3, fx.C2, (0, 0, 1))),
         validate_morphism(fx.C3, fx.C2, (0, 0, 1))),
        (docs.encode_map(PointMap(fx.D3, fx.D2, (0, 1, 1))), PointMap(fx.D3, fx.D2, (0, 1, 1))),
        (docs.encode_family(minimal_prime_filters(fx.L5)), minimal_prime_filters(fx.L5)),
    ]
    for d, obj in items:
        again = docs.parse_doc(docs.print_doc(d))
        assert again == d and docs.decode(again) == obj


@given(st.lists(st.lists(st.sampled_from(["a", "b=c", "x", "-1"]), max_size=3), max_size=3),
       st.sampled_from(docs.KINDS))
def test_report_and_meta_round_trip(rows, kind):
    recs = [[(f"k{i}", v) for i, v in enumerate(r)] for r in rows]
    d = docs.encode_report(recs, meta=(("tool", "x"),))
    again = docs.parse_doc(docs.print_doc(d))
    assert again == d
    assert docs.decode_report(again) == [dict(r) for r in recs]


def test_leq_input_is_closed():
    text = "kind: lattice\nn=3\nleq: 0 1\nleq: 1 2\n"
    assert docs.decode(docs.parse_doc(text)) == fx.C3


def test_id_is_checked_and_excludes_meta():
    d = docs.encode_lattice(fx.C3)
    assert docs.Document(d.kind, d.payload, (("a", "b"),)).id == d.id
    text = docs.print_doc(d).replace(d.id, "0" * 16)
    with pytest.raises(ParseError):
        docs.parse_doc(text)


@pytest.mark.parametrize("text", [
    "", "n=2\n", "kind: nope\n", "kind: lattice\nn=x\n",
    "kind: lattice\nn=2\ncovers: 0 5\n", "kind: lattice\nn=2\nfoo: 0 1\n",
    "kind: space\nn=2\nopen: 0 9\n", "kind: report\nrecord: novalue\n",
    "kind: lattice\nid: 1\nmeta: broken\nn=1\n",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        docs.decode(docs.parse_doc(text))


def test_invalid_structures_become_parse_errors():
    with pytest.raises(ParseError):
        docs.decode(docs.parse_doc("kind: lattice\nn=3\ncovers: 0 1\ncovers: 0 2\n"))
    with pytest.raises(ParseError):
        docs.decode(docs.parse_doc("kind: space\nn=2\nopen: 0\n"))


def test_kind_mismatch():
    with pytest.raises(KindMismatch):
        docs.decode_lattice(docs.encode_space(fx.D2))


def test_json_mirror():
    j = docs.to_json(docs.encode_lattice(fx.C3))
    assert j["payload"] == {"n": 3, "covers": [[0, 1], [1, 2]]}
    m = docs.to_json(docs.encode_map(PointMap(fx.D2, fx.D1, (0, 0))))
    assert m["payload"]["map"] == [0, 0]
    assert json.loads(docs.dumps_json([docs.encode_space(fx.X3)]))["kind"] == "space"


def test_stream_round_trip():
    ds = [docs.encode_lattice(fx.B2), docs.encode_space(fx.X3)]
    assert docs.parse_stream(docs.print_stream(ds)) == ds
