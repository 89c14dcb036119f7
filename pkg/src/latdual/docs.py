"""Line-oriented documents with a content-hash id, plus a JSON mirror.

A document prints as::

    kind: lattice
    id: 3f2a...
    meta: functor=wallman input=91c0...
    n=3
    covers: 0 1
    covers: 1 2

The id hashes kind and payload only, so provenance metadata does not change
it. Morphisms and maps nest their source and target payloads under the
``source>`` and ``target>`` prefixes; families nest their host under ``host>``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .errors import KindMismatch, LatdualError, ParseError
from .filters import Filter, FilterFamily
from .order import (
    FiniteLattice,
    FinitePoset,
    LatticeMorphism,
    members,
    to_mask,
    validate_lattice,
    validate_morphism,
)
from .topology import FiniteSpace, PointMap, validate_topology

KINDS = ("lattice", "space", "morphism", "map", "family", "report", "poset")


@dataclass(frozen=True)
class Document:
    kind: str
    payload: str
    meta: tuple[tuple[str, str], ...] = ()

    @property
    def id(self) -> str:
        h = hashlib.sha256(f"{self.kind}\n{self.payload}".encode())
        return h.hexdigest()[:16]

    def lines(self) -> list[str]:
        return self.payload.split("\n") if self.payload else []


def print_doc(d: Document) -> str:
    out = [f"kind: {d.kind}", f"id: {d.id}"]
    if d.meta:
        out.append("meta: " + " ".join(f"{k}={v}" for k, v in d.meta))
    out.extend(d.lines())
    return "\n".join(out) + "\n"


def _kv(text: str, where: str) -> tuple[tuple[str, str], ...]:
    pairs = []
    for tok in text.split():
        k, sep, v = tok.partition("=")
        if not sep or not k:
            raise ParseError(f"expected key=value in {where}", witness=(tok,))
        pairs.append((k, v))
    return tuple(pairs)


def parse_doc(text: str) -> Document:
    """Inverse of ``print_doc``. A missing id is accepted; a wrong one is not."""
    lines = [ln.rstrip("\r") for ln in text.strip("\n").split("\n")]
    if not lines or not lines[0].startswith("kind:"):
        raise ParseError("document must start with 'kind:'", witness=(lines[0] if lines else "",))
    kind = lines[0][5:].strip()
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", witness=(kind,))
    k = 1
    claimed = None
    if k < len(lines) and lines[k].startswith("id:"):
        claimed = lines[k][3:].strip()
        k += 1
    meta = ()
    if k < len(lines) and lines[k].startswith("meta:"):
        meta = _kv(lines[k][5:], "meta")
        k += 1
    d = Document(kind, "\n".join(lines[k:]), meta)
    if claimed is not None and claimed != d.id:
        raise ParseError("id does not match content", witness=(claimed, d.id))
    return d


def parse_stream(text: str) -> list[Document]:
    """Documents separated by blank lines."""
    return [parse_doc(block) for block in text.split("\n\n") if block.strip()]


def print_stream(docs) -> str:
    return "\n".join(print_doc(d) for d in docs)


# -- payload helpers ---------------------------------------------------------------

def _ints(text: str, where: str) -> list[int]:
    try:
        return [int(t) for t in text.split()]
    except ValueError:
        raise ParseError(f"expected integers in {where}", witness=(text,)) from None


def _header_n(lines: list[str], kind: str) -> int:
    if not lines or not lines[0].startswith("n="):
        raise ParseError(f"{kind} payload must start with n=<size>", witness=())
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ParseError("bad size", witness=(lines[0],)) from None
    if n < 0:
        raise ParseError("negative size", witness=(n,))
    return n


def _split_prefixed(lines: list[str], prefixes: tuple[str, ...]):
    parts = {p: [] for p in prefixes}
    rest = []
    for ln in lines:
        for p in prefixes:
            if ln.startswith(p + ">"):
                parts[p].append(ln[len(p) + 1:])
                break
        else:
            rest.append(ln)
    return parts, rest


def _require(d: Document, kind: str):
    if d.kind != kind:
        raise KindMismatch(f"expected a {kind} document, got {d.kind}",
                           witness=(kind, d.kind))


# -- lattices and posets ----------------------------------------------------------

def _covers(leq) -> list[tuple[int, int]]:
    n = len(leq)
    out = []
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and not any(
                    c not in (a, b) and leq[a][c] and leq[c][b] for c in range(n)):
                out.append((a, b))
    return out


def _order_lines(n: int, leq) -> list[str]:
    return [f"n={n}"] + [f"covers: {a} {b}" for a, b in _covers(leq)]


def _closure(n: int, pairs) -> list[list[bool]]:
    rel = [[a == b for b in range(n)] for a in range(n)]
    for a, b in pairs:
        rel[a][b] = True
    for c in range(n):
        for a in range(n):
            if rel[a][c]:
                for b in range(n):
                    if rel[c][b]:
                        rel[a][b] = True
    return rel


def _order_from(lines: list[str], kind: str) -> list[list[bool]]:
    n = _header_n(lines, kind)
    pairs = []
    for ln in lines[1:]:
        key, sep, rest = ln.partition(":")
        if not sep or key not in ("covers", "leq"):
            raise ParseError(f"unexpected line in {kind}", witness=(ln,))
        v = _ints(rest, key)
        if len(v) != 2 or not all(0 <= x < n for x in v):
            raise ParseError(f"bad {key} pair", witness=(ln,))
        pairs.append(tuple(v))
    return _closure(n, pairs)


def encode_lattice(l: FiniteLattice, meta=()) -> Document:
    return Document("lattice", "\n".join(_order_lines(l.size, l.leq)), tuple(meta))


def _lattice_from(lines: list[str]) -> FiniteLattice:
    return validate_lattice(_order_from(lines, "lattice"))


def decode_lattice(d: Document) -> FiniteLattice:
    _require(d, "lattice")
    return _lattice_from(d.lines())


def encode_poset(p: FinitePoset, meta=()) -> Document:
    return Document("poset", "\n".join(_order_lines(p.size, p.leq)), tuple(meta))


def decode_poset(d: Document) -> FinitePoset:
    _require(d, "poset")
    return FinitePoset.from_relation(_order_from(d.lines(), "poset"))


# -- spaces ---------------------------------------------------------------------

def _space_lines(s: FiniteSpace) -> list[str]:
    out = [f"n={s.points}"]
    for u in s.topology:
        out.append(("open: " + " ".join(map(str, members(u)))).rstrip())
    return out


def encode_space(s: FiniteSpace, meta=(), base=None, closed=None) -> Document:
    lines = _space_lines(s)
    for tag, fam in (("base", base), ("closedset", closed)):
        for m in fam or ():
            lines.append((f"{tag}: " + " ".join(map(str, members(m)))).rstrip())
    return Document("space", "\n".join(lines), tuple(meta))


def _space_from(lines: list[str]):
    n = _header_n(lines, "space")
    found = {"open": [], "base": [], "closedset": []}
    for ln in lines[1:]:
        key, sep, rest = ln.partition(":")
        if not sep or key not in found:
            raise ParseError("unexpected line in space", witness=(ln,))
        v = _ints(rest, key)
        if not all(0 <= x < n for x in v):
            raise ParseError("point out of range", witness=(ln,))
        found[key].append(to_mask(v))
    return validate_topology(n, found["open"]), found["base"], found["closedset"]


def decode_space(d: Document) -> FiniteSpace:
    _require(d, "space")
    return _space_from(d.lines())[0]


def space_extras(d: Document) -> tuple[list[int], list[int]]:
    """The ``base:`` and ``closedset:`` families of a space document."""
    _require(d, "space")
    _, base, closed = _space_from(d.lines())
    return base, closed


# -- arrows ---------------------------------------------------------------------

def _arrow_lines(src: list[str], tgt: list[str], images) -> str:
    lines = [f"source>{ln}" for ln in src] + [f"target>{ln}" for ln in tgt]
    lines += [f"map: {a}->{b}" for a, b in enumerate(images)]
    return "\n".join(lines)


def _arrow_from(d: Document):
    parts, rest = _split_prefixed(d.lines(), ("source", "target"))
    images = {}
    for ln in rest:
        key, sep, body = ln.partition(":")
        a, arrow, b = body.partition("->")
        if key != "map" or not arrow:
            raise ParseError(f"unexpected line in {d.kind}", witness=(ln,))
        try:
            images[int(a)] = int(b)
        except ValueError:
            raise ParseError("bad map line", witness=(ln,)) from None
    return parts["source"], parts["target"], images


def _images(images: dict[int, int], n: int) -> tuple[int, ...]:
    if sorted(images) != list(range(n)):
        raise ParseError("map must list every source element once", witness=tuple(sorted(images)))
    return tuple(images[a] for a in range(n))


def encode_morphism(m: LatticeMorphism, meta=()) -> Document:
    return Document("morphism", _arrow_lines(
        _order_lines(m.source.size, m.source.leq),
        _order_lines(m.target.size, m.target.leq), m.map), tuple(meta))


def decode_morphism(d: Document) -> LatticeMorphism:
    _require(d, "morphism")
    s, t, images = _arrow_from(d)
    src, tgt = _lattice_from(s), _lattice_from(t)
    return validate_morphism(src, tgt, _images(images, src.size))


def encode_map(f: PointMap, meta=()) -> Document:
    return Document("map", _arrow_lines(
        _space_lines(f.source), _space_lines(f.target), f.map), tuple(meta))


def decode_map(d: Document) -> PointMap:
    _require(d, "map")
    s, t, images = _arrow_from(d)
    src, tgt = _space_from(s)[0], _space_from(t)[0]
    imgs = _images(images, src.points)
    if not all(0 <= b < tgt.points for b in imgs):
        raise ParseError("image out of range", witness=imgs)
    return PointMap(src, tgt, imgs)


# -- families -------------------------------------------------------------------

def encode_family(a: FilterFamily, meta=()) -> Document:
    lines = [f"host>{ln}" for ln in _order_lines(a.host.size, a.host.leq)]
    lines += [("filter: " + " ".join(map(str, f.members))).rstrip() for f in a]
    return Document("family", "\n".join(lines), tuple(meta))


def decode_family(d: Document) -> FilterFamily:
    _require(d, "family")
    parts, rest = _split_prefixed(d.lines(), ("host",))
    host = _lattice_from(parts["host"])
    masks = []
    for ln in rest:
        key, sep, body = ln.partition(":")
        if key != "filter" or not sep:
            raise ParseError("unexpected line in family", witness=(ln,))
        v = _ints(body, "filter")
        if not all(0 <= x < host.size for x in v):
            raise ParseError("element out of range", witness=(ln,))
        masks.append(to_mask(v))
    fam = FilterFamily.of(host, masks)
    for f in fam:
        Filter(host, f.mask)  # validates
    return fam


# -- reports ---------------------------------------------------------------------

def encode_report(records, meta=()) -> Document:
    """``records`` are sequences of ``(key, value)`` pairs; None values are
    dropped and spaces removed from the rest."""
    lines = []
    for rec in records:
        body = " ".join(f"{k}={str(v).replace(' ', '')}" for k, v in rec if v is not None)
        lines.append(f"record: {body}".rstrip())
    return Document("report", "\n".join(lines), tuple(meta))


def decode_report(d: Document) -> list[dict[str, str]]:
    _require(d, "report")
    out = []
    for ln in d.lines():
        key, sep, body = ln.partition(":")
        if key != "record" or not sep:
            raise ParseError("unexpected line in report", witness=(ln,))
        out.append(dict(_kv(body, "record")))
    return out


# -- dispatch and JSON mirror ---------------------------------------------------------

DECODERS = {
    "lattice": decode_lattice, "space": decode_space, "morphism": decode_morphism,
    "map": decode_map, "family": decode_family, "report": decode_report,
    "poset": decode_poset,
}


def decode(d: Document):
    try:
        return DECODERS[d.kind](d)
    except ParseError:
        raise
    except LatdualError as e:
        raise ParseError(f"invalid {d.kind}: {e}", witness=e.witness) from e


def _structured(kind: str, lines: list[str]):
    if kind in ("lattice", "poset"):
        out = {"n": _header_n(lines, kind)}
        for ln in lines[1:]:
            key, _, rest = ln.partition(":")
            out.setdefault(key, []).append(_ints(rest, key))
        return out
    if kind == "space":
        out = {"n": _header_n(lines, kind), "open": [], "base": [], "closedset": []}
        for ln in lines[1:]:
            key, _, rest = ln.partition(":")
            out[key].append(_ints(rest, key))
        return {k: v for k, v in out.items() if v or k in ("n", "open")}
    if kind in ("morphism", "map"):
        sub = "space" if kind == "map" else "lattice"
        parts, rest = _split_prefixed(lines, ("source", "target"))
        return {"source": _structured(sub, parts["source"]),
                "target": _structured(sub, parts["target"]),
                "map": [int(ln.partition("->")[2]) for ln in rest]}
    if kind == "family":
        parts, rest = _split_prefixed(lines, ("host",))
        return {"host": _structured("lattice", parts["host"]),
                "filters": [_ints(ln.partition(":")[2], "filter") for ln in rest]}
    if kind == "report":
        return {"records": [dict(_kv(ln.partition(":")[2], "record")) for ln in lines]}
    raise ParseError(f"unknown kind {kind!r}", witness=(kind,))


def to_json(d: Document) -> dict:
    return {"kind": d.kind, "id": d.id, "meta": dict(d.meta),
            "payload": _structured(d.kind, d.lines())}


def dumps_json(docs) -> str:
    docs = list(docs)
    body = to_json(docs[0]) if len(docs) == 1 else [to_json(d) for d in docs]
    return json.dumps(body, indent=2, sort_keys=True) + "\n"
