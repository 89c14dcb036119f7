"""``latdual check | functor | verify | enumerate``.

Exit codes: 0 for true or all-pass, 1 for false or any failure, 2 for errors.
"""

from __future__ import annotations

import argparse
import itertools
import math
import sys

from . import docs, fixtures
from .corpus import (
    CorpusConfig,
    enumerate_posets,
    enumerate_topologies,
    unlabeled_topology_count,
)
from .duality import (
    epsilon,
    eta,
    f_i,
    k_f,
    pi_star,
    stone_space,
    wallman,
    weak_stone_cech,
)
from .errors import KindMismatch, LatdualError, ParseError
from .filters import is_antichain, is_large_family
from .order import downset_lattice, is_coatomic
from .props import (
    boolean_witness,
    closed_subfit_witness,
    compact_witness,
    m_spatial_witness,
    normal_witness,
    preserves_maximal_join_complete_ideals,
    strongly_subfit_morphism_witness,
    strongly_subfit_witness,
    subfit_witness,
)
from .topology import is_hausdorff, is_sober, is_t0, is_t1, map_properties, sobrification
from .verify import ORDER, SUITES, run_suites


def _witness(fn):
    """Predicate from a witness function: (verdict, witness)."""
    def check(x):
        w = fn(x)
        return w is None, w
    return check


def _plain(fn):
    return lambda x: (bool(fn(x)), None)


def _map_prop(name):
    return lambda f: (getattr(map_properties(f), name), None)


PREDICATES = {
    "lattice": {
        "subfit": _witness(subfit_witness),
        "strongly-subfit": _witness(strongly_subfit_witness),
        "normal": _witness(normal_witness),
        "boolean": _witness(boolean_witness),
        "compact": _witness(compact_witness),
        "m-spatial": _witness(m_spatial_witness),
        "coatomic": _plain(is_coatomic),
    },
    "space": {
        "t0": _plain(is_t0), "t1": _plain(is_t1),
        "hausdorff": _plain(is_hausdorff), "sober": _plain(is_sober),
    },
    "morphism": {
        "closed-subfit": _witness(closed_subfit_witness),
        "strongly-subfit": _witness(strongly_subfit_morphism_witness),
        "m-homomorphism": _plain(preserves_maximal_join_complete_ideals),
    },
    "map": {name: _map_prop(name) for name in
            ("continuous", "closed", "open", "embedding", "homeomorphism")},
    "family": {
        "large": _plain(is_large_family),
        "antichain": _plain(lambda a: is_antichain(a.masks)),
    },
}

# functor name -> (input kind, apply, encoder)
FUNCTORS = {
    "wallman": ("lattice", lambda l: wallman(l).space, docs.encode_space),
    "stone": ("lattice", lambda l: stone_space(l).space.space, docs.encode_space),
    "epsilon": ("lattice", epsilon, docs.encode_morphism),
    "sobrify": ("space", lambda s: sobrification(s)[0].space, docs.encode_space),
    "beta": ("space", lambda s: weak_stone_cech(s).beta.space, docs.encode_space),
    "eta": ("space", lambda s: eta(s)[0], docs.encode_map),
    "kf": ("map", k_f, docs.encode_morphism),
    "pistar": ("morphism", pi_star, docs.encode_map),
    "fi": ("morphism", f_i, docs.encode_map),
}


def read_subject(spec: str) -> docs.Document:
    """A path, ``-`` for stdin, or ``@NAME`` for a named fixture."""
    if spec.startswith("@"):
        name = spec[1:]
        if name in fixtures.LATTICES:
            return docs.encode_lattice(fixtures.LATTICES[name])
        if name in fixtures.SPACES:
            return docs.encode_space(fixtures.SPACES[name])
        raise ParseError(f"unknown fixture {name!r}", witness=(name,))
    if spec == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise ParseError(f"cannot read {spec}: {e.strerror}", witness=(spec,)) from None
    return docs.parse_doc(text)


def _emit(out, fmt: str, items):
    items = list(items)
    out.write(docs.dumps_json(items) if fmt == "json" else docs.print_stream(items))


def cmd_check(args, out) -> int:
    d = read_subject(args.subject)
    table = PREDICATES.get(d.kind, {})
    if args.predicate not in table:
        kinds = [k for k, t in PREDICATES.items() if args.predicate in t]
        if kinds:
            raise KindMismatch(f"{args.predicate} applies to {', '.join(kinds)}, "
                               f"not {d.kind}", witness=(args.predicate, d.kind))
        raise ParseError(f"unknown predicate {args.predicate!r}", witness=(args.predicate,))
    obj = docs.decode(d)
    verdict, witness = table[args.predicate](obj)
    rec = [("predicate", args.predicate), ("subject", d.id),
           ("verdict", "true" if verdict else "false"),
           ("witness", None if witness is None else repr(tuple(witness)))]
    _emit(out, args.format, [docs.encode_report([rec])])
    return 0 if verdict else 1


def cmd_functor(args, out) -> int:
    d = read_subject(args.subject)
    kind, apply, encode = FUNCTORS[args.functor]
    if d.kind != kind:
        raise KindMismatch(f"{args.functor} takes a {kind} document, got {d.kind}",
                           witness=(kind, d.kind))
    result = apply(docs.decode(d))
    meta = (("functor", args.functor), ("input", d.id))
    _emit(out, args.format, [encode(result, meta)])
    return 0


def _config(args) -> CorpusConfig:
    return CorpusConfig(max_poset=args.max_poset, max_space_points=args.max_space_points,
                        seed=args.seed, random_trials=args.trials)


def cmd_verify(args, out) -> int:
    if args.list:
        out.write(list_suites() + "\n")
        return 0
    cfg = _config(args)
    records = run_suites(cfg, args.suite)
    rows = []
    for r in records:
        row = [("suite", r.suite), ("check", r.check), ("subjects", r.subjects),
               ("failures", r.failures), ("verdict", r.verdict),
               ("subject", r.subject), ("witness", r.witness)]
        if args.timings:
            row.append(("seconds", f"{r.seconds:.3f}"))
        rows.append(row)
    meta = (("suite", args.suite), ("max_poset", cfg.max_poset),
            ("max_space_points", cfg.max_space_points), ("seed", cfg.seed),
            ("trials", cfg.random_trials))
    _emit(out, args.format, [docs.encode_report(rows, meta)])
    return 1 if any(r.verdict == "fail" for r in records) else 0


def _labeled_count(p) -> int:
    n = p.size
    autos = sum(1 for perm in itertools.permutations(range(n))
                if all(p.leq[a][b] == p.leq[perm[a]][perm[b]]
                       for a in range(n) for b in range(n)))
    return math.factorial(n) // autos


def cmd_enumerate(args, out) -> int:
    n = args.n
    if args.kind == "topologies":
        spaces = enumerate_topologies(n)
        items = [docs.encode_space(s) for s in spaces]
        labeled, unlabeled = len(spaces), unlabeled_topology_count(n)
    else:
        posets = enumerate_posets(n)
        if args.kind == "posets":
            items = [docs.encode_poset(p) for p in posets]
        else:
            items = [docs.encode_lattice(downset_lattice(p)) for p in posets]
        labeled, unlabeled = sum(_labeled_count(p) for p in posets), len(posets)
    summary = docs.encode_report([[("kind", args.kind), ("n", n),
                                   ("labeled", labeled), ("unlabeled", unlabeled),
                                   ("documents", len(items))]])
    _emit(out, args.format, items + [summary])
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="latdual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    c = sub.add_parser("check", help="evaluate a predicate on a document")
    c.add_argument("predicate")
    c.add_argument("subject", help="path, '-' for stdin, or @NAME for a fixture")
    common(c)

    f = sub.add_parser("functor", help="apply a construction to a document")
    f.add_argument("functor", choices=sorted(FUNCTORS))
    f.add_argument("subject", help="path, '-' for stdin, or @NAME for a fixture")
    common(f)

    v = sub.add_parser("verify", help="run theorem suites over the corpus")
    v.add_argument("--suite", default="all", choices=("all",) + ORDER)
    v.add_argument("--max-poset", type=int, default=CorpusConfig.max_poset)
    v.add_argument("--max-space-points", type=int, default=CorpusConfig.max_space_points)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=0,
                   help="random posets one size above --max-poset")
    v.add_argument("--list", action="store_true", help="print suite ids and statements")
    v.add_argument("--timings", action="store_true",
                   help="add wall-time per check (output is then not reproducible)")
    common(v)

    e = sub.add_parser("enumerate", help="list posets, lattices or topologies")
    e.add_argument("kind", choices=("posets", "lattices", "topologies"))
    e.add_argument("n", type=int)
    common(e)
    return p


def list_suites() -> str:
    return "\n".join(f"{sid}: {SUITES[sid].statement}" for sid in ORDER)


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    handler = {"check": cmd_check, "functor": cmd_functor,
               "verify": cmd_verify, "enumerate": cmd_enumerate}[args.command]
    try:
        return handler(args, out)
    except (LatdualError, ValueError) as e:
        witness = getattr(e, "witness", None)
        extra = "" if witness is None else f" witness={witness!r}"
        print(f"latdual: {type(e).__name__}: {e}{extra}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
