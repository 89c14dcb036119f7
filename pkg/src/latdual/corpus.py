"""Exhaustive and random test corpora: posets, lattices, spaces, maps.

Posets are generated by adding a new maximal element above each down-set of
every smaller poset and reducing to a canonical labelling. The independent
check enumerates naturally labelled relations directly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from . import bounds
from .errors import SizeBound
from .order import (
    FinitePoset,
    downset_lattice,
    enumerate_homomorphisms,
    iter_bits,
    to_mask,
)
from .topology import FiniteSpace, PointMap, canonical_family

RowForm = tuple[int, ...]  # row ``i`` is the mask of elements above ``i``


# -- posets ------------------------------------------------------------------

def poset_rows(p: FinitePoset) -> RowForm:
    return p.up


def canonical_rows(rows: RowForm) -> RowForm:
    """Least relabelling of an order given by up-set rows."""
    n = len(rows)
    best = None
    for perm in itertools.permutations(range(n)):
        # element perm[i] becomes i
        pos = [0] * n
        for i, x in enumerate(perm):
            pos[x] = i
        cand = tuple(to_mask(pos[y] for y in iter_bits(rows[x])) for x in perm)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


def poset_from_rows(rows: RowForm) -> FinitePoset:
    n = len(rows)
    return FinitePoset(tuple(tuple(bool(rows[a] >> b & 1) for b in range(n))
                             for a in range(n)))


def _downsets(rows: RowForm) -> Iterator[int]:
    n = len(rows)
    down = [to_mask(b for b in range(n) if rows[b] >> a & 1) for a in range(n)]
    for mask in range(1 << n):
        if all(down[a] & ~mask == 0 for a in iter_bits(mask)):
            yield mask


@lru_cache(maxsize=None)
def _poset_forms(n: int) -> tuple[RowForm, ...]:
    if n == 0:
        return ((),)
    out = set()
    for rows in _poset_forms(n - 1):
        for d in _downsets(rows):
            new = tuple(r | (1 << (n - 1)) if d >> a & 1 else r
                        for a, r in enumerate(rows)) + (1 << (n - 1),)
            out.add(canonical_rows(new))
    return tuple(sorted(out))


def enumerate_posets(n: int) -> tuple[FinitePoset, ...]:
    """One poset per isomorphism class on ``n`` elements, canonical order."""
    limit = bounds.max_poset()
    if n > limit:
        raise SizeBound(f"posets on {n} > {limit} elements", witness=(n, limit))
    return tuple(poset_from_rows(r) for r in _poset_forms(n))


def poset_forms_oracle(n: int) -> frozenset[RowForm]:
    """Canonical forms of all naturally labelled orders (``i <= j`` only if
    ``i <= j`` as integers), found by scanning strict upper-triangular
    relations for transitivity."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = set()
    for bits in range(1 << len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rel[i][j] = True
        if all(not (rel[i][j] and rel[j][k]) or rel[i][k]
               for i in range(n) for j in range(n) for k in range(n)):
            rows = tuple(to_mask(j for j in range(n) if rel[i][j]) for i in range(n))
            out.add(canonical_rows(rows))
    return frozenset(out)


def random_poset(n: int, rng: random.Random) -> FinitePoset:
    """Uniform over naturally labelled orders on ``n`` elements (rejection on
    upper-triangular relations), then canonically relabelled. Isomorphism
    classes are not sampled uniformly."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while True:
        bits = rng.getrandbits(len(pairs)) if pairs else 0
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                rows[i] |= 1 << j
        if all(rows[i] & rows[j] == rows[j] for i in range(n)
               for j in iter_bits(rows[i])):
            return poset_from_rows(canonical_rows(tuple(rows)))


# -- topologies ----------------------------------------------------------------

def _preorder_opens(n: int, rows: list[int]) -> tuple[int, ...]:
    # opens of the Alexandrov topology are the up-sets of the preorder
    return canonical_family(n, (m for m in range(1 << n)
                                if all(rows[x] & ~m == 0 for x in iter_bits(m))))


@lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[FiniteSpace, ...]:
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    found = set()
    for bits in range(1 << len(offdiag)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(offdiag):
            if bits >> k & 1:
                rows[i] |= 1 << j
        if all(rows[i] & rows[j] == rows[j] for i in range(n)
               for j in iter_bits(rows[i])):
            found.add(_preorder_opens(n, rows))
    key = lambda t: (len(t), tuple(canonical_family(n, t)))
    return tuple(FiniteSpace(n, t) for t in sorted(found, key=key))


def enumerate_topologies(n: int) -> tuple[FiniteSpace, ...]:
    """All topologies on ``n`` labelled points, via preorders."""
    limit = bounds.max_space_points()
    if n > limit:
        raise SizeBound(f"topologies on {n} > {limit} points", witness=(n, limit))
    return _topologies(n)


def topologies_oracle(n: int) -> frozenset[tuple[int, ...]]:
    """Every family of subsets containing the empty and full sets and closed
    under union and intersection, by direct scan of all families."""
    full = (1 << n) - 1
    middle = [m for m in range(1, full)] if n else []
    out = set()
    for bits in range(1 << len(middle)):
        fam = {0, full} | {middle[k] for k in range(len(middle)) if bits >> k & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.add(canonical_family(n, fam))
    return frozenset(out)


def unlabeled_topology_count(n: int) -> int:
    forms = set()
    for s in enumerate_topologies(n):
        best = None
        for perm in itertools.permutations(range(n)):
            cand = tuple(sorted(to_mask(perm[x] for x in iter_bits(u))
                                for u in s.topology))
            if best is None or cand < best:
                best = cand
        forms.add(best)
    return len(forms)


# -- corpus ----------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusConfig:
    """A bound ``n >= 1`` covers sizes ``0..n``. ``max_space_points=0``
    leaves the spaces out; ``max_poset=0`` makes verification an empty run."""

    max_poset: int = bounds.DEFAULT_MAX_POSET
    max_space_points: int = bounds.DEFAULT_MAX_SPACE_POINTS
    max_lattice: int = bounds.DEFAULT_MAX_LATTICE
    seed: int = 0
    random_trials: int = 0
    morphism_host_bound: int = 8
    map_point_bound: int = 3

    def __post_init__(self):
        for name in ("max_poset", "max_space_points", "max_lattice", "random_trials"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")


class Subject(NamedTuple):
    name: str
    value: object
    size: int


def corpus_lattices(cfg: CorpusConfig) -> tuple[Subject, ...]:
    out = []
    if cfg.max_poset > 0:
        for n in range(cfg.max_poset + 1):
            for k, p in enumerate(enumerate_posets(n)):
                l = downset_lattice(p)
                out.append(Subject(f"P{n}.{k}", l, l.size))
    if cfg.random_trials:
        rng = random.Random(cfg.seed)
        seen = {s.value for s in out}
        n = cfg.max_poset + 1
        for t in range(cfg.random_trials):
            l = downset_lattice(random_poset(n, rng))
            if l not in seen:
                seen.add(l)
                out.append(Subject(f"R{n}.{t}", l, l.size))
    return tuple(out)


def corpus_spaces(cfg: CorpusConfig) -> tuple[Subject, ...]:
    out = []
    if cfg.max_space_points > 0:
        for n in range(cfg.max_space_points + 1):
            for k, s in enumerate(enumerate_topologies(n)):
                out.append(Subject(f"T{n}.{k}", s, s.points))
    return tuple(out)


def corpus_morphisms(lattices, host_bound: int = 8) -> Iterator[Subject]:
    """Every bounded-lattice homomorphism between corpus lattices with at
    most ``host_bound`` elements."""
    small = [s for s in lattices if s.size <= host_bound]
    for a in small:
        for b in small:
            for k, m in enumerate(enumerate_homomorphisms(a.value, b.value)):
                yield Subject(f"{a.name}->{b.name}#{k}", m, a.size + b.size)


def corpus_maps(spaces, point_bound: int = 3) -> Iterator[Subject]:
    small = [s for s in spaces if s.size <= point_bound]
    for a in small:
        for b in small:
            t = b.value.points
            for k, images in enumerate(itertools.product(range(t), repeat=a.value.points)):
                yield Subject(f"{a.name}->{b.name}#{k}",
                              PointMap(a.value, b.value, images), a.size + b.size)


__all__ = [
    "CorpusConfig", "Subject", "canonical_rows", "corpus_lattices",
    "corpus_maps", "corpus_morphisms", "corpus_spaces", "enumerate_posets",
    "enumerate_topologies", "poset_forms_oracle", "poset_from_rows",
    "poset_rows", "random_poset", "topologies_oracle",
    "unlabeled_topology_count",
]
