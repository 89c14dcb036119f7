"""Finite posets, bounded distributive lattices and their morphisms.

Elements are the integers ``0..n-1``. Subsets of elements (filters, ideals,
sublattices, open sets of a space) are stored as ``int`` bitmasks, bit ``i``
standing for element ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from . import bounds
from .errors import (
    BreaksBounds,
    BreaksJoin,
    BreaksMeet,
    NoGlb,
    NoLub,
    NonDistributive,
    NotAPoset,
    NotMonotone,
    SizeBound,
    Unbounded,
)

Relation = tuple[tuple[bool, ...], ...]


# -- bitmask helpers ---------------------------------------------------------

def iter_bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def to_mask(elements) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bit_pattern(mask: int, n: int) -> tuple[int, ...]:
    """The pattern ``(b_0, ..., b_{n-1})``; its lexicographic order is the
    canonical order used for families of subsets."""
    return tuple((mask >> i) & 1 for i in range(n))


def full_mask(n: int) -> int:
    return (1 << n) - 1


# -- relations ---------------------------------------------------------------

def as_relation(leq: Sequence[Sequence]) -> Relation:
    n = len(leq)
    rows = []
    for row in leq:
        if len(row) != n:
            raise NotAPoset("relation is not square")
        rows.append(tuple(bool(x) for x in row))
    return tuple(rows)


def relation_from_pairs(n: int, pairs) -> Relation:
    """Reflexive-transitive closure of ``pairs`` on ``0..n-1``."""
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        rel[a][b] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                row_k = rel[k]
                row_i = rel[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return as_relation(rel)


def poset_violation(leq: Relation):
    """First failed partial-order axiom as ``(axiom, witness)``, or None."""
    n = len(leq)
    for a in range(n):
        if not leq[a][a]:
            return "reflexive", (a,)
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                return "antisymmetric", (a, b)
    for a in range(n):
        for b in range(n):
            if not leq[a][b]:
                continue
            for c in range(n):
                if leq[b][c] and not leq[a][c]:
                    return "transitive", (a, b, c)
    return None


def quotient_preorder(leq: Relation) -> tuple[Relation, tuple[int, ...]]:
    """Collapse a preorder to its poset of equivalence classes.

    Returns the class relation and, for each original element, its class
    index. Classes are numbered by their least member.
    """
    n = len(leq)
    cls = [-1] * n
    reps = []
    for a in range(n):
        if cls[a] >= 0:
            continue
        cls[a] = len(reps)
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                cls[b] = cls[a]
        reps.append(a)
    q = tuple(tuple(leq[a][b] for b in reps) for a in reps)
    return q, tuple(cls)


@dataclass(frozen=True)
class FinitePoset:
    leq: Relation

    def __post_init__(self):
        bad = poset_violation(self.leq)
        if bad is not None:
            raise NotAPoset(f"not a poset: {bad[0]} fails", witness=bad[1])

    @classmethod
    def from_relation(cls, leq) -> "FinitePoset":
        return cls(as_relation(leq))

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "FinitePoset":
        return cls(relation_from_pairs(n, pairs))

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls.from_pairs(n, ())

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls.from_pairs(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def size(self) -> int:
        return len(self.leq)

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(to_mask(b for b in range(self.size) if self.leq[b][a])
                     for a in range(self.size))

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(to_mask(b for b in range(self.size) if self.leq[a][b])
                     for a in range(self.size))

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.size)
                     if self.down[a] == 1 << a)

    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(a, b)`` with ``a < b`` and nothing in between."""
        out = []
        n = self.size
        for a in range(n):
            for b in range(n):
                if a == b or not self.leq[a][b]:
                    continue
                between = self.up[a] & self.down[b] & ~((1 << a) | (1 << b))
                if not between:
                    out.append((a, b))
        return tuple(out)


# -- lattices ----------------------------------------------------------------

@dataclass(frozen=True)
class FiniteLattice:
    """A bounded distributive lattice with precomputed operation tables.

    ``labels`` optionally names what each element stands for (for lattices
    of sets: the subset bitmask); it does not take part in equality.
    """

    leq: Relation
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    labels: tuple | None = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.leq)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def is_trivial(self) -> bool:
        return self.bottom == self.top

    @cached_property
    def up(self) -> tuple[int, ...]:
        n = self.size
        return tuple(to_mask(b for b in range(n) if self.leq[a][b])
                     for a in range(n))

    @cached_property
    def down(self) -> tuple[int, ...]:
        n = self.size
        return tuple(to_mask(b for b in range(n) if self.leq[b][a])
                     for a in range(n))

    @cached_property
    def full(self) -> int:
        return full_mask(self.size)

    @cached_property
    def to_top(self) -> tuple[int, ...]:
        """``to_top[a]`` is the mask of all ``c`` with ``a v c = 1``."""
        n, top = self.size, self.top
        return tuple(to_mask(c for c in range(n) if self.join[a][c] == top)
                     for a in range(n))

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def join_all(self, elements) -> int:
        acc = self.bottom
        for e in elements:
            acc = self.join[acc][e]
        return acc

    def meet_all(self, elements) -> int:
        acc = self.top
        for e in elements:
            acc = self.meet[acc][e]
        return acc

    def upset(self, mask: int) -> int:
        out = 0
        for a in iter_bits(mask):
            out |= self.up[a]
        return out

    def downset(self, mask: int) -> int:
        out = 0
        for a in iter_bits(mask):
            out |= self.down[a]
        return out

    def poset(self) -> FinitePoset:
        return FinitePoset(self.leq)

    def label(self, a: int):
        return a if self.labels is None else self.labels[a]


def _lub(up: Sequence[int], a: int, b: int):
    common = up[a] & up[b]
    for u in iter_bits(common):
        if up[u] & common == common:
            return u
    return None


def _glb(down: Sequence[int], a: int, b: int):
    common = down[a] & down[b]
    for u in iter_bits(common):
        if down[u] & common == common:
            return u
    return None


def validate_lattice(leq, labels=None) -> FiniteLattice:
    """Check that ``leq`` orders a bounded distributive lattice and build it.

    Raises the first failed axiom, in the order: poset, lub, glb, bounds,
    distributivity, each with a witness.
    """
    rel = as_relation(leq)
    bad = poset_violation(rel)
    if bad is not None:
        raise NotAPoset(f"not a poset: {bad[0]} fails", witness=bad[1])
    n = len(rel)
    up = [to_mask(b for b in range(n) if rel[a][b]) for a in range(n)]
    down = [to_mask(b for b in range(n) if rel[b][a]) for a in range(n)]
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            j = _lub(up, a, b)
            if j is None:
                raise NoLub(f"no least upper bound for {a}, {b}", witness=(a, b))
            join[a][b] = join[b][a] = j
    for a in range(n):
        for b in range(a, n):
            m = _glb(down, a, b)
            if m is None:
                raise NoGlb(f"no greatest lower bound for {a}, {b}", witness=(a, b))
            meet[a][b] = meet[b][a] = m
    everything = full_mask(n)
    bottoms = [a for a in range(n) if up[a] == everything]
    tops = [a for a in range(n) if down[a] == everything]
    if not bottoms or not tops:
        # only reachable for n == 0: a nonempty finite lattice is bounded
        raise Unbounded("no bottom or no top", witness=())
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    raise NonDistributive(
                        f"a ^ (b v c) != (a ^ b) v (a ^ c) at {(a, b, c)}",
                        witness=(a, b, c))
    return FiniteLattice(
        leq=rel,
        join=tuple(map(tuple, join)),
        meet=tuple(map(tuple, meet)),
        bottom=bottoms[0],
        top=tops[0],
        labels=None if labels is None else tuple(labels),
    )


def lattice_from_preorder(leq) -> tuple[FiniteLattice, tuple[int, ...]]:
    """Quotient a preorder to a poset, then validate it as a lattice."""
    q, cls = quotient_preorder(as_relation(leq))
    return validate_lattice(q), cls


def lattice_of_sets(masks: Sequence[int]) -> FiniteLattice:
    """The family ``masks`` ordered by inclusion, in the given order."""
    masks = list(masks)
    n = len(masks)
    rel = tuple(tuple(masks[a] & ~masks[b] == 0 for b in range(n))
                for a in range(n))
    return validate_lattice(rel, labels=masks)


def set_family_key(n_points: int):
    """Sort key: by size, then bit pattern."""
    return lambda m: (popcount(m), bit_pattern(m, n_points))


def downset_lattice(p: FinitePoset) -> FiniteLattice:
    """The lattice of down-closed subsets of ``p`` (labels are the masks)."""
    n = p.size
    downs = []
    for mask in range(1 << n):
        if all(p.down[a] & ~mask == 0 for a in iter_bits(mask)):
            downs.append(mask)
    downs.sort(key=set_family_key(n))
    return lattice_of_sets(downs)


def chain(n: int) -> FiniteLattice:
    """The ``n``-element chain ``0 < 1 < ... < n-1``."""
    return validate_lattice([[a <= b for b in range(n)] for a in range(n)])


def boolean_lattice(k: int) -> FiniteLattice:
    """Subsets of a ``k``-set, ordered by size then bit pattern."""
    masks = sorted(range(1 << k), key=set_family_key(k))
    return lattice_of_sets(masks)


# -- element classes ---------------------------------------------------------

def coatoms(l: FiniteLattice) -> tuple[int, ...]:
    top = l.top
    out = []
    for p in l.elements:
        if p == top:
            continue
        between = l.up[p] & ~((1 << p) | (1 << top))
        if not between:
            out.append(p)
    return tuple(out)


def is_coatomic(l: FiniteLattice) -> bool:
    cs = to_mask(coatoms(l))
    return all(l.up[q] & cs for q in l.elements if q != l.top)


def atoms(l: FiniteLattice) -> tuple[int, ...]:
    bot = l.bottom
    return tuple(p for p in l.elements if p != bot
                 and not l.down[p] & ~((1 << p) | (1 << bot)))


def join_irreducibles(l: FiniteLattice) -> tuple[int, ...]:
    out = []
    for j in l.elements:
        if j == l.bottom:
            continue
        if all(l.join[a][b] != j or j in (a, b)
               for a in l.elements for b in l.elements):
            out.append(j)
    return tuple(out)


def complement_of(l: FiniteLattice, x: int):
    for y in l.elements:
        if l.meet[x][y] == l.bottom and l.join[x][y] == l.top:
            return y
    return None


def is_compatible(p: int, q: int, l: FiniteLattice) -> bool:
    """True iff some ``z <= p, q`` is not the bottom."""
    return l.meet[p][q] != l.bottom


# -- morphisms ---------------------------------------------------------------

@dataclass(frozen=True)
class LatticeMorphism:
    source: FiniteLattice
    target: FiniteLattice
    map: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.map[a]

    def image(self, mask: int) -> int:
        return to_mask(self.map[a] for a in iter_bits(mask))

    def preimage(self, mask: int) -> int:
        return to_mask(a for a in self.source.elements
                       if mask >> self.map[a] & 1)

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def is_surjective(self) -> bool:
        return set(self.map) == set(self.target.elements)

    def then(self, other: "LatticeMorphism") -> "LatticeMorphism":
        """``other`` after ``self``."""
        return LatticeMorphism(self.source, other.target,
                               tuple(other.map[x] for x in self.map))

    @classmethod
    def identity(cls, l: FiniteLattice) -> "LatticeMorphism":
        return cls(l, l, tuple(l.elements))


def morphism_violation(source: FiniteLattice, target: FiniteLattice, mapping):
    """First broken preservation law as ``(error class, witness)`` or None."""
    f = mapping
    if f[source.bottom] != target.bottom or f[source.top] != target.top:
        return BreaksBounds, (source.bottom, source.top)
    for a in source.elements:
        for b in source.elements:
            if source.leq[a][b] and not target.leq[f[a]][f[b]]:
                return NotMonotone, (a, b)
    for a in source.elements:
        for b in source.elements:
            if f[source.join[a][b]] != target.join[f[a]][f[b]]:
                return BreaksJoin, (a, b)
    for a in source.elements:
        for b in source.elements:
            if f[source.meet[a][b]] != target.meet[f[a]][f[b]]:
                return BreaksMeet, (a, b)
    return None


def validate_morphism(source: FiniteLattice, target: FiniteLattice,
                      mapping) -> LatticeMorphism:
    mapping = tuple(int(x) for x in mapping)
    if len(mapping) != source.size or any(
            not 0 <= x < target.size for x in mapping):
        raise BreaksBounds("map is not total on the source", witness=())
    bad = morphism_violation(source, target, mapping)
    if bad is not None:
        err, w = bad
        raise err(f"{err.__name__} at {w}", witness=w)
    return LatticeMorphism(source, target, mapping)


def enumerate_homomorphisms(source: FiniteLattice,
                            target: FiniteLattice) -> Iterator[LatticeMorphism]:
    """All bounded-lattice homomorphisms, by backtracking over a linear
    extension of the source with join/meet checks against assigned values."""
    n = source.size
    order = sorted(source.elements, key=lambda a: popcount(source.down[a]))
    assign = [-1] * n
    done: list[int] = []

    def consistent(a):
        fa = assign[a]
        for b in done:
            fb = assign[b]
            j, m = source.join[a][b], source.meet[a][b]
            if assign[j] >= 0 and assign[j] != target.join[fa][fb]:
                return False
            if assign[m] >= 0 and assign[m] != target.meet[fa][fb]:
                return False
        # pairs of earlier elements whose join or meet is a
        for b in done:
            for c in done:
                if source.join[b][c] == a and fa != target.join[assign[b]][assign[c]]:
                    return False
                if source.meet[b][c] == a and fa != target.meet[assign[b]][assign[c]]:
                    return False
        return True

    def rec(k):
        if k == n:
            yield LatticeMorphism(source, target, tuple(assign))
            return
        a = order[k]
        if a == source.bottom or a == source.top:
            # both constraints apply when the source is trivial
            choices = [x for x in (target.bottom, target.top)
                       if (a != source.bottom or x == target.bottom)
                       and (a != source.top or x == target.top)][:1]
        else:
            lo = target.bottom
            for b in done:
                if source.leq[b][a]:
                    lo = target.join[lo][assign[b]]
            choices = [x for x in target.elements if target.leq[lo][x]]
        for x in choices:
            assign[a] = x
            if consistent(a):
                done.append(a)
                yield from rec(k + 1)
                done.pop()
            assign[a] = -1

    yield from rec(0)


# -- sublattices -------------------------------------------------------------

def is_sublattice(l: FiniteLattice, mask: int, include_bounds: bool = True) -> bool:
    if mask == 0:
        return False
    if include_bounds and not (mask >> l.bottom & 1 and mask >> l.top & 1):
        return False
    elems = members(mask)
    for a in elems:
        ja, ma = l.join[a], l.meet[a]
        for b in elems:
            if not (mask >> ja[b] & 1 and mask >> ma[b] & 1):
                return False
    return True


def enumerate_sublattices(l: FiniteLattice, include_bounds: bool = True,
                          bound: int | None = None) -> Iterator[int]:
    """All sublattices as masks, largest first, then by bit pattern."""
    limit = bounds.max_lattice() if bound is None else bound
    if l.size > limit:
        raise SizeBound(f"lattice has {l.size} > {limit} elements",
                        witness=(l.size, limit))
    n = l.size
    fixed = (1 << l.bottom) | (1 << l.top) if include_bounds else 0
    free = [a for a in l.elements if not fixed >> a & 1]
    found = []
    for bits in range(1 << len(free)):
        mask = fixed
        for k, a in enumerate(free):
            if bits >> k & 1:
                mask |= 1 << a
        if is_sublattice(l, mask, include_bounds):
            found.append(mask)
    found.sort(key=lambda m: (-popcount(m), bit_pattern(m, n)))
    yield from found


def sublattice(l: FiniteLattice, mask: int) -> tuple[FiniteLattice, LatticeMorphism]:
    """The sublattice on ``mask`` and its inclusion into ``l``."""
    elems = members(mask)
    sub = validate_lattice([[l.leq[a][b] for b in elems] for a in elems],
                           labels=[l.label(a) for a in elems])
    return sub, LatticeMorphism(sub, l, elems)


def is_isomorphic(a: FiniteLattice, b: FiniteLattice) -> bool:
    if a.size != b.size:
        return False
    return any(m.is_injective for m in enumerate_homomorphisms(a, b))
