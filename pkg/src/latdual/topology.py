"""Finite topological spaces, continuous maps, bases and related families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import (
    DoesNotGenerate,
    InvalidBase,
    MissingEmpty,
    MissingFull,
    NotClosedSets,
    NotClosedUnderIntersection,
    NotClosedUnderOps,
    NotClosedUnderUnion,
)
from .filters import FilterFamily, completely_prime_witness, neighborhood_filter, prime_filters
from .order import (
    FiniteLattice,
    LatticeMorphism,
    FinitePoset,
    full_mask,
    iter_bits,
    lattice_of_sets,
    members,
    set_family_key,
    to_mask,
)


@dataclass(frozen=True)
class FiniteSpace:
    """Points ``0..points-1``; ``topology`` holds the open sets as masks,
    ordered by size then bit pattern."""

    points: int
    topology: tuple[int, ...]

    @property
    def full(self) -> int:
        return full_mask(self.points)

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.topology)

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted((full & ~u for u in self.topology),
                            key=set_family_key(self.points)))

    @cached_property
    def closed_set(self) -> frozenset[int]:
        return frozenset(self.closed_sets)

    def is_open(self, mask: int) -> bool:
        return mask in self.open_set

    def is_closed(self, mask: int) -> bool:
        return mask in self.closed_set

    @cached_property
    def lattice(self) -> FiniteLattice:
        """The open sets ordered by inclusion; element ``k`` is
        ``topology[k]``."""
        return lattice_of_sets(self.topology)

    def open_index(self, mask: int) -> int:
        return self.topology.index(mask)

    def interior(self, mask: int) -> int:
        out = 0
        for u in self.topology:
            if u & ~mask == 0:
                out |= u
        return out

    def closure(self, mask: int) -> int:
        out = self.full
        for c in self.closed_sets:
            if mask & ~c == 0:
                out &= c
        return out

    @cached_property
    def neighbourhood(self) -> tuple[int, ...]:
        """Smallest open set around each point."""
        out = []
        for x in range(self.points):
            m = self.full
            for u in self.topology:
                if u >> x & 1:
                    m &= u
            out.append(m)
        return tuple(out)


def canonical_family(points: int, family) -> tuple[int, ...]:
    return tuple(sorted(set(family), key=set_family_key(points)))


def validate_topology(points: int, family: Sequence) -> FiniteSpace:
    """Accepts masks or iterables of point indices."""
    masks = set()
    for u in family:
        m = u if isinstance(u, int) else to_mask(u)
        if m >> points:
            raise ValueError(f"subset {members(m)} leaves 0..{points - 1}")
        masks.add(m)
    full = full_mask(points)
    if 0 not in masks:
        raise MissingEmpty("empty set is not open", witness=())
    if full not in masks:
        raise MissingFull("whole space is not open", witness=())
    ordered = canonical_family(points, masks)
    for u in ordered:
        for v in ordered:
            if u | v not in masks:
                raise NotClosedUnderUnion("union missing",
                                          witness=(members(u), members(v)))
    for u in ordered:
        for v in ordered:
            if u & v not in masks:
                raise NotClosedUnderIntersection(
                    "intersection missing", witness=(members(u), members(v)))
    return FiniteSpace(points, ordered)


def generate_topology(points: int, subbase: Sequence) -> FiniteSpace:
    """Least topology containing ``subbase``."""
    full = full_mask(points)
    gens = {u if isinstance(u, int) else to_mask(u) for u in subbase}
    base = {full}
    for g in gens:
        base |= {b & g for b in base}
    opens = {0}
    for b in base:
        opens |= {o | b for o in opens}
    return FiniteSpace(points, canonical_family(points, opens))


def discrete(n: int) -> FiniteSpace:
    return generate_topology(n, [1 << i for i in range(n)])


def indiscrete(n: int) -> FiniteSpace:
    return generate_topology(n, [])


def subspace(s: FiniteSpace, mask: int) -> tuple[FiniteSpace, tuple[int, ...]]:
    """Subspace on ``mask`` (re-indexed) and the list of original points."""
    pts = members(mask)
    opens = set()
    for u in s.topology:
        opens.add(to_mask(k for k, x in enumerate(pts) if u >> x & 1))
    return FiniteSpace(len(pts), canonical_family(len(pts), opens)), pts


# -- separation --------------------------------------------------------------

class Separation(NamedTuple):
    T0: bool
    T1: bool
    Hausdorff: bool
    sober: bool


def is_t0(s: FiniteSpace) -> bool:
    # distinct points have distinct smallest neighbourhoods
    return len(set(s.neighbourhood)) == s.points


def is_t1(s: FiniteSpace) -> bool:
    return all(s.is_open(s.full & ~(1 << x)) for x in range(s.points))


def is_hausdorff(s: FiniteSpace) -> bool:
    nb = s.neighbourhood
    return all(nb[x] & nb[y] == 0
               for x in range(s.points) for y in range(x + 1, s.points))


def irreducible_closed_sets(s: FiniteSpace) -> tuple[int, ...]:
    out = []
    closed = s.closed_sets
    for c in closed:
        if c == 0:
            continue
        proper = [d for d in closed if d != c and d & ~c == 0]
        if not any(a | b == c for a in proper for b in proper):
            out.append(c)
    return tuple(out)


def is_sober(s: FiniteSpace) -> bool:
    closures = [s.closure(1 << x) for x in range(s.points)]
    for c in irreducible_closed_sets(s):
        if closures.count(c) != 1:
            return False
    return True


def separation(s: FiniteSpace) -> Separation:
    return Separation(is_t0(s), is_t1(s), is_hausdorff(s), is_sober(s))


class Specialization(NamedTuple):
    leq: tuple[tuple[bool, ...], ...]
    is_partial_order: bool

    def as_poset(self) -> FinitePoset:
        return FinitePoset(self.leq)


def specialization_order(s: FiniteSpace) -> Specialization:
    """``x <= y`` iff every open set containing ``x`` contains ``y``."""
    nb = s.neighbourhood
    leq = tuple(tuple(bool(nb[x] >> y & 1) for y in range(s.points))
                for x in range(s.points))
    antisym = all(not (leq[x][y] and leq[y][x])
                  for x in range(s.points) for y in range(x + 1, s.points))
    return Specialization(leq, antisym)


def min_points(s: FiniteSpace) -> int:
    """Mask of points minimal under the specialization preorder."""
    leq = specialization_order(s).leq
    out = 0
    for x in range(s.points):
        if all(not leq[y][x] or leq[x][y] for y in range(s.points)):
            out |= 1 << x
    return out


# -- maps --------------------------------------------------------------------

@dataclass(frozen=True)
class PointMap:
    source: FiniteSpace
    target: FiniteSpace
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source.points or any(
                not 0 <= y < self.target.points for y in self.map):
            raise ValueError("point map is not total")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self, mask: int) -> int:
        return to_mask(self.map[x] for x in iter_bits(mask))

    def preimage(self, mask: int) -> int:
        return to_mask(x for x in range(self.source.points)
                       if mask >> self.map[x] & 1)

    def then(self, other: "PointMap") -> "PointMap":
        """``other`` after ``self``."""
        return PointMap(self.source, other.target,
                        tuple(other.map[y] for y in self.map))

    @classmethod
    def identity(cls, s: FiniteSpace) -> "PointMap":
        return cls(s, s, tuple(range(s.points)))

    @property
    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    @property
    def is_surjective(self) -> bool:
        return set(self.map) == set(range(self.target.points))


class MapProperties(NamedTuple):
    continuous: bool
    closed: bool
    open: bool
    embedding: bool
    homeomorphism: bool


def is_continuous(f: PointMap) -> bool:
    return all(f.source.is_open(f.preimage(v)) for v in f.target.topology)


def is_closed_map(f: PointMap) -> bool:
    return all(f.target.is_closed(f.image(c)) for c in f.source.closed_sets)


def is_open_map(f: PointMap) -> bool:
    return all(f.target.is_open(f.image(u)) for u in f.source.topology)


def is_embedding(f: PointMap) -> bool:
    if not (f.is_injective and is_continuous(f)):
        return False
    img = f.image(f.source.full)
    traces = {v & img for v in f.target.topology}
    return all(f.image(u) in traces for u in f.source.topology)


def map_properties(f: PointMap) -> MapProperties:
    cont = is_continuous(f)
    opn = is_open_map(f)
    homeo = f.is_injective and f.is_surjective and cont and opn
    return MapProperties(cont, is_closed_map(f), opn, is_embedding(f), homeo)


def continuous_maps(s: FiniteSpace, t: FiniteSpace):
    """Every continuous map, in lexicographic order of the point arrays."""
    for images in itertools.product(range(t.points), repeat=s.points):
        f = PointMap(s, t, images)
        if is_continuous(f):
            yield f


# -- bases -------------------------------------------------------------------

@dataclass(frozen=True)
class BaseHandle:
    """A base closed under finite unions and intersections.

    ``opens[k]`` is the open set for element ``k`` of ``lattice``;
    ``inclusion`` sends it to its index in the space's topology lattice.
    """

    space: FiniteSpace
    opens: tuple[int, ...]
    lattice: FiniteLattice
    inclusion: LatticeMorphism


def validate_base(s: FiniteSpace, base: Sequence) -> BaseHandle:
    masks = {u if isinstance(u, int) else to_mask(u) for u in base}
    for u in masks:
        if not s.is_open(u):
            raise InvalidBase("base member is not open", witness=(members(u),))
    if 0 not in masks or s.full not in masks:
        raise NotClosedUnderOps("base lacks the empty set or the whole space",
                                witness=())
    for u in masks:
        for v in masks:
            if u | v not in masks or u & v not in masks:
                raise NotClosedUnderOps("base not closed under union/intersection",
                                        witness=(members(u), members(v)))
    for w in s.topology:
        covered = 0
        for u in masks:
            if u & ~w == 0:
                covered |= u
        if covered != w:
            raise DoesNotGenerate("open set is not a union of base members",
                                  witness=(members(w),))
    opens = canonical_family(s.points, masks)
    lat = lattice_of_sets(opens)
    inc = LatticeMorphism(lat, s.lattice, tuple(s.open_index(u) for u in opens))
    return BaseHandle(s, opens, lat, inc)


def full_base(s: FiniteSpace) -> BaseHandle:
    return validate_base(s, s.topology)


# -- interior / closure / regular opens ------------------------------------------

class InteriorClosure(NamedTuple):
    interior: int
    closure: int
    regularization: int


def interior_closure(s: FiniteSpace, mask: int) -> InteriorClosure:
    cl = s.closure(mask)
    return InteriorClosure(s.interior(mask), cl, s.interior(cl))


def regular_opens(s: FiniteSpace) -> tuple[int, ...]:
    return tuple(u for u in s.topology if s.interior(s.closure(u)) == u)


# -- clopens and cozero sets ---------------------------------------------------

def clopen_cozero(s: FiniteSpace) -> tuple[FiniteLattice, LatticeMorphism]:
    """The clopen sets as a bounded sublattice of the topology lattice.

    On a finite space these are exactly the cozero sets: a continuous map to
    [0, 1] takes finitely many values, each fibre is closed as a preimage of a
    point and open as the complement of finitely many closed fibres, so the
    zero set is clopen; conversely the indicator of a clopen set is continuous.
    """
    clopens = [u for u in s.topology if s.is_closed(u)]
    lat = lattice_of_sets(clopens)
    return lat, LatticeMorphism(lat, s.lattice,
                                tuple(s.open_index(u) for u in clopens))


def cozero_sets_by_maps(s: FiniteSpace) -> tuple[int, ...]:
    """Cozero sets computed from maps into a finite grid of [0, 1].

    A finite subset of the reals is discrete, so a map onto grid values is
    continuous iff every fibre is open. Grid value 0 marks the zero set.
    """
    n = s.points
    found = set()
    for values in itertools.product(range(n + 1), repeat=n):
        fibres = {}
        for x, v in enumerate(values):
            fibres[v] = fibres.get(v, 0) | 1 << x
        if all(s.is_open(m) for m in fibres.values()):
            zero = fibres.get(0, 0)
            found.add(s.full & ~zero)
    if n == 0:
        found.add(0)
    return canonical_family(n, found)


# -- spaces of filters ---------------------------------------------------------

@dataclass(frozen=True)
class FamilySpace:
    """The space of a filter family with opens generated by the sets N_p.

    ``generator[p]`` is the mask of family members containing ``p``;
    ``closed_generator[p]`` is its complement.
    """

    lattice: FiniteLattice
    family: FilterFamily
    space: FiniteSpace
    generator: tuple[int, ...]

    @property
    def closed_generator(self) -> tuple[int, ...]:
        full = self.space.full
        return tuple(full & ~g for g in self.generator)

    def open_of(self, p: int) -> int:
        """Index of N_p in the topology."""
        return self.space.open_index(self.generator[p])


def filter_family_space(l: FiniteLattice, a: FilterFamily) -> FamilySpace:
    gen = tuple(to_mask(k for k, f in enumerate(a) if f.mask >> p & 1)
                for p in l.elements)
    space = generate_topology(len(a), gen)
    return FamilySpace(l, a, space, gen)


def canonical_filter_map(s: FiniteSpace, base: BaseHandle) -> tuple[PointMap, FamilySpace]:
    """``x`` goes to its filter of base neighbourhoods."""
    if base.space != s:
        raise InvalidBase("base belongs to another space", witness=())
    masks = [neighborhood_filter(x, base).mask for x in range(s.points)]
    fam = FilterFamily.of(base.lattice, masks)
    fs = filter_family_space(base.lattice, fam)
    return PointMap(s, fs.space, tuple(fam.index(m) for m in masks)), fs


# -- sobrification -------------------------------------------------------------

def sobrification(s: FiniteSpace, mode: str = "finite_fast") -> tuple[FamilySpace, PointMap]:
    """Completely prime filters of the topology and the point embedding.

    ``mode="definitional"`` decides complete primality by the subset
    quantifier; ``finite_fast`` uses binary primality.
    """
    lat = s.lattice
    primes = prime_filters(lat)
    if mode == "definitional":
        keep = [f.mask for f in primes if completely_prime_witness(f) is None]
    elif mode == "finite_fast":
        keep = list(primes.masks)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    fam = FilterFamily.of(lat, keep)
    fs = filter_family_space(lat, fam)
    nbhd = [to_mask(k for k, u in enumerate(s.topology) if u >> x & 1)
            for x in range(s.points)]
    return fs, PointMap(s, fs.space, tuple(fam.index(m) for m in nbhd))


# -- Frink bases ---------------------------------------------------------------

class NormalBase(NamedTuple):
    weak_normal: bool
    disjunctive: bool
    base_for_closed: bool
    normal_base: bool


def _is_bounded_sublattice_of_sets(full: int, z: set[int]) -> bool:
    if 0 not in z or full not in z:
        return False
    return all(a | b in z and a & b in z for a in z for b in z)


def is_weak_normal(s: FiniteSpace, z) -> bool:
    z = set(z)
    full = s.full
    if not _is_bounded_sublattice_of_sets(full, z):
        return False
    comps = [full & ~c for c in z]
    for a in z:
        for b in z:
            if a & b:
                continue
            if not any(a & ~c1 == 0 and b & ~d1 == 0 and c1 & d1 == 0
                       for c1 in comps for d1 in comps):
                return False
    return True


def is_disjunctive(s: FiniteSpace, z) -> bool:
    z = list(z)
    for x in range(s.points):
        for f in s.closed_sets:
            if f >> x & 1:
                continue
            if not any(a >> x & 1 and a & f == 0 for a in z):
                return False
    return True


def is_closed_base(s: FiniteSpace, z) -> bool:
    z = list(z)
    for c in s.closed_sets:
        meet = s.full
        for a in z:
            if c & ~a == 0:
                meet &= a
        if meet != c:
            return False
    return True


def normal_base_predicates(s: FiniteSpace, z) -> NormalBase:
    z = {u if isinstance(u, int) else to_mask(u) for u in z}
    for c in z:
        if not s.is_closed(c):
            raise NotClosedSets("family member is not closed", witness=(members(c),))
    wn = is_weak_normal(s, z)
    dj = is_disjunctive(s, z)
    bc = is_closed_base(s, z)
    return NormalBase(wn, dj, bc, wn and dj and bc)

