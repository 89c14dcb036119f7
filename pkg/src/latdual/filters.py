"""Filters and ideals on finite lattices and their classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import bounds
from .errors import (
    EmptySet,
    ImproperFilter,
    LatdualError,
    NotAntichain,
    NotPrime,
    SizeBound,
)
from .order import FiniteLattice, bit_pattern, iter_bits, members, popcount


@dataclass(frozen=True)
class Filter:
    host: FiniteLattice
    mask: int

    def __post_init__(self):
        bad = filter_violation(self.host, self.mask)
        if bad:
            raise LatdualError(f"not a filter: {bad}", witness=(self.mask,))

    @property
    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    @property
    def proper(self) -> bool:
        return not self.mask >> self.host.bottom & 1

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def __len__(self):
        return popcount(self.mask)


@dataclass(frozen=True)
class Ideal:
    host: FiniteLattice
    mask: int

    def __post_init__(self):
        bad = ideal_violation(self.host, self.mask)
        if bad:
            raise LatdualError(f"not an ideal: {bad}", witness=(self.mask,))

    @property
    def members(self) -> tuple[int, ...]:
        return members(self.mask)

    @property
    def proper(self) -> bool:
        return not self.mask >> self.host.top & 1

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)


def filter_violation(l: FiniteLattice, mask: int):
    if mask == 0:
        return "empty"
    if l.upset(mask) != mask:
        return "not upward closed"
    elems = members(mask)
    for a in elems:
        for b in elems:
            if not mask >> l.meet[a][b] & 1:
                return "not closed under meet"
    return None


def ideal_violation(l: FiniteLattice, mask: int):
    if mask == 0:
        return "empty"
    if l.downset(mask) != mask:
        return "not downward closed"
    elems = members(mask)
    for a in elems:
        for b in elems:
            if not mask >> l.join[a][b] & 1:
                return "not closed under join"
    return None


def family_key(l: FiniteLattice):
    n = l.size
    return lambda f: bit_pattern(f.mask if hasattr(f, "mask") else f, n)


@dataclass(frozen=True)
class FilterFamily:
    host: FiniteLattice
    filters: tuple[Filter, ...]

    @classmethod
    def of(cls, host: FiniteLattice, masks: Iterable[int]) -> "FilterFamily":
        uniq = sorted(set(masks), key=family_key(host))
        return cls(host, tuple(Filter(host, m) for m in uniq))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(f.mask for f in self.filters)

    def index(self, mask: int) -> int:
        return self.masks.index(mask)

    def __len__(self):
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def __getitem__(self, k):
        return self.filters[k]


# -- enumeration -------------------------------------------------------------

def _scan_masks(l: FiniteLattice):
    limit = bounds.max_lattice()
    if l.size > limit:
        raise SizeBound(f"subset scan over {l.size} > {limit} elements",
                        witness=(l.size, limit))
    return range(1, 1 << l.size)


def enumerate_filters(l: FiniteLattice, proper_only: bool = True,
                      method: str = "principal") -> FilterFamily:
    """All (proper) filters of ``l`` in canonical order.

    ``method="principal"`` lists the up-sets of single elements, which are
    all the filters of a finite lattice; ``method="scan"`` tests every subset
    and is bounded by the exhaustive size limit.
    """
    if method == "scan":
        found = [m for m in _scan_masks(l) if filter_violation(l, m) is None]
    elif method == "principal":
        found = [l.up[a] for a in l.elements]
    else:
        raise ValueError(f"unknown method {method!r}")
    if proper_only:
        found = [m for m in found if not m >> l.bottom & 1]
    return FilterFamily.of(l, found)


def enumerate_ideals(l: FiniteLattice, proper_only: bool = True,
                     method: str = "principal") -> tuple[Ideal, ...]:
    if method == "scan":
        found = [m for m in _scan_masks(l) if ideal_violation(l, m) is None]
    elif method == "principal":
        found = [l.down[a] for a in l.elements]
    else:
        raise ValueError(f"unknown method {method!r}")
    if proper_only:
        found = [m for m in found if not m >> l.top & 1]
    key = family_key(l)
    return tuple(Ideal(l, m) for m in sorted(set(found), key=key))


# -- primality ---------------------------------------------------------------

def _require_proper(f):
    if not f.proper:
        raise ImproperFilter("predicate needs a proper filter", witness=f.members)


def prime_filter_witness(l: FiniteLattice, mask: int):
    """First pair ``(p, q)`` outside the filter whose join lies inside."""
    outside = members(l.full & ~mask)
    for p in outside:
        jp = l.join[p]
        for q in outside:
            if mask >> jp[q] & 1:
                return (p, q)
    return None


def is_prime_filter(f: Filter) -> bool:
    _require_proper(f)
    return prime_filter_witness(f.host, f.mask) is None


def is_prime_ideal(i: Ideal) -> bool:
    if not i.proper:
        raise ImproperFilter("predicate needs a proper ideal", witness=i.members)
    l = i.host
    outside = members(l.full & ~i.mask)
    return all(not i.mask >> l.meet[p][q] & 1 for p in outside for q in outside)


def prime_filters(l: FiniteLattice) -> FilterFamily:
    """All proper prime filters."""
    fam = enumerate_filters(l, proper_only=True)
    return FilterFamily(l, tuple(f for f in fam if is_prime_filter(f)))


def minimal_prime_witness(f: Filter):
    """Characterized test: first ``p`` in ``f`` with no ``q`` outside ``f``
    such that ``p v q = 1``, or None."""
    l = f.host
    outside = l.full & ~f.mask
    for p in f.members:
        if not l.to_top[p] & outside:
            return (p,)
    return None


def is_minimal_prime(f: Filter, mode: str = "definitional") -> bool:
    _require_proper(f)
    if not is_prime_filter(f):
        raise NotPrime("filter is not prime", witness=f.members)
    if mode == "definitional":
        return not any(g.mask != f.mask and g.mask & ~f.mask == 0
                       for g in prime_filters(f.host))
    if mode == "characterized":
        return minimal_prime_witness(f) is None
    raise ValueError(f"unknown mode {mode!r}")


def minimal_prime_filters(l: FiniteLattice) -> FilterFamily:
    primes = prime_filters(l)
    masks = primes.masks
    keep = [m for m in masks
            if not any(g != m and g & ~m == 0 for g in masks)]
    return FilterFamily.of(l, keep)


def complement_dual(x):
    """Set complement, exchanging proper prime filters and proper prime ideals."""
    l = x.host
    rest = l.full & ~x.mask
    if isinstance(x, Filter):
        if not x.proper or prime_filter_witness(l, x.mask) is not None:
            raise NotPrime("needs a proper prime filter", witness=x.members)
        return Ideal(l, rest)
    if isinstance(x, Ideal):
        if not x.proper or not is_prime_ideal(x):
            raise NotPrime("needs a proper prime ideal", witness=x.members)
        return Filter(l, rest)
    raise TypeError(f"expected Filter or Ideal, got {type(x).__name__}")


def is_maximal_ideal(i: Ideal) -> bool:
    if not i.proper:
        return False
    return not any(j.mask != i.mask and i.mask & ~j.mask == 0
                   for j in enumerate_ideals(i.host, proper_only=True))


# -- complete primality and join-completeness ---------------------------------

def _subset_joins(l: FiniteLattice, elems: list[int]):
    """Joins of all subsets of ``elems``, indexed by subset bitmask."""
    k = len(elems)
    joins = [l.bottom] * (1 << k)
    for s in range(1, 1 << k):
        low = s & -s
        joins[s] = l.join[joins[s ^ low]][elems[low.bit_length() - 1]]
    return joins


def _join_closure(l: FiniteLattice, elems) -> dict[int, tuple[int, ...]]:
    """Every join of a subset of ``elems``, each with one subset producing it.

    Grows the set of reachable joins one element at a time, so it covers all
    subsets without listing them.
    """
    reach = {l.bottom: ()}
    for e in elems:
        for v, sub in list(reach.items()):
            w = l.join[v][e]
            if w not in reach:
                reach[w] = sub + (e,)
    return reach


def completely_prime_witness(f: Filter, mode: str = "definitional"):
    """A subset ``A`` missing ``f`` with join in ``f``, or None.

    ``definitional`` lists every subset of the complement of ``f`` and is
    bounded by host size; ``join_closure`` computes the same set of joins
    without listing subsets and has no bound.
    """
    l = f.host
    outside = members(l.full & ~f.mask)
    if mode == "join_closure":
        hits = [sub for v, sub in _join_closure(l, outside).items()
                if f.mask >> v & 1]
        return min(hits, key=lambda t: (len(t), t)) if hits else None
    if mode != "definitional":
        raise ValueError(f"unknown mode {mode!r}")
    limit = bounds.definitional_bound()
    if l.size > limit:
        raise SizeBound(f"subset quantifier over {l.size} > {limit} elements",
                        witness=(l.size, limit))
    joins = _subset_joins(l, outside)
    for s, j in enumerate(joins):
        if f.mask >> j & 1:
            return tuple(outside[i] for i in iter_bits(s))
    return None


def is_completely_prime(f: Filter, mode: str = "definitional") -> bool:
    _require_proper(f)
    if mode in ("definitional", "join_closure"):
        return completely_prime_witness(f, mode) is None
    if mode == "finite_fast":
        # every subset of a finite lattice is finite, so binary primality
        # already covers arbitrary joins
        return is_prime_filter(f)
    raise ValueError(f"unknown mode {mode!r}")


def is_join_complete(i: Ideal, mode: str = "auto") -> bool:
    """Every subset of ``i`` has its join in ``i``.

    ``definitional`` enumerates the subsets; ``sup`` only asks whether the
    join of the whole ideal belongs to it (finite joins exhaust arbitrary
    ones); ``auto`` is ``sup``.
    """
    l = i.host
    if mode == "auto":
        mode = "sup"
    if mode == "sup":
        return bool(i.mask >> l.join_all(i.members) & 1)
    if mode == "definitional":
        limit = bounds.definitional_bound()
        if l.size > limit:
            raise SizeBound(f"subset quantifier over {l.size} > {limit} elements",
                            witness=(l.size, limit))
        joins = _subset_joins(l, list(i.members))
        return all(i.mask >> j & 1 for j in joins)
    raise ValueError(f"unknown mode {mode!r}")


def maximal_join_complete_ideals(l: FiniteLattice,
                                 mode: str = "auto") -> tuple[Ideal, ...]:
    """Proper join-complete ideals maximal among proper ideals."""
    ideals = enumerate_ideals(l, proper_only=True)
    masks = [i.mask for i in ideals]
    maximal = [i for i in ideals
               if not any(m != i.mask and i.mask & ~m == 0 for m in masks)]
    return tuple(i for i in maximal if is_join_complete(i, mode))


# -- neighbourhoods, families, prefilters --------------------------------------

def neighborhood_filter(x: int, base) -> Filter:
    """Base members containing point ``x`` as a filter on the base lattice.

    ``base`` is a validated base (see ``topology.validate_base``).
    """
    lat = base.lattice
    mask = 0
    for k, u in enumerate(base.opens):
        if u >> x & 1:
            mask |= 1 << k
    return Filter(lat, mask)


def is_antichain(masks) -> bool:
    masks = list(masks)
    return not any(a != b and a & ~b == 0 for a in masks for b in masks)


def large_family_witness(a: FilterFamily):
    """First distinct pair ``(p, q)`` no member separates, or None."""
    l = a.host
    for p in l.elements:
        for q in range(p + 1, l.size):
            if not any((f.mask >> p & 1) != (f.mask >> q & 1) for f in a):
                return (p, q)
    return None


def is_large_family(a: FilterFamily) -> bool:
    if not is_antichain(a.masks):
        raise NotAntichain("family is not an antichain", witness=a.masks)
    for f in a:
        if not f.proper or prime_filter_witness(a.host, f.mask) is not None:
            raise NotPrime("family member is not a proper prime filter",
                           witness=f.members)
    return large_family_witness(a) is None


def is_prefilter(mask: int, l: FiniteLattice) -> bool:
    """Every finite subset has a lower bound other than the bottom."""
    if mask == 0:
        raise EmptySet("prefilter test on the empty set", witness=())
    return l.meet_all(iter_bits(mask)) != l.bottom
