"""Predicates on lattices and lattice morphisms.

Each ``*_witness`` function returns the first falsifying tuple in
lexicographic order, or None; the matching ``is_*`` wraps it.
"""

from __future__ import annotations

from . import bounds
from .errors import SizeBound
from .filters import (
    FilterFamily,
    is_large_family,
    maximal_join_complete_ideals,
    minimal_prime_filters,
)
from .order import FiniteLattice, LatticeMorphism, coatoms, is_coatomic, iter_bits, to_mask


# -- subfitness --------------------------------------------------------------

def _separates(l: FiniteLattice, a: int, b: int, candidates: int) -> bool:
    """Some ``c`` in ``candidates`` has ``a v c = 1`` and ``b v c != 1``."""
    return bool(l.to_top[a] & ~l.to_top[b] & candidates)


def subfit_witness(l: FiniteLattice, mode: str = "definitional"):
    full = l.full
    if mode == "definitional":
        for a in l.elements:
            for b in range(a + 1, l.size):
                if not (_separates(l, a, b, full) or _separates(l, b, a, full)):
                    return (a, b)
        return None
    if mode == "strong_form":
        for a in l.elements:
            for b in l.elements:
                if not l.leq[a][b] and not _separates(l, a, b, full):
                    return (a, b)
        return None
    if mode == "filter_form":
        mins = minimal_prime_filters(l).masks
        for a in l.elements:
            meet = full
            for m in mins:
                if m >> a & 1:
                    meet &= m
            if meet != l.up[a]:
                return (a,)
        return None
    raise ValueError(f"unknown mode {mode!r}")


def is_subfit(l: FiniteLattice, mode: str = "definitional") -> bool:
    return subfit_witness(l, mode) is None


def strongly_subfit_witness(l: FiniteLattice):
    cs = to_mask(coatoms(l))
    for a in l.elements:
        for b in range(a + 1, l.size):
            if not (_separates(l, a, b, cs) or _separates(l, b, a, cs)):
                return (a, b)
    return None


def is_strongly_subfit(l: FiniteLattice) -> bool:
    return strongly_subfit_witness(l) is None


# -- normality, compactness, completeness --------------------------------------

def normal_witness(l: FiniteLattice):
    """First distinct ``(p, q)`` with ``p v q = 1`` and no ``r, s`` such that
    ``r ^ s = 0`` and ``r v p = s v q = 1``."""
    for p in l.elements:
        for q in l.elements:
            if p == q or l.join[p][q] != l.top:
                continue
            rs = l.to_top[p]
            ss = l.to_top[q]
            ok = False
            for r in iter_bits(rs):
                mr = l.meet[r]
                if any(mr[s] == l.bottom for s in iter_bits(ss)):
                    ok = True
                    break
            if not ok:
                return (p, q)
    return None


def is_normal(l: FiniteLattice) -> bool:
    return normal_witness(l) is None


def compact_witness(l: FiniteLattice):
    """A subset with join 1 none of whose finite subsets join to 1.

    In a finite lattice the subset itself is finite, so a counterexample
    cannot exist; the scan confirms it for hosts within the bound.
    """
    limit = bounds.definitional_bound()
    if l.size > limit:
        raise SizeBound(f"subset quantifier over {l.size} > {limit} elements",
                        witness=(l.size, limit))
    elems = list(l.elements)
    k = len(elems)
    joins = [l.bottom] * (1 << k)
    for s in range(1, 1 << k):
        low = s & -s
        joins[s] = l.join[joins[s ^ low]][elems[low.bit_length() - 1]]
    for s in range(1 << k):
        if joins[s] != l.top:
            continue
        # look for a finite sub-cover among the sub-masks of s, largest first
        sub = s
        while True:
            if joins[sub] == l.top:
                break
            if sub == 0:
                return tuple(iter_bits(s))
            sub = (sub - 1) & s
    return None


def is_compact_lattice(l: FiniteLattice, mode: str = "finite_fast") -> bool:
    if mode == "definitional":
        return compact_witness(l) is None
    if mode == "finite_fast":
        # every subset of a finite lattice is a finite subset of itself
        return True
    raise ValueError(f"unknown mode {mode!r}")


def is_complete(l: FiniteLattice) -> bool:
    """Every subset has a join and a meet (bottom/top for the empty set).

    Finite lattices always pass; binary tables plus bounds already give
    every finite join and meet.
    """
    return l.size > 0 and all(l.leq[l.bottom][a] and l.leq[a][l.top]
                              for a in l.elements)


def is_boolean(l: FiniteLattice) -> bool:
    return boolean_witness(l) is None


def boolean_witness(l: FiniteLattice):
    for x in l.elements:
        if not any(l.meet[x][y] == l.bottom and l.join[x][y] == l.top
                   for y in l.elements):
            return (x,)
    return None


def is_m_spatial(l: FiniteLattice) -> bool:
    return m_spatial_witness(l) is None


def m_spatial_witness(l: FiniteLattice):
    ideals = [i.mask for i in maximal_join_complete_ideals(l)]
    for a in l.elements:
        for b in l.elements:
            if l.leq[a][b]:
                continue
            if not any(m >> b & 1 and not m >> a & 1 for m in ideals):
                return (a, b)
    return None


def admits_large_minimal_family(l: FiniteLattice) -> bool:
    """Whether the family of all minimal prime filters is large; any large
    family of minimal primes is contained in it, so this decides existence."""
    return is_large_family(minimal_prime_filters(l))


def subfit_coatomic_not_strongly(l: FiniteLattice) -> bool:
    """Search hook: a subfit, coatomic lattice that is not strongly subfit."""
    return is_subfit(l) and is_coatomic(l) and not is_strongly_subfit(l)


# -- morphisms ---------------------------------------------------------------

def _closed_witness(m: LatticeMorphism, qs) -> tuple | None:
    src, tgt = m.source, m.target
    for p in src.elements:
        ip = m.map[p]
        for q in qs:
            if tgt.join[ip][q] != tgt.top:
                continue
            down_q = tgt.down[q]
            if not any(down_q >> m.map[p2] & 1 for p2 in iter_bits(src.to_top[p])):
                return (p, q)
    return None


def closed_subfit_witness(m: LatticeMorphism):
    """First ``(p, q)`` with ``i(p) v q = 1`` admitting no ``p'`` such that
    ``p v p' = 1`` and ``i(p') <= q``."""
    return _closed_witness(m, m.target.elements)


def is_closed_subfit_morphism(m: LatticeMorphism) -> bool:
    return closed_subfit_witness(m) is None


def strongly_subfit_morphism_witness(m: LatticeMorphism):
    return _closed_witness(m, coatoms(m.target))


def is_strongly_subfit_morphism(m: LatticeMorphism) -> bool:
    return strongly_subfit_morphism_witness(m) is None


def preserves_maximal_join_complete_ideals(m: LatticeMorphism) -> bool:
    """Preimage of every maximal join-complete ideal of the target is a
    maximal join-complete ideal of the source."""
    src_ideals = {i.mask for i in maximal_join_complete_ideals(m.source)}
    for i in maximal_join_complete_ideals(m.target):
        if m.preimage(i.mask) not in src_ideals:
            return False
    return True


def large_minimal_subfamilies(l: FiniteLattice):
    """Every subfamily of the minimal primes that is large, canonical order."""
    fam = minimal_prime_filters(l)
    k = len(fam)
    out = []
    for s in range(1 << k):
        sub = FilterFamily(l, tuple(fam[i] for i in range(k) if s >> i & 1))
        if is_large_family(sub):
            out.append(sub)
    return out
