"""Point spaces of lattices, lattices of spaces, and the maps between them.

Spaces built from a filter family keep the family's canonical order as their
point order, so equality of maps is equality of index arrays.
"""

from __future__ import annotations

from typing import NamedTuple

from . import bounds
from .errors import (
    InvalidBase,
    LatdualError,
    NotClosedMap,
    NotClosedSubfit,
    NotContinuous,
    NotLarge,
    NotPrime,
    NotSubfit,
    NotT1,
    NotWeakNormal,
    SourceNotNormal,
)
from .filters import (
    FilterFamily,
    completely_prime_witness,
    enumerate_filters,
    enumerate_ideals,
    is_large_family,
    minimal_prime_filters,
    prime_filters,
)
from .order import (
    FiniteLattice,
    LatticeMorphism,
    enumerate_homomorphisms,
    enumerate_sublattices,
    iter_bits,
    lattice_of_sets,
    members,
    sublattice,
    to_mask,
    validate_morphism,
)
from .props import closed_subfit_witness, is_normal, is_subfit
from .topology import (
    BaseHandle,
    FamilySpace,
    FiniteSpace,
    PointMap,
    canonical_family,
    clopen_cozero,
    filter_family_space,
    full_base,
    generate_topology,
    is_closed_map,
    is_continuous,
    is_t1,
    is_weak_normal,
    min_points,
)


# -- Wallman space -------------------------------------------------------------

class WallmanSpace(FamilySpace):
    """The minimal prime filters of ``host`` with opens generated by N_p."""

    @property
    def host(self) -> FiniteLattice:
        return self.lattice

    @property
    def points(self) -> FilterFamily:
        return self.family


def wallman(l: FiniteLattice) -> WallmanSpace:
    fs = filter_family_space(l, minimal_prime_filters(l))
    return WallmanSpace(fs.lattice, fs.family, fs.space, fs.generator)


def epsilon(l: FiniteLattice, w: WallmanSpace | None = None) -> LatticeMorphism:
    """``p`` goes to N_p in the topology lattice of the Wallman space."""
    w = wallman(l) if w is None else w
    return validate_morphism(l, w.space.lattice,
                             [w.open_of(p) for p in l.elements])


def eta(s: FiniteSpace, base: BaseHandle | None = None) -> tuple[PointMap, WallmanSpace]:
    """``x`` goes to its filter of base neighbourhoods, a point of W(base)."""
    if not is_t1(s):
        raise NotT1("eta needs a T1 space", witness=())
    base = full_base(s) if base is None else base
    if base.space != s:
        raise InvalidBase("base belongs to another space", witness=())
    w = wallman(base.lattice)
    index = {m: k for k, m in enumerate(w.family.masks)}
    images = []
    for x in range(s.points):
        fx = to_mask(k for k, u in enumerate(base.opens) if u >> x & 1)
        if fx not in index:
            raise LatdualError("neighbourhood filter is not minimal prime",
                               witness=(x, members(fx)))
        images.append(index[fx])
    return PointMap(s, w.space, tuple(images)), w


def k_f(f: PointMap) -> LatticeMorphism:
    """``V`` goes to its preimage, from the target's opens to the source's."""
    if not is_t1(f.source) or not is_t1(f.target):
        raise NotT1("k_f needs T1 spaces", witness=())
    if not is_continuous(f):
        raise NotContinuous("map is not continuous", witness=f.map)
    if not is_closed_map(f):
        raise NotClosedMap("map is not closed", witness=f.map)
    src, tgt = f.source, f.target
    return LatticeMorphism(tgt.lattice, src.lattice,
                           tuple(src.open_index(f.preimage(v)) for v in tgt.topology))


def pi_star(i: LatticeMorphism, ws: WallmanSpace | None = None,
            wt: WallmanSpace | None = None) -> PointMap:
    """``F`` goes to its preimage, from W(target) to W(source)."""
    bad = closed_subfit_witness(i)
    if bad is not None:
        raise NotClosedSubfit("morphism is not closed subfit", witness=bad)
    ws = wallman(i.source) if ws is None else ws
    wt = wallman(i.target) if wt is None else wt
    index = {m: k for k, m in enumerate(ws.family.masks)}
    images = []
    for g in wt.family.masks:
        pre = i.preimage(g)
        if pre not in index:
            raise LatdualError("preimage is not a minimal prime filter",
                               witness=members(pre))
        images.append(index[pre])
    return PointMap(wt.space, ws.space, tuple(images))


def f_i_filter(i: LatticeMorphism, mask: int) -> int:
    """``{q : i(q) in F and i(r) not in F for some r with q v r = 1}``."""
    q_lat = i.source
    outside = to_mask(r for r in q_lat.elements if not mask >> i.map[r] & 1)
    return to_mask(q for q in q_lat.elements
                   if mask >> i.map[q] & 1 and q_lat.to_top[q] & outside)


def f_i(i: LatticeMorphism, ws: WallmanSpace | None = None,
        wt: WallmanSpace | None = None) -> PointMap:
    """The map W(target) -> W(source) for a morphism with normal source."""
    if not is_normal(i.source):
        raise SourceNotNormal("source lattice is not normal", witness=())
    ws = wallman(i.source) if ws is None else ws
    wt = wallman(i.target) if wt is None else wt
    index = {m: k for k, m in enumerate(ws.family.masks)}
    images = []
    for g in wt.family.masks:
        img = f_i_filter(i, g)
        if img not in index:
            raise LatdualError("image is not a minimal prime filter",
                               witness=members(img))
        images.append(index[img])
    return PointMap(wt.space, ws.space, tuple(images))


# -- Stone space -----------------------------------------------------------------

class StoneSpace(NamedTuple):
    space: FamilySpace
    wallman: WallmanSpace
    iota: PointMap
    retraction: PointMap | None
    minimal: int


def retraction_filter(l: FiniteLattice, mask: int) -> int:
    """``{p in x : p v q = 1 for some q not in x}``."""
    outside = l.full & ~mask
    return to_mask(p for p in iter_bits(mask) if l.to_top[p] & outside)


def stone_space(l: FiniteLattice) -> StoneSpace:
    """All prime filters with opens generated by the membership sets.

    The retraction is built only for normal lattices.
    """
    st = filter_family_space(l, prime_filters(l))
    w = wallman(l)
    index = {m: k for k, m in enumerate(st.family.masks)}
    iota = PointMap(w.space, st.space, tuple(index[m] for m in w.family.masks))
    retr = None
    if is_normal(l):
        windex = {m: k for k, m in enumerate(w.family.masks)}
        imgs = []
        for m in st.family.masks:
            r = retraction_filter(l, m)
            if r not in windex:
                raise LatdualError("retraction left the minimal primes",
                                   witness=members(m))
            imgs.append(windex[r])
        retr = PointMap(st.space, w.space, tuple(imgs))
    return StoneSpace(st, w, iota, retr, min_points(st.space))


# -- ideal completion ----------------------------------------------------------

class IdealCompletion(NamedTuple):
    lattice: FiniteLattice
    embedding: LatticeMorphism
    j: LatticeMorphism | None


def ideal_completion(l: FiniteLattice, base: BaseHandle | None = None) -> IdealCompletion:
    """Ideals by inclusion, the principal embedding and, for a base of a
    space, the union map onto its topology lattice."""
    if base is not None and not isinstance(base, BaseHandle):
        raise InvalidBase("expected a validated base", witness=())
    if base is not None and base.lattice != l:
        raise InvalidBase("base lattice differs from the given lattice", witness=())
    ideals = [i.mask for i in enumerate_ideals(l, proper_only=False)]
    idl = lattice_of_sets(ideals)
    pos = {m: k for k, m in enumerate(ideals)}
    emb = validate_morphism(l, idl, [pos[l.down[a]] for a in l.elements])
    j = None
    if base is not None:
        s = base.space
        imgs = []
        for m in ideals:
            u = 0
            for k in iter_bits(m):
                u |= base.opens[k]
            imgs.append(s.open_index(u))
        j = validate_morphism(idl, s.lattice, imgs)
    return IdealCompletion(idl, emb, j)


# -- Frink compactification ----------------------------------------------------

class FrinkSpace(NamedTuple):
    z: tuple[int, ...]            # the closed-set family, canonical order
    ultrafilters: tuple[int, ...]  # masks over indices of ``z``
    space: FiniteSpace
    map: PointMap


def z_ultrafilters(points: int, z: tuple[int, ...]) -> tuple[int, ...]:
    lat = lattice_of_sets(z)
    proper = enumerate_filters(lat, proper_only=True).masks
    return tuple(m for m in proper
                 if not any(o != m and m & ~o == 0 for o in proper))


def frink_wallman(s: FiniteSpace, z) -> FrinkSpace:
    """Z-ultrafilters with opens generated by W_Z(U), ``X \\ U`` in Z.

    A point goes to ``{C in Z : x in C}``; when that Z-filter is not maximal
    it goes to the unique Z-ultrafilter above it.
    """
    z = canonical_family(s.points, {u if isinstance(u, int) else to_mask(u) for u in z})
    if not is_weak_normal(s, z):
        raise NotWeakNormal("family is not weak normal", witness=tuple(map(members, z)))
    ufs = z_ultrafilters(s.points, z)
    full = s.full
    gens = []
    for c in z:
        u = full & ~c
        gens.append(to_mask(k for k, f in enumerate(ufs)
                            if any(z[a] & ~u == 0 for a in iter_bits(f))))
    space = generate_topology(len(ufs), gens)
    images = []
    for x in range(s.points):
        fx = to_mask(a for a, c in enumerate(z) if c >> x & 1)
        above = [k for k, f in enumerate(ufs) if fx & ~f == 0]
        if len(above) != 1:
            raise LatdualError("point filter has no unique Z-ultrafilter",
                               witness=(x, len(above)))
        images.append(above[0])
    return FrinkSpace(z, ufs, space, PointMap(s, space, tuple(images)))


def phi_homeo(l: FiniteLattice, a: FilterFamily) -> tuple[PointMap, FrinkSpace, WallmanSpace]:
    """The map from W(sigma, A) to W(l) sending a Z-ultrafilter F to the
    complement of ``{p : X \\ N_p in F}``."""
    if not is_subfit(l):
        raise NotSubfit("lattice is not subfit", witness=())
    if not is_large_family(a):
        raise NotLarge("family is not large", witness=a.masks)
    w = wallman(l)
    windex = {m: k for k, m in enumerate(w.family.masks)}
    for f in a:
        if f.mask not in windex:
            raise NotPrime("family member is not minimal prime", witness=f.members)
    fam = filter_family_space(l, a)
    sigma = fam.closed_generator
    frink = frink_wallman(fam.space, sigma)
    zpos = {c: k for k, c in enumerate(frink.z)}
    images = []
    for uf in frink.ultrafilters:
        ideal = to_mask(p for p in l.elements if uf >> zpos[sigma[p]] & 1)
        comp = l.full & ~ideal
        if comp not in windex:
            raise LatdualError("complement is not a minimal prime filter",
                               witness=members(comp))
        images.append(windex[comp])
    return PointMap(frink.space, w.space, tuple(images)), frink, w


# -- weak Stone-Cech compactification --------------------------------------------

class WeakStoneCech(NamedTuple):
    beta: WallmanSpace
    map: PointMap
    inclusion: LatticeMorphism


def weak_stone_cech(s: FiniteSpace) -> WeakStoneCech:
    """W of the clopen (= cozero) lattice, with ``x`` going to f_i of its
    neighbourhood filter along the clopen inclusion."""
    q, inc = clopen_cozero(s)
    beta = wallman(q)
    index = {m: k for k, m in enumerate(beta.family.masks)}
    images = []
    for x in range(s.points):
        fx = to_mask(k for k, u in enumerate(s.topology) if u >> x & 1)
        images.append(index[f_i_filter(inc, fx)])
    return WeakStoneCech(beta, PointMap(s, beta.space, tuple(images)), inc)


def extension_count(ws: WeakStoneCech, g: tuple[int, ...], k: int) -> int:
    """Number of maps h from beta to the discrete ``k``-point space with
    ``h . map = g``; beta is discrete, so every h is continuous."""
    forced: dict[int, int] = {}
    for x, b in enumerate(ws.map.map):
        if forced.setdefault(b, g[x]) != g[x]:
            return 0
    free = ws.beta.space.points - len(forced)
    return k ** free


# -- largest normal sublattice -------------------------------------------------

def largest_normal_sublattice(l: FiniteLattice) -> int:
    """Elements of ``l`` matching opens of beta W(l) pulled back to W(l)."""
    if not is_subfit(l):
        raise NotSubfit("lattice is not subfit", witness=())
    w = wallman(l)
    eps = epsilon(l, w)
    ws = weak_stone_cech(w.space)
    kf = k_f(ws.map)
    image = set(kf.map)
    return to_mask(p for p in l.elements if eps.map[p] in image)


class NormalSublatticeOracle(NamedTuple):
    normal: tuple[int, ...]   # every normal bounded sublattice, largest first
    largest: int | None       # the one containing all others, if any
    embeds_all: bool | None   # every normal sublattice embeds in ``largest``


def normal_sublattice_oracle(l: FiniteLattice, embed_bound: int = 8) -> NormalSublatticeOracle:
    normal = tuple(m for m in enumerate_sublattices(l)
                   if is_normal(sublattice(l, m)[0]))
    largest = None
    for m in normal:
        if all(o & ~m == 0 for o in normal):
            largest = m
            break
    embeds = None
    if largest is not None and l.size <= embed_bound:
        big = sublattice(l, largest)[0]
        embeds = all(any(h.is_injective for h in
                         enumerate_homomorphisms(sublattice(l, m)[0], big))
                     for m in normal)
    return NormalSublatticeOracle(normal, largest, embeds)


# -- Maruyama space ------------------------------------------------------------

def maruyama_space(l: FiniteLattice, mode: str = "auto") -> FamilySpace:
    """Minimal prime filters that are completely prime, topologized by N_p.

    ``auto`` lists subsets up to the definitional bound and switches to the
    join-closure computation above it.
    """
    if mode == "auto":
        mode = "definitional" if l.size <= bounds.definitional_bound() else "join_closure"
    keep = [f.mask for f in minimal_prime_filters(l)
            if completely_prime_witness(f, mode) is None]
    return filter_family_space(l, FilterFamily.of(l, keep))


__all__ = [
    "WallmanSpace", "wallman", "epsilon", "eta", "k_f", "pi_star", "f_i",
    "f_i_filter", "StoneSpace", "stone_space", "retraction_filter",
    "IdealCompletion", "ideal_completion", "FrinkSpace", "frink_wallman",
    "z_ultrafilters", "phi_homeo", "WeakStoneCech", "weak_stone_cech",
    "extension_count", "largest_normal_sublattice", "NormalSublatticeOracle",
    "normal_sublattice_oracle", "maruyama_space",
]
