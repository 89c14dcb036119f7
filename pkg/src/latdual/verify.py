"""Theorem suites run over the exhaustive corpus.

Each suite returns checks; a check counts its subjects and keeps every
failure, and its record shows the failure with the smallest subject.
"""

from __future__ import annotations

import itertools
import time
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, NamedTuple

from .corpus import (
    CorpusConfig,
    Subject,
    corpus_lattices,
    corpus_maps,
    corpus_morphisms,
    corpus_spaces,
)
from .duality import (
    epsilon,
    eta,
    extension_count,
    f_i,
    k_f,
    largest_normal_sublattice,
    maruyama_space,
    normal_sublattice_oracle,
    phi_homeo,
    pi_star,
    stone_space,
    wallman,
    weak_stone_cech,
)
from . import bounds
from .errors import LatdualError
from .filters import (
    FilterFamily,
    Ideal,
    complement_dual,
    completely_prime_witness,
    enumerate_filters,
    enumerate_ideals,
    is_antichain,
    is_completely_prime,
    is_join_complete,
    is_maximal_ideal,
    is_minimal_prime,
    is_prefilter,
    is_prime_filter,
    is_prime_ideal,
    large_family_witness,
    maximal_join_complete_ideals,
    minimal_prime_filters,
    prime_filters,
)
from .order import (
    LatticeMorphism,
    coatoms,
    enumerate_homomorphisms,
    enumerate_sublattices,
    is_coatomic,
    is_compatible,
    iter_bits,
    members,
    validate_lattice,
)
from .props import (
    admits_large_minimal_family,
    compact_witness,
    is_boolean,
    is_closed_subfit_morphism,
    is_m_spatial,
    is_normal,
    is_strongly_subfit,
    is_strongly_subfit_morphism,
    is_subfit,
    large_minimal_subfamilies,
    preserves_maximal_join_complete_ideals,
    subfit_coatomic_not_strongly,
    subfit_witness,
)
from .topology import (
    PointMap,
    canonical_filter_map,
    clopen_cozero,
    cozero_sets_by_maps,
    filter_family_space,
    full_base,
    generate_topology,
    is_closed_map,
    is_continuous,
    is_t1,
    map_properties,
    normal_base_predicates,
    separation,
    sobrification,
)


class Record(NamedTuple):
    suite: str
    check: str
    subjects: int
    failures: int
    verdict: str           # pass | fail | info
    subject: str | None    # smallest failing (or reported) subject
    witness: str | None
    seconds: float


@dataclass
class Check:
    suite: str
    name: str
    info: bool = False
    subjects: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    def add(self, subject: Subject, ok: bool, witness=None):
        self.subjects += 1
        if not ok:
            self.failures.append((subject.size, subject.name, witness))

    def note(self, subject: Subject, witness=None):
        """Informational hit, never a failure."""
        self.notes.append((subject.size, subject.name, witness))

    def record(self) -> Record:
        if self.info:
            first = min(self.notes, key=lambda t: (t[0], t[1]), default=None)
            return Record(self.suite, self.name, self.subjects, len(self.notes),
                          "info", first and first[1],
                          None if first is None else _fmt(first[2]), self.seconds)
        if not self.failures:
            return Record(self.suite, self.name, self.subjects, 0, "pass",
                          None, None, self.seconds)
        size, name, w = min(self.failures, key=lambda t: (t[0], t[1]))
        return Record(self.suite, self.name, self.subjects, len(self.failures),
                      "fail", name, _fmt(w), self.seconds)


def _fmt(w) -> str | None:
    if w is None:
        return None
    return repr(w).replace(" ", "")


def _guard(fn, *args):
    """Run a construction; return (value, None) or (None, error text)."""
    try:
        return fn(*args), None
    except LatdualError as e:
        return None, f"{type(e).__name__}{_fmt(e.witness) or ''}"


# -- shared corpus state -------------------------------------------------------

class Context:
    """Corpus plus caches. Explicit ``lattices``/``spaces`` replace the
    generated ones."""

    def __init__(self, cfg: CorpusConfig, lattices=None, spaces=None):
        self.cfg = cfg
        self._wallman = {}
        if lattices is not None:
            self.lattices = tuple(lattices)
        if spaces is not None:
            self.spaces = tuple(spaces)

    @cached_property
    def lattices(self) -> tuple[Subject, ...]:
        return corpus_lattices(self.cfg)

    @cached_property
    def spaces(self) -> tuple[Subject, ...]:
        return corpus_spaces(self.cfg)

    @cached_property
    def morphisms(self) -> tuple[Subject, ...]:
        return tuple(corpus_morphisms(self.lattices, self.cfg.morphism_host_bound))

    @cached_property
    def maps(self) -> tuple[Subject, ...]:
        return tuple(corpus_maps(self.spaces, self.cfg.map_point_bound))

    @cached_property
    def closed_subfit(self) -> tuple[Subject, ...]:
        return tuple(m for m in self.morphisms if is_closed_subfit_morphism(m.value))

    @cached_property
    def t1_spaces(self) -> tuple[Subject, ...]:
        return tuple(s for s in self.spaces if is_t1(s.value))

    @cached_property
    def closed_continuous_t1_maps(self) -> tuple[Subject, ...]:
        return tuple(m for m in self.maps
                     if is_t1(m.value.source) and is_t1(m.value.target)
                     and is_continuous(m.value) and is_closed_map(m.value))

    def wallman(self, l):
        w = self._wallman.get(l)
        if w is None:
            w = self._wallman[l] = wallman(l)
        return w

    def pi_star(self, i: LatticeMorphism) -> PointMap:
        return pi_star(i, self.wallman(i.source), self.wallman(i.target))


Suite = Callable[[Context], list]


@dataclass(frozen=True)
class SuiteSpec:
    id: str
    statement: str
    run: Suite


SUITES: dict[str, SuiteSpec] = {}


class _Checks:
    """Creates checks in order for one suite."""

    def __init__(self, sid: str):
        self.sid = sid
        self.items: list[Check] = []

    def __call__(self, name: str, info: bool = False) -> Check:
        c = Check(self.sid, name, info)
        self.items.append(c)
        return c


def _named(sid, statement):
    def deco(fn):
        def run(ctx):
            checks = _Checks(sid)
            t0 = time.perf_counter()
            fn(ctx, checks)
            total = time.perf_counter() - t0
            for c in checks.items:
                c.seconds = total / max(1, len(checks.items))
            return checks.items
        SUITES[sid] = SuiteSpec(sid, statement, run)
        return fn
    return deco


# -- lattice substrate -----------------------------------------------------------

@_named("lattice-laws",
        "Downset lattices of corpus posets pass lattice validation, and their "
        "join/meet tables equal least upper / greatest lower bounds "
        "recomputed from the order.")
def _lattice_laws(ctx, checks):
    valid = checks("downset-lattice-validates")
    tables = checks("tables-match-order")
    coat = checks("coatoms-have-nothing-above")
    subl = checks("sublattices-closed-with-bounds")
    for s in ctx.lattices:
        l = s.value
        if l.size <= ctx.cfg.max_lattice:
            for m in enumerate_sublattices(l):
                ok = (m >> l.bottom & 1 and m >> l.top & 1 and all(
                    m >> l.join[a][b] & 1 and m >> l.meet[a][b] & 1
                    for a in iter_bits(m) for b in iter_bits(m)))
                subl.add(s, bool(ok), members(m))
        again, err = _guard(validate_lattice, l.leq)
        valid.add(s, again == l, err)
        bad = None
        for a in l.elements:
            for b in l.elements:
                ups = [c for c in l.elements if l.leq[a][c] and l.leq[b][c]]
                lub = [c for c in ups if all(l.leq[c][d] for d in ups)]
                downs = [c for c in l.elements if l.leq[c][a] and l.leq[c][b]]
                glb = [c for c in downs if all(l.leq[d][c] for d in downs)]
                if lub != [l.join[a][b]] or glb != [l.meet[a][b]]:
                    bad = bad or (a, b)
        tables.add(s, bad is None, bad)
        for c in coatoms(l):
            between = [x for x in l.elements if l.lt(c, x) and l.lt(x, l.top)]
            coat.add(s, not between, (c, between))


# -- filters -----------------------------------------------------------------

@_named("complement-duality",
        "Set complement is an involution exchanging proper prime filters with "
        "proper prime ideals, and maximal ideals with minimal prime filters.")
def _complement(ctx, checks):
    inv_f = checks("filter-involution")
    inv_i = checks("ideal-involution")
    exch = checks("primes-exchanged")
    maxmin = checks("maximal-ideals-to-minimal-primes")
    for s in ctx.lattices:
        l = s.value
        pfs = prime_filters(l)
        pis = [i for i in enumerate_ideals(l) if is_prime_ideal(i)]
        for f in pfs:
            i = complement_dual(f)
            ok = i.proper and is_prime_ideal(i) and complement_dual(i) == f
            inv_f.add(s, ok, f.members)
        for i in pis:
            f = complement_dual(i)
            ok = f.proper and is_prime_filter(f) and complement_dual(f) == i
            inv_i.add(s, ok, i.members)
        exch.add(s, {l.full & ~f.mask for f in pfs} == {i.mask for i in pis})
        maximal = {l.full & ~i.mask for i in enumerate_ideals(l) if is_maximal_ideal(i)}
        maxmin.add(s, maximal == set(minimal_prime_filters(l).masks),
                   tuple(sorted(maximal)))


@_named("minimal-prime-modes",
        "Minimality of a prime filter by containment agrees with the test "
        "'every member joins to top with some non-member'.")
def _minimal_modes(ctx, checks):
    agree = checks("definitional-equals-characterized")
    anti = checks("minimal-primes-antichain")
    for s in ctx.lattices:
        l = s.value
        for f in prime_filters(l):
            d = is_minimal_prime(f, "definitional")
            c = is_minimal_prime(f, "characterized")
            agree.add(s, d == c, (f.members, d, c))
        anti.add(s, is_antichain(minimal_prime_filters(l).masks))


@_named("filters",
        "Filter enumeration by principal up-sets equals the subset scan; "
        "complete primality and join-completeness shortcuts agree with subset "
        "quantifiers; maximal join-complete ideals are the principal ideals of "
        "coatoms; completely prime minimal primes are complements of coatom "
        "down-sets.")
def _filters(ctx, checks):
    scan = checks("principal-equals-scan")
    cp = checks("completely-prime-modes")
    cpc = checks("completely-prime-join-closure")
    jc = checks("join-complete-modes")
    mjc = checks("maximal-join-complete-are-coatom-ideals")
    coat = checks("completely-prime-minimal-from-coatom")
    for s in ctx.lattices:
        l = s.value
        if l.size <= bounds.definitional_bound():
            for f in enumerate_filters(l):
                fast = is_completely_prime(f, "finite_fast")
                cp.add(s, is_completely_prime(f, "definitional") == fast, f.members)
        if l.size <= ctx.cfg.max_lattice:
            for proper in (True, False):
                a = enumerate_filters(l, proper, "principal").masks
                b = enumerate_filters(l, proper, "scan").masks
                scan.add(s, a == b)
                ia = [i.mask for i in enumerate_ideals(l, proper, "principal")]
                ib = [i.mask for i in enumerate_ideals(l, proper, "scan")]
                scan.add(s, ia == ib)
            for i in enumerate_ideals(l):
                jc.add(s, is_join_complete(i, "definitional") == is_join_complete(i, "sup"),
                       i.members)
        for f in enumerate_filters(l):
            cpc.add(s, is_completely_prime(f, "join_closure")
                    == is_completely_prime(f, "finite_fast"), f.members)
        expected = sorted(l.down[c] for c in coatoms(l)
                          if is_maximal_ideal(Ideal(l, l.down[c])))
        got = sorted(i.mask for i in maximal_join_complete_ideals(l))
        mjc.add(s, got == expected, (got, expected))
        for f in minimal_prime_filters(l):
            if completely_prime_witness(f, "join_closure") is not None:
                continue
            hit = any(f.mask == l.full & ~l.down[q] for q in coatoms(l))
            coat.add(s, hit, f.members)


# -- lattice predicates -----------------------------------------------------------

@_named("subfit-modes",
        "The pairwise, ordered-pair and minimal-prime-intersection forms of "
        "subfitness agree, and subfitness is equivalent to the minimal primes "
        "forming a large family.")
def _subfit_modes(ctx, checks):
    modes = checks("three-modes-agree")
    large = checks("subfit-iff-large-minimal-family")
    for s in ctx.lattices:
        l = s.value
        v = [subfit_witness(l, m) is None
             for m in ("definitional", "strong_form", "filter_form")]
        modes.add(s, len(set(v)) == 1, tuple(v))
        large.add(s, v[0] == admits_large_minimal_family(l), v[0])


@_named("finite-collapse",
        "A finite lattice is subfit exactly when it is Boolean.")
def _collapse(ctx, checks):
    c = checks("subfit-iff-boolean")
    for s in ctx.lattices:
        l = s.value
        c.add(s, is_subfit(l) == is_boolean(l), (is_subfit(l), is_boolean(l)))


@_named("lattice-predicates",
        "Strongly subfit implies subfit and coatomic; compactness by subset "
        "scan holds on every finite lattice.")
def _lattice_predicates(ctx, checks):
    strong = checks("strongly-subfit-implies-subfit-and-coatomic")
    compact = checks("compact-by-subset-scan")
    for s in ctx.lattices:
        l = s.value
        if is_strongly_subfit(l):
            strong.add(s, is_subfit(l) and is_coatomic(l))
        if l.size <= 16:
            compact.add(s, compact_witness(l) is None)


@_named("charsubfitmorphism",
        "Between strongly subfit lattices a morphism is strongly subfit exactly "
        "when preimages of maximal join-complete ideals are maximal "
        "join-complete; a lattice is m-spatial exactly when strongly subfit, "
        "which for finite lattices is exactly subfit; closed subfit morphisms "
        "are strongly subfit.")
def _charsubfitmorphism(ctx, checks):
    mhom = checks("strongly-subfit-morphism-iff-m-homomorphism")
    msp = checks("m-spatial-iff-strongly-subfit")
    msub = checks("m-spatial-iff-subfit")
    impl = checks("closed-subfit-implies-strongly-subfit")
    strong = {}
    for s in ctx.lattices:
        l = s.value
        m, ss = is_m_spatial(l), is_strongly_subfit(l)
        strong[s.name] = ss
        msp.add(s, m == ss, (m, ss))
        msub.add(s, m == is_subfit(l), m)
    for s in ctx.morphisms:
        i = s.value
        a, b = s.name.split("#")[0].split("->")
        if strong[a] and strong[b]:
            x = is_strongly_subfit_morphism(i)
            y = preserves_maximal_join_complete_ideals(i)
            mhom.add(s, x == y, (x, y))
        if is_closed_subfit_morphism(i):
            impl.add(s, is_strongly_subfit_morphism(i), i.map)


@_named("open-question",
        "Search hook: subfit coatomic lattices that are not strongly subfit "
        "(reported, never asserted).")
def _open_question(ctx, checks):
    c = checks("subfit-coatomic-not-strongly-subfit", info=True)
    for s in ctx.lattices:
        c.subjects += 1
        if subfit_coatomic_not_strongly(s.value):
            c.note(s)


# -- spaces ---------------------------------------------------------------------

def _families(l):
    """Every family of proper filters, with a flag for density (each
    non-bottom element lies in some member)."""
    fs = enumerate_filters(l).masks
    need = l.full & ~(1 << l.bottom)
    for bits in range(1 << len(fs)):
        chosen = [fs[k] for k in iter_bits(bits)]
        cover = 0
        for m in chosen:
            cover |= m
        yield FilterFamily.of(l, chosen), cover & need == need


@_named("separation",
        "A filter-family space is T1 exactly when the family is an antichain. "
        "For dense families it is also T0 with the N_p as a basis, has F in the "
        "closure of N_p exactly when every member of F is compatible with p, "
        "and is Hausdorff exactly when no union of two members is a prefilter.")
def _separation(ctx, checks):
    t0 = checks("t0")
    basis = checks("generators-form-basis")
    t1 = checks("t1-iff-antichain")
    clo = checks("closure-iff-compatible")
    t2 = checks("hausdorff-iff-no-prefilter-union")
    for s in ctx.lattices:
        l = s.value
        if l.size > ctx.cfg.morphism_host_bound:
            continue
        for fam, dense in _families(l):
            fs = filter_family_space(l, fam)
            sp = fs.space
            sep = separation(sp)
            wit = fam.masks
            # T1 iff antichain needs no density
            t1.add(s, sep.T1 == is_antichain(fam.masks), wit)
            if not dense:
                continue
            t0.add(s, sep.T0, wit)
            opens = set()
            for bits in range(1 << l.size):
                u = 0
                for p in iter_bits(bits):
                    u |= fs.generator[p]
                opens.add(u)
            basis.add(s, opens == set(sp.topology), wit)
            ok = True
            for p in l.elements:
                cl = sp.closure(fs.generator[p])
                for k, f in enumerate(fam):
                    compatible = all(is_compatible(q, p, l) for q in f.members)
                    if bool(cl >> k & 1) != compatible:
                        ok = False
            clo.add(s, ok, wit)
            pre = any(is_prefilter(f.mask | g.mask, l)
                      for f, g in itertools.combinations(fam, 2))
            t2.add(s, sep.Hausdorff == (not pre), wit)


@_named("topology",
        "Clopen sets of a finite space form a normal Boolean lattice equal to "
        "the cozero sets; topologies regenerate from themselves; the canonical "
        "filter map is a homeomorphism exactly for T0 spaces.")
def _topology(ctx, checks):
    cz = checks("clopen-equals-cozero")
    cb = checks("clopen-normal-boolean")
    idem = checks("generate-idempotent")
    cfm = checks("canonical-filter-map-homeo-iff-t0")
    cfm_props = checks("canonical-filter-map-open-continuous-surjective")
    for s in ctx.spaces:
        sp = s.value
        q, _ = clopen_cozero(sp)
        cz.add(s, tuple(q.labels) == cozero_sets_by_maps(sp), q.labels)
        cb.add(s, is_normal(q) and is_boolean(q))
        idem.add(s, generate_topology(sp.points, sp.topology) == sp)
        m, _ = canonical_filter_map(sp, full_base(sp))
        props = map_properties(m)
        cfm.add(s, props.homeomorphism == separation(sp).T0)
        cfm_props.add(s, props.open and props.continuous and m.is_surjective)


# -- Wallman space ---------------------------------------------------------------

@_named("compact-t1",
        "The Wallman space of every lattice is T1 (its points form an "
        "antichain), and Hausdorff when the lattice is normal.")
def _compact_t1(ctx, checks):
    t1 = checks("t1")
    anti = checks("points-antichain")
    t2 = checks("normal-implies-hausdorff")
    for s in ctx.lattices:
        l = s.value
        w = ctx.wallman(l)
        sep = separation(w.space)
        t1.add(s, sep.T1)
        anti.add(s, is_antichain(w.family.masks))
        if is_normal(l):
            t2.add(s, sep.Hausdorff)


@_named("counit",
        "p -> N_p is a closed subfit morphism, injective exactly when the "
        "lattice is subfit, and bijective exactly when subfit.")
def _counit(ctx, checks):
    closed = checks("closed-subfit")
    inj = checks("injective-iff-subfit")
    bij = checks("bijective-iff-subfit")
    for s in ctx.lattices:
        l = s.value
        e = epsilon(l, ctx.wallman(l))
        sub = is_subfit(l)
        closed.add(s, is_closed_subfit_morphism(e), e.map)
        inj.add(s, e.is_injective == sub, (e.is_injective, sub))
        bij.add(s, (e.is_injective and e.is_surjective) == sub, e.map)


@_named("normal-basis",
        "For a large family of prime filters, the closed subbase of the family "
        "space is a normal base exactly when the lattice is normal and every "
        "member is a minimal prime.")
def _normal_basis(ctx, checks):
    iff = checks("normal-base-iff-normal-and-minimal")
    wn = checks("weak-normal-iff-normal")
    dj = checks("disjunctive-iff-minimal")
    loose = checks("unrestricted-minimal-family", info=True)
    for s in ctx.lattices:
        l = s.value
        pf = prime_filters(l)
        mins = set(minimal_prime_filters(l).masks)
        normal = is_normal(l)
        for bits in range(1 << len(pf)):
            # largeness alone; antichains are not required here
            fam = FilterFamily(l, tuple(pf[k] for k in iter_bits(bits)))
            if large_family_witness(fam) is not None:
                continue
            fs = filter_family_space(l, fam)
            nb = normal_base_predicates(fs.space, fs.closed_generator)
            minimal = all(m in mins for m in fam.masks)
            iff.add(s, nb.normal_base == (normal and minimal), (fam.masks, nb))
            wn.add(s, nb.weak_normal == normal, fam.masks)
            dj.add(s, nb.disjunctive == minimal, fam.masks)
        # the equivalence read without the largeness hypothesis
        w = ctx.wallman(l)
        nb = normal_base_predicates(w.space, w.closed_generator)
        loose.subjects += 1
        if nb.normal_base != normal:
            loose.note(s, (nb.normal_base, normal))


@_named("wallman-lattice",
        "For a subfit lattice and a large family of minimal primes, the "
        "Z-ultrafilter compactification of the family space is homeomorphic "
        "to the Wallman space via the complement map.")
def _wallman_lattice(ctx, checks):
    homeo = checks("phi-homeomorphism")
    for s in ctx.lattices:
        l = s.value
        if not is_subfit(l):
            continue
        if l.size <= ctx.cfg.morphism_host_bound:
            fams = large_minimal_subfamilies(l)
        else:
            fams = [minimal_prime_filters(l)]
        for fam in fams:
            out, err = _guard(phi_homeo, l, fam)
            if err:
                homeo.add(s, False, err)
                continue
            m = out[0]
            p = map_properties(m)
            homeo.add(s, p.homeomorphism and p.continuous and p.open,
                      (fam.masks, m.map))


# -- reflection ------------------------------------------------------------------

@_named("adj-dual",
        "W and the open-set functor form a contravariant reflection between "
        "compact T1 spaces with closed continuous maps and lattices with closed "
        "subfit morphisms: functor laws, both triangle identities, naturality, "
        "the hom-set bijection, duality on subfit lattices, and the "
        "normal/Hausdorff restriction.")
def _adj_dual(ctx, checks):
    fk = checks("functor-k-composition")
    fk_id = checks("functor-k-identity")
    fp = checks("functor-pi-composition")
    fp_id = checks("functor-pi-identity")
    tri_x = checks("triangle-spaces")
    tri_p = checks("triangle-lattices")
    nat_x = checks("naturality-eta")
    nat_p = checks("naturality-epsilon")
    hom = checks("hom-set-bijection")
    dual_p = checks("duality-epsilon-iso-on-subfit")
    dual_x = checks("duality-eta-homeo-on-compact-t1")
    haus = checks("normal-subfit-wallman-hausdorff")
    norm = checks("hausdorff-space-normal-lattice")
    skipped = checks("non-closed-subfit-excluded", info=True)

    # functor laws on maps
    by_src = defaultdict(list)
    cc = ctx.closed_continuous_t1_maps
    for m in cc:
        by_src[m.name.split("->")[0]].append(m)
    kcache = {m.name: k_f(m.value) for m in cc}
    for f in cc:
        mid = f.name.split("->")[1].split("#")[0]
        for g in by_src[mid]:
            gf = f.value.then(g.value)
            subj = Subject(f"{f.name};{g.name}", None, f.size + g.size)
            want = kcache[g.name].then(kcache[f.name])
            fk.add(subj, k_f(gf) == want, (f.value.map, g.value.map))
    for s in ctx.t1_spaces:
        if s.size <= ctx.cfg.map_point_bound:
            fk_id.add(s, k_f(PointMap.identity(s.value)) == LatticeMorphism.identity(s.value.lattice))

    # functor laws on morphisms
    pis = {}
    keyed = {}
    incoming = defaultdict(list)
    outgoing = defaultdict(list)
    for s in ctx.closed_subfit:
        a, b = s.name.split("#")[0].split("->")
        pis[s.name] = ctx.pi_star(s.value).map
        keyed[(a, b, s.value.map)] = s.name
        incoming[b].append((s, a))
        outgoing[a].append((s, b))
    for s in ctx.morphisms:
        if s.name not in pis:
            skipped.subjects += 1
            skipped.note(s, s.value.map)
    for q, ins in incoming.items():
        outs = outgoing.get(q, [])
        for i, a in ins:
            im, pi_i = i.value.map, pis[i.name]
            for j, c in outs:
                jm = j.value.map
                comp = tuple(jm[x] for x in im)
                name = keyed.get((a, c, comp))
                if name is None:
                    ok, w = False, ("composite-not-closed-subfit", comp)
                else:
                    ok, w = pis[name] == tuple(pi_i[y] for y in pis[j.name]), comp
                if ok:
                    fp.subjects += 1
                else:
                    fp.add(Subject(f"{i.name};{j.name}", None, i.size + j.size), False, w)
    for s in ctx.lattices:
        if s.size <= ctx.cfg.morphism_host_bound:
            w = ctx.wallman(s.value)
            fp_id.add(s, ctx.pi_star(LatticeMorphism.identity(s.value)).map
                      == tuple(range(w.space.points)))

    # triangle identities and duality
    for s in ctx.t1_spaces:
        x = s.value
        e_map, _ = eta(x)
        eps = epsilon(x.lattice, ctx.wallman(x.lattice))
        tri_x.add(s, eps.then(k_f(e_map)) == LatticeMorphism.identity(x.lattice))
        dual_x.add(s, map_properties(e_map).homeomorphism)
    for s in ctx.lattices:
        l = s.value
        w = ctx.wallman(l)
        eps = epsilon(l, w)
        e_map, _ = eta(w.space)
        back = ctx.pi_star(eps)
        tri_p.add(s, e_map.then(back).map == tuple(range(w.space.points)),
                  e_map.then(back).map)
        if is_subfit(l):
            dual_p.add(s, eps.is_injective and eps.is_surjective, eps.map)
            if is_normal(l):
                haus.add(s, separation(w.space).Hausdorff)
    for s in ctx.spaces:
        if separation(s.value).Hausdorff:
            norm.add(s, is_normal(s.value.lattice))

    # naturality
    for f in cc:
        x, y = f.value.source, f.value.target
        ex, _ = eta(x)
        ey, _ = eta(y)
        lhs = f.value.then(ey)
        rhs = ex.then(ctx.pi_star(k_f(f.value)))
        nat_x.add(f, lhs.map == rhs.map, (lhs.map, rhs.map))
    for s in ctx.closed_subfit:
        i = s.value
        ep = epsilon(i.source, ctx.wallman(i.source))
        eq = epsilon(i.target, ctx.wallman(i.target))
        lhs = i.then(eq)
        rhs = ep.then(k_f(ctx.pi_star(i)))
        nat_p.add(s, lhs.map == rhs.map, (lhs.map, rhs.map))

    # hom-set bijection
    small_p = [s for s in ctx.lattices if s.size <= ctx.cfg.morphism_host_bound]
    small_x = [s for s in ctx.t1_spaces if s.size <= ctx.cfg.map_point_bound]
    for xs in small_x:
        x = xs.value
        ex, _ = eta(x)
        for ps in small_p:
            l = ps.value
            w = ctx.wallman(l)
            eps = epsilon(l, w)
            subj = Subject(f"{xs.name}|{ps.name}", None, xs.size + ps.size)
            maps = [PointMap(x, w.space, im) for im in
                    itertools.product(range(w.space.points), repeat=x.points)]
            maps = [g for g in maps if is_continuous(g) and is_closed_map(g)]
            morphs = [i for i in enumerate_homomorphisms(l, x.lattice)
                      if is_closed_subfit_morphism(i)]
            fwd = [eps.then(k_f(g)) for g in maps]
            back = [ex.then(ctx.pi_star(i)) for i in morphs]
            ok = (len(maps) == len(morphs)
                  and sorted(m.map for m in fwd) == sorted(m.map for m in morphs)
                  and all(ex.then(ctx.pi_star(fi)) == g for g, fi in zip(maps, fwd))
                  and all(eps.then(k_f(b)) == i for i, b in zip(morphs, back)))
            hom.add(subj, ok, (len(maps), len(morphs)))


@_named("kf-pistar",
        "Closed continuous maps between T1 spaces give closed subfit k_f; "
        "closed subfit morphisms give closed continuous pi*.")
def _kf_pistar(ctx, checks):
    kf = checks("k_f-closed-subfit")
    pi = checks("pi-star-closed-continuous")
    fi = checks("f_i-closed-continuous-surjective-if-injective")
    for m in ctx.closed_continuous_t1_maps:
        kf.add(m, is_closed_subfit_morphism(k_f(m.value)), m.value.map)
    for s in ctx.closed_subfit:
        p = map_properties(ctx.pi_star(s.value))
        pi.add(s, p.continuous and p.closed, s.value.map)
    normal = {s.value: is_normal(s.value) for s in ctx.lattices
              if s.size <= ctx.cfg.morphism_host_bound}
    for s in ctx.morphisms:
        i = s.value
        if not normal[i.source]:
            continue
        m, err = _guard(f_i, i, ctx.wallman(i.source), ctx.wallman(i.target))
        if err:
            fi.add(s, False, err)
            continue
        p = map_properties(m)
        ok = p.continuous and p.closed and (m.is_surjective or not i.is_injective)
        fi.add(s, ok, i.map)


@_named("stone-dual",
        "The Wallman space embeds in the space of all prime filters as its "
        "set of specialization-minimal points; for normal lattices a "
        "continuous retraction exists; for Boolean lattices the embedding is "
        "a homeomorphism.")
def _stone_dual(ctx, checks):
    emb = checks("iota-embedding-on-subfit")
    emb_all = checks("iota-embedding")
    ret = checks("retraction-on-normal")
    homeo = checks("iota-homeomorphism-on-boolean")
    mins = checks("wallman-equals-min-stone")
    for s in ctx.lattices:
        l = s.value
        st = stone_space(l)
        e = map_properties(st.iota).embedding
        emb_all.add(s, e)
        if is_subfit(l):
            emb.add(s, e)
        if is_normal(l):
            r = st.retraction
            ok = (r is not None and st.iota.then(r).map == tuple(range(r.target.points))
                  and is_continuous(r))
            if ok:
                ir = r.then(st.iota)
                ok = ir.then(ir).map == ir.map
            ret.add(s, ok)
        if is_boolean(l):
            homeo.add(s, map_properties(st.iota).homeomorphism)
        image = 0
        for k in st.iota.map:
            image |= 1 << k
        mins.add(s, image == st.minimal, (members(image), members(st.minimal)))


@_named("stone-cech",
        "For every finite space, W of the clopen lattice with the f_i map is "
        "compact Hausdorff and every continuous map into a discrete space with "
        "at most one more point than the space factors through it uniquely; "
        "for subfit lattices the largest normal sublattice found through "
        "this compactification equals the one found by exhaustive search.")
def _stone_cech(ctx, checks):
    shape = checks("beta-hausdorff-map-surjective-closed-continuous")
    unique = checks("unique-extension")
    brute = checks("unique-extension-brute-force")
    lns = checks("largest-normal-sublattice-construction-equals-oracle")
    emb = checks("largest-normal-sublattice-embeds-all")
    whole = checks("largest-normal-sublattice-is-whole-lattice")
    for s in ctx.spaces:
        sp = s.value
        ws = weak_stone_cech(sp)
        p = map_properties(ws.map)
        shape.add(s, separation(ws.beta.space).Hausdorff and ws.map.is_surjective
                  and p.continuous and p.closed)
        bad = None
        for k in range(sp.points + 2):
            for g in itertools.product(range(k), repeat=sp.points):
                # a map into a discrete space is continuous iff fibres are open
                if not all(sp.is_open(sum(1 << x for x in range(sp.points) if g[x] == v))
                           for v in set(g)):
                    continue
                n = extension_count(ws, g, k)
                if n != 1 and bad is None:
                    bad = (k, g, n)
                if sp.points <= 3:
                    cnt = sum(1 for h in itertools.product(range(k), repeat=ws.beta.space.points)
                              if all(h[ws.map.map[x]] == g[x] for x in range(sp.points)))
                    brute.add(s, cnt == n, (k, g, cnt, n))
        unique.add(s, bad is None, bad)
    for s in ctx.lattices:
        l = s.value
        if not is_subfit(l):
            continue
        got = largest_normal_sublattice(l)
        whole.add(s, got == l.full, members(got))
        if l.size <= ctx.cfg.morphism_host_bound:
            o = normal_sublattice_oracle(l)
            lns.add(s, o.largest == got, (members(got), o.largest))
            emb.add(s, bool(o.embeds_all))


@_named("maruyama",
        "Minimal primes that are completely prime are all the minimal primes, "
        "giving the Wallman space; every finite T0 space is homeomorphic to "
        "its sobrification.")
def _maruyama(ctx, checks):
    eq = checks("maruyama-equals-wallman")
    sob = checks("sobrification-homeomorphism-on-t0")
    modes = checks("sobrification-modes-agree")
    for s in ctx.lattices:
        l = s.value
        m = maruyama_space(l)
        w = ctx.wallman(l)
        eq.add(s, m.family.masks == w.family.masks and m.space == w.space)
    for s in ctx.spaces:
        sp = s.value
        fs, e = sobrification(sp)
        if separation(sp).T0:
            sob.add(s, map_properties(e).homeomorphism)
        fd, _ = sobrification(sp, "definitional")
        modes.add(s, fd.family.masks == fs.family.masks)


@_named("fixtures",
        "Named small cases: W(C3) is one point, W(L5) is the discrete two-point "
        "space, the compactification of X3 is one point, the prime-filter "
        "space of C3 is the Sierpinski space.")
def _fixtures(ctx, checks):
    from . import fixtures as fx
    from .topology import discrete
    c = checks("golden-values")
    cases = [
        ("W(C3)", lambda: wallman(fx.C3).space == discrete(1)),
        ("W(L5)", lambda: wallman(fx.L5).space == discrete(2)),
        ("beta(X3)", lambda: weak_stone_cech(fx.X3).beta.space == discrete(1)),
        ("St(C3)", lambda: stone_space(fx.C3).space.space == fx.SIERPINSKI),
    ]
    for name, fn in cases:
        c.add(Subject(name, None, 0), fn())


ORDER = (
    "lattice-laws", "complement-duality", "minimal-prime-modes", "filters",
    "subfit-modes", "finite-collapse", "lattice-predicates", "separation",
    "topology", "compact-t1", "counit", "normal-basis", "wallman-lattice",
    "adj-dual", "kf-pistar", "charsubfitmorphism", "stone-dual", "stone-cech",
    "maruyama", "fixtures", "open-question",
)


def run_suites(cfg: CorpusConfig, suite: str = "all") -> list[Record]:
    if suite == "all":
        ids = ORDER
    elif suite in SUITES:
        ids = (suite,)
    else:
        raise KeyError(f"unknown suite {suite!r}; choose from all, {', '.join(ORDER)}")
    if cfg.max_poset == 0:
        # no lattice corpus means an empty run, fixtures included
        return []
    return _run(Context(cfg), ids)


def _run(ctx: Context, ids) -> list[Record]:
    out = []
    for sid in ids:
        for c in SUITES[sid].run(ctx):
            if c.subjects or c.failures:
                out.append(c.record())
    return out


def verify_reflection(cfg: CorpusConfig, lattices=None, spaces=None) -> list[Record]:
    """The reflection suite, over the generated corpus or over explicit
    ``(name, value)`` lattices and spaces."""
    def subjects(items, size):
        return None if items is None else [Subject(n, v, size(v)) for n, v in items]
    if lattices is None and spaces is None and cfg.max_poset == 0:
        return []
    ctx = Context(cfg, subjects(lattices, lambda l: l.size),
                  subjects(spaces, lambda x: x.points))
    return _run(ctx, ("adj-dual",))
