import itertools

import pytest
from hypothesis import given

from latdual import fixtures as fx
from latdual.duality import (
    epsilon,
    eta,
    extension_count,
    f_i,
    frink_wallman,
    ideal_completion,
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
from latdual.errors import NotClosedSubfit, NotSubfit, NotT1, SourceNotNormal
from latdual.filters import minimal_prime_filters
from latdual.order import LatticeMorphism, is_isomorphic, validate_morphism
from latdual.props import is_closed_subfit_morphism, is_normal, is_subfit
from latdual.topology import (
    PointMap,
    clopen_cozero,
    discrete,
    full_base,
    map_properties,
    separation,
)

from .conftest import lattices, spaces


def test_wallman_examples():
    assert wallman(fx.C3).space == discrete(1)
    assert wallman(fx.B2).space == fx.D2
    w = wallman(fx.L5)
    assert w.space == fx.D2
    assert w.points.masks == (0b11000, 0b10100)  # F_ab, F_bc
    assert w.open_of(1) == 0                     # N_{b} is empty


def test_epsilon_examples():
    e = epsilon(fx.B2)
    assert e.is_injective and e.is_surjective
    assert epsilon(fx.C3).map == (0, 0, 1)
    triv = epsilon(fx.C1)
    assert triv.target.size == 1 and wallman(fx.C1).space.points == 0


@pytest.mark.parametrize("name", ["D2", "D3"])
def test_eta_examples(name):
    sp = fx.SPACES[name]
    m, _ = eta(sp)
    assert map_properties(m).homeomorphism
    assert eta(sp, full_base(sp))[0] == m


def test_eta_needs_t1():
    with pytest.raises(NotT1):
        eta(fx.SIERPINSKI)


def test_k_f_examples():
    assert k_f(PointMap.identity(fx.D2)) == LatticeMorphism.identity(fx.D2.lattice)
    const = k_f(PointMap(fx.D2, fx.D1, (0, 0)))
    assert const.source.size == 2 and const.map == (0, fx.D2.open_index(0b11))
    assert is_closed_subfit_morphism(k_f(PointMap(fx.D3, fx.D2, (0, 1, 1))))


def test_pi_star_examples():
    assert pi_star(LatticeMorphism.identity(fx.B2)).map == (0, 1)
    p = pi_star(epsilon(fx.C3))
    assert (p.source.points, p.target.points, p.map) == (1, 1, (0,))
    inc = validate_morphism(fx.C2, fx.B2, (0, 3))
    p = pi_star(inc)
    assert p.map == (0, 0)
    assert map_properties(p).continuous and map_properties(p).closed


def test_pi_star_needs_closed_subfit():
    with pytest.raises(NotClosedSubfit):
        pi_star(validate_morphism(fx.C3, fx.C2, (0, 1, 1)))


def test_f_i_examples():
    q, inc = clopen_cozero(fx.X3)
    assert f_i(inc).map == (0, 0)
    assert f_i(LatticeMorphism.identity(fx.B2)).map == (0, 1)
    assert f_i(validate_morphism(fx.C2, fx.C3, (0, 2))).map == (0,)
    with pytest.raises(SourceNotNormal):
        f_i(LatticeMorphism.identity(fx.L5))


def test_stone_space_examples():
    st = stone_space(fx.C3)
    assert st.space.space == fx.SIERPINSKI
    assert st.space.family.masks == (0b100, 0b110)
    assert st.minimal == 0b01 and st.iota.map == (0,)
    st = stone_space(fx.B2)
    assert map_properties(st.iota).homeomorphism
    st = stone_space(fx.L5)
    assert st.space.family.masks == (0b11000, 0b10100, 0b11110)
    assert st.minimal == 0b011 and st.retraction is None


def test_ideal_completion_examples():
    assert is_isomorphic(ideal_completion(fx.C3).lattice, fx.C3)
    assert is_isomorphic(ideal_completion(fx.B2).lattice, fx.B2)
    ic = ideal_completion(fx.L5, full_base(fx.X3))
    assert ic.j.is_surjective and ic.j.is_injective


def test_frink_examples():
    assert frink_wallman(fx.D2, [0, 1, 2, 3]).space == fx.D2
    assert frink_wallman(fx.X3, [0, 0b111]).space == discrete(1)
    assert frink_wallman(fx.D1, [0, 1]).space == fx.D1


@pytest.mark.parametrize("name,points", [("B2", 2), ("B3", 3), ("C2", 1)])
def test_phi_homeo_examples(name, points):
    l = fx.LATTICES[name]
    m, _, w = phi_homeo(l, minimal_prime_filters(l))
    assert map_properties(m).homeomorphism and w.space.points == points


def test_phi_homeo_needs_subfit():
    with pytest.raises(NotSubfit):
        phi_homeo(fx.C3, minimal_prime_filters(fx.C3))


def test_weak_stone_cech_examples():
    ws = weak_stone_cech(fx.X3)
    assert ws.beta.space == discrete(1) and ws.map.map == (0, 0, 0)
    ws = weak_stone_cech(fx.D2)
    assert ws.beta.space == fx.D2 and ws.map.map == (0, 1)
    assert weak_stone_cech(fx.SIERPINSKI).beta.space == discrete(1)


@pytest.mark.parametrize("name", ["B2", "B3", "C2"])
def test_largest_normal_sublattice_examples(name):
    l = fx.LATTICES[name]
    assert largest_normal_sublattice(l) == l.full
    assert normal_sublattice_oracle(l).largest == l.full


@pytest.mark.parametrize("name", ["B2", "C3", "L5"])
def test_maruyama_examples(name):
    l = fx.LATTICES[name]
    m, w = maruyama_space(l), wallman(l)
    assert m.family == w.family and m.space == w.space


@given(lattices())
def test_wallman_is_t1_and_counit_closed_subfit(l):
    w = wallman(l)
    assert separation(w.space).T1
    e = epsilon(l, w)
    assert is_closed_subfit_morphism(e)
    assert e.is_injective == is_subfit(l) == (e.is_injective and e.is_surjective)
    if is_normal(l):
        assert separation(w.space).Hausdorff


@given(lattices())
def test_triangle_on_lattices(l):
    w = wallman(l)
    e, _ = eta(w.space)
    assert e.then(pi_star(epsilon(l, w))).map == tuple(range(w.space.points))


@given(lattices())
def test_wallman_is_minimum_of_stone_space(l):
    st = stone_space(l)
    image = sum(1 << k for k in st.iota.map)
    assert image == st.minimal
    if st.retraction is not None:
        assert st.iota.then(st.retraction).map == tuple(range(st.wallman.space.points))


@given(spaces(max_points=4))
def test_stone_cech_universal_property_brute_force(sp):
    ws = weak_stone_cech(sp)
    nb = ws.beta.space.points
    for k in range(sp.points + 2):
        for g in itertools.product(range(k), repeat=sp.points):
            if not all(sp.is_open(sum(1 << x for x in range(sp.points) if g[x] == v))
                       for v in set(g)):
                continue
            brute = sum(1 for h in itertools.product(range(k), repeat=nb)
                        if all(h[ws.map.map[x]] == g[x] for x in range(sp.points)))
            assert brute == extension_count(ws, g, k) == 1


def test_normal_base_needs_a_large_family():
    # on L5 the minimal primes are not large; their space is D2 where the
    # closed subbase is a normal base although L5 is not normal
    from latdual.filters import is_large_family
    from latdual.topology import normal_base_predicates
    w = wallman(fx.L5)
    assert not is_large_family(w.points)
    assert normal_base_predicates(w.space, w.closed_generator).normal_base
    assert not is_normal(fx.L5)
