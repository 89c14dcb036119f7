import pytest
from hypothesis import given

from latdual import fixtures as fx
from latdual.errors import DoesNotGenerate, MissingFull, NotClosedSets
from latdual.filters import FilterFamily, is_antichain
from latdual.order import is_isomorphic, to_mask
from latdual.props import is_boolean, is_normal
from latdual.topology import (
    PointMap,
    canonical_filter_map,
    clopen_cozero,
    cozero_sets_by_maps,
    discrete,
    filter_family_space,
    full_base,
    generate_topology,
    indiscrete,
    interior_closure,
    map_properties,
    min_points,
    normal_base_predicates,
    regular_opens,
    separation,
    sobrification,
    specialization_order,
    validate_base,
    validate_topology,
)

from .conftest import spaces

A, B, C = fx.A, fx.B, fx.C


def s(*pts):
    return to_mask(pts)


def test_validate_topology_examples():
    assert validate_topology(2, [0, 1, 2, 3]) == fx.D2
    with pytest.raises(MissingFull):
        validate_topology(2, [0, 1, 2])
    x3 = validate_topology(3, [0, s(B), s(A, B), s(B, C), s(A, B, C)])
    assert x3 == fx.X3


def test_generate_topology_examples():
    assert generate_topology(3, [s(A, B), s(B, C)]) == fx.X3
    assert generate_topology(4, []) == indiscrete(4)
    assert generate_topology(2, [1, 2]) == fx.D2


def test_separation_examples():
    assert tuple(separation(fx.D2)) == (True, True, True, True)
    assert tuple(separation(fx.SIERPINSKI)) == (True, False, False, True)
    assert tuple(separation(fx.X3)) == (True, False, False, True)


def test_specialization_examples():
    assert specialization_order(fx.D2).leq == ((True, False), (False, True))
    assert min_points(fx.D2) == 0b11
    assert specialization_order(fx.SIERPINSKI).leq[0][1]
    assert min_points(fx.SIERPINSKI) == s(0)
    sp = specialization_order(fx.X3).leq
    assert sp[A][B] and sp[C][B] and not sp[B][A]
    assert min_points(fx.X3) == s(A, C)


def test_map_properties_examples():
    assert all(map_properties(PointMap.identity(fx.X3)))
    const = map_properties(PointMap(fx.D2, fx.D1, (0, 0)))
    assert const.continuous and const.closed and not const.embedding
    merge = map_properties(PointMap(fx.D3, fx.D2, (0, 1, 1)))
    assert merge.continuous and merge.closed and merge.open and not merge.embedding


def test_validate_base_examples():
    assert validate_base(fx.X3, fx.X3.topology).lattice == fx.L5
    with pytest.raises(DoesNotGenerate):
        validate_base(fx.D2, [0, 1, 3])
    assert is_isomorphic(validate_base(fx.D2, [0, 1, 2, 3]).lattice, fx.B2)


def test_interior_closure_examples():
    r = interior_closure(fx.X3, s(B))
    assert (r.closure, r.regularization) == (0b111, 0b111)
    assert tuple(interior_closure(fx.D2, s(0))) == (1, 1, 1)
    r = interior_closure(fx.SIERPINSKI, s(1))
    assert (r.closure, r.regularization) == (0b11, 0b11)
    assert regular_opens(fx.X3) == (0, 0b111)


def test_clopen_examples():
    assert clopen_cozero(fx.X3)[0].labels == (0, 0b111)
    assert sorted(clopen_cozero(fx.D2)[0].labels) == [0, 1, 2, 3]
    assert clopen_cozero(fx.SIERPINSKI)[0].labels == (0, 0b11)


def test_filter_family_space_examples():
    fam = FilterFamily.of(fx.B2, [0b1010, 0b1100])  # {a,1}, {b,1}
    fs = filter_family_space(fx.B2, fam)
    assert fs.space == fx.D2
    assert fs.generator[3] == 0b11
    assert {fs.generator[1], fs.generator[2]} == {0b01, 0b10}
    one = filter_family_space(fx.C3, FilterFamily.of(fx.C3, [0b100]))
    assert one.space.points == 1 and one.generator[1] == 0
    empty = filter_family_space(fx.L5, FilterFamily.of(fx.L5, []))
    assert empty.space.points == 0


def test_canonical_filter_map_examples():
    assert map_properties(canonical_filter_map(fx.X3, full_base(fx.X3))[0]).homeomorphism
    m, _ = canonical_filter_map(fx.INDISCRETE2, full_base(fx.INDISCRETE2))
    assert not m.is_injective
    assert map_properties(canonical_filter_map(fx.D2, full_base(fx.D2))[0]).homeomorphism


@pytest.mark.parametrize("name", ["X3", "D2", "S2"])
def test_sobrification_examples(name):
    sp = fx.SPACES[name]
    fs, e = sobrification(sp)
    assert fs.space.points == sp.points and map_properties(e).homeomorphism


def test_normal_base_examples():
    assert normal_base_predicates(fx.D2, [0, 1, 2, 3]).normal_base
    nb = normal_base_predicates(fx.X3, fx.X3.closed_sets)
    assert not nb.weak_normal
    nb = normal_base_predicates(fx.SIERPINSKI, [0, s(0), 0b11])
    assert not nb.disjunctive
    with pytest.raises(NotClosedSets):
        normal_base_predicates(fx.X3, [s(B)])


@given(spaces())
def test_clopens_are_cozero_sets_and_boolean(sp):
    q, _ = clopen_cozero(sp)
    assert tuple(q.labels) == cozero_sets_by_maps(sp)
    assert is_boolean(q) and is_normal(q)


@given(spaces())
def test_generate_is_idempotent(sp):
    assert generate_topology(sp.points, sp.topology) == sp


@given(spaces())
def test_sobrification_homeomorphism_on_t0(sp):
    fs, e = sobrification(sp)
    if separation(sp).T0:
        assert map_properties(e).homeomorphism
    if sp.lattice.size <= 20:
        assert sobrification(sp, "definitional")[0].family == fs.family


@given(spaces())
def test_t1_finite_spaces_are_discrete(sp):
    assert separation(sp).T1 == (sp == discrete(sp.points))


@given(spaces(max_points=4))
def test_specialization_minimum_is_antichain_of_closures(sp):
    closures = [sp.closure(1 << x) for x in range(sp.points)]
    assert is_antichain(sorted(set(closures[x] for x in range(sp.points)
                                   if min_points(sp) >> x & 1))) or not separation(sp).T0
