import pytest
from hypothesis import given

from latdual import fixtures as fx
from latdual.errors import NonDistributive, NotAPoset, NoLub, SizeBound
from latdual.order import (
    FinitePoset,
    LatticeMorphism,
    boolean_lattice,
    chain,
    coatoms,
    downset_lattice,
    enumerate_homomorphisms,
    enumerate_sublattices,
    is_compatible,
    is_isomorphic,
    join_irreducibles,
    lattice_from_preorder,
    lattice_of_sets,
    relation_from_pairs,
    validate_lattice,
    validate_morphism,
)

from .conftest import lattices

A, B = 1, 2  # atoms of B2
M = 1        # middle of C3


def test_two_chain_relation_gives_c2():
    l = validate_lattice([[True, True], [False, True]])
    assert l == fx.C2 and l.size == 2 and (l.bottom, l.top) == (0, 1)


def test_diamond_is_not_distributive():
    with pytest.raises(NonDistributive) as e:
        validate_lattice(fx.M3_RELATION)
    a, b, c = e.value.witness
    # x ^ (y v z) = x but (x ^ y) v (x ^ z) = 0 for the three atoms
    assert sorted((a, b, c)) == [1, 2, 3]


def test_downsets_of_antichain_by_inclusion_give_b2():
    l = lattice_of_sets([0, 1, 2, 3])
    assert is_isomorphic(l, fx.B2)


def test_validate_lattice_rejects_cycles_and_missing_joins():
    with pytest.raises(NotAPoset):
        validate_lattice([[True, True], [True, True]])
    # two maximal elements above a bottom: no join
    rel = relation_from_pairs(3, [(0, 1), (0, 2)])
    with pytest.raises(NoLub):
        validate_lattice(rel)


def test_preorder_quotient():
    # 0 <= 1 <= 0 collapse, both below 2
    rel = relation_from_pairs(3, [(0, 1), (1, 0), (0, 2), (1, 2)])
    l, classes = lattice_from_preorder(rel)
    assert l.size == 2 and classes[0] == classes[1] != classes[2]


def test_downset_lattice_examples():
    triv = downset_lattice(FinitePoset.antichain(0))
    assert triv.size == 1 and triv.bottom == triv.top
    assert downset_lattice(FinitePoset.antichain(1)) == fx.C2
    assert is_isomorphic(downset_lattice(FinitePoset.antichain(2)), fx.B2)


def test_coatoms():
    assert coatoms(fx.C3) == (M,)
    assert coatoms(fx.B2) == (A, B)
    assert coatoms(fx.C1) == ()


def test_join_irreducibles():
    assert join_irreducibles(fx.C3) == (1, 2)
    assert join_irreducibles(fx.B2) == (A, B)
    assert join_irreducibles(fx.C2) == (1,)


def test_validate_morphism_examples():
    assert validate_morphism(fx.B2, fx.B2, range(4)) == LatticeMorphism.identity(fx.B2)
    validate_morphism(fx.C3, fx.C2, (0, 1, 1))
    validate_morphism(fx.C3, fx.C2, (0, 0, 1))


def test_homomorphisms_from_trivial_lattice():
    assert list(enumerate_homomorphisms(fx.C1, fx.C2)) == []
    assert len(list(enumerate_homomorphisms(fx.C1, fx.C1))) == 1


def test_homomorphism_enumeration_matches_brute_force():
    import itertools
    from latdual.order import morphism_violation
    for s in (fx.C3, fx.B2, fx.L5):
        for t in (fx.C2, fx.C3, fx.B2, fx.L5):
            brute = sorted(m for m in itertools.product(range(t.size), repeat=s.size)
                           if morphism_violation(s, t, m) is None)
            fast = sorted(h.map for h in enumerate_homomorphisms(s, t))
            assert fast == brute


def test_enumerate_sublattices_examples():
    assert list(enumerate_sublattices(fx.C2)) == [0b11]
    assert sorted(enumerate_sublattices(fx.C3)) == sorted([0b101, 0b111])
    assert sorted(enumerate_sublattices(fx.B2)) == sorted([0b1001, 0b1011, 0b1101, 0b1111])


def test_enumerate_sublattices_bound():
    with pytest.raises(SizeBound):
        list(enumerate_sublattices(boolean_lattice(4)))


def test_is_compatible():
    assert not is_compatible(A, B, fx.B2)
    assert is_compatible(M, 2, fx.C3)
    assert is_compatible(A, 3, fx.B2)


def test_chain_and_boolean_sizes():
    assert [chain(n).size for n in range(1, 5)] == [1, 2, 3, 4]
    assert [boolean_lattice(k).size for k in range(4)] == [1, 2, 4, 8]


@given(lattices())
def test_downset_lattices_validate(l):
    assert validate_lattice(l.leq) == l


@given(lattices())
def test_absorption_and_order(l):
    for a in l.elements:
        for b in l.elements:
            assert l.join[a][l.meet[a][b]] == a
            assert l.leq[a][b] == (l.join[a][b] == b)
