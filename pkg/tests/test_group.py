from itertools import permutations as all_perms

import pytest
from hypothesis import given, settings, strategies as st

from pga.errors import CapExceededError, DegreeMismatchError, PointOutOfRangeError
from pga.group import PermGroup
from pga.perm import Permutation

from oracles import naive_closure


@st.composite
def random_groups(draw, max_degree=7, max_gens=3):
    n = draw(st.integers(min_value=2, max_value=max_degree))
    gens = draw(
        st.lists(
            st.permutations(list(range(n))).map(Permutation),
            min_size=1,
            max_size=max_gens,
        )
    )
    return PermGroup(n, gens)


def perm(text, degree):
    return Permutation.from_cycles(text, degree)


def sym4():
    return PermGroup(4, [perm("(0 1)", 4), perm("(0 1 2 3)", 4)])


def alt4():
    return PermGroup(4, [perm("(0 1 2)", 4), perm("(1 2 3)", 4)])


class TestConstruction:
    def test_sym4_order(self):
        assert sym4().order() == 24

    def test_trivial_group(self):
        G = PermGroup(5)
        assert G.order() == 1
        assert list(G.elements()) == [Permutation.identity(5)]

    def test_identity_generators_dropped(self):
        G = PermGroup(4, [perm("(0 1 2 3)", 4), Permutation.identity(4)])
        assert G.generators == (perm("(0 1 2 3)", 4),)

    def test_degree_mismatch_rejected(self):
        with pytest.raises(DegreeMismatchError):
            PermGroup(4, [perm("(0 1 2)", 3)])


class TestOrbits:
    def test_full_cycle(self):
        G = PermGroup(4, [perm("(0 1 2 3)", 4)])
        assert G.orbit(0) == {0, 1, 2, 3}

    def test_product_of_transpositions(self):
        G = PermGroup(4, [perm("(0 1)(2 3)", 4)])
        assert G.orbit(0) == {0, 1}
        assert G.orbits() == [frozenset({0, 1}), frozenset({2, 3})]

    def test_trivial(self):
        G = PermGroup(3)
        assert G.orbit(2) == {2}
        assert G.orbits() == [frozenset({0}), frozenset({1}), frozenset({2})]

    def test_point_out_of_range(self):
        with pytest.raises(PointOutOfRangeError):
            PermGroup(3).orbit(3)


class TestTransitivity:
    def test_cases(self):
        assert PermGroup(5, [perm("(0 1 2 3 4)", 5)]).is_transitive()
        assert not PermGroup(3, [perm("(0 1)", 3)]).is_transitive()
        assert PermGroup(1).is_transitive()


class TestOrderAndMembership:
    def test_cyclic_order(self):
        assert PermGroup(5, [perm("(0 1 2 3 4)", 5)]).order() == 5

    def test_sym4_contains_transposition(self):
        assert sym4().contains(perm("(0 2)", 4))

    def test_alt4_excludes_odd(self):
        G = alt4()
        assert G.order() == 12
        assert not G.contains(perm("(0 1)", 4))

    def test_contains_identity(self):
        for G in (sym4(), alt4(), PermGroup(3)):
            assert G.contains(Permutation.identity(G.degree))

    def test_membership_agrees_with_closure_on_alt4(self):
        closure = naive_closure([g.images for g in alt4().generators])
        G = alt4()
        for img in all_perms(range(4)):
            assert G.contains(Permutation(img)) == (img in closure)


class TestPointStabilizer:
    def test_sym4(self):
        assert sym4().point_stabilizer(0).order() == 6

    def test_regular_cyclic(self):
        G = PermGroup(4, [perm("(0 1 2 3)", 4)])
        assert G.point_stabilizer(0).order() == 1

    def test_alt4(self):
        assert alt4().point_stabilizer(0).order() == 3

    def test_generators_fix_the_point(self):
        H = sym4().point_stabilizer(2)
        assert all(g.images[2] == 2 for g in H.generators)


class TestElements:
    def test_sym3_closed_under_composition(self):
        G = PermGroup(3, [perm("(0 1)", 3), perm("(0 1 2)", 3)])
        els = list(G.elements())
        assert len(els) == 6
        pool = {e.images for e in els}
        assert {(a * b).images for a in els for b in els} == pool

    def test_no_duplicates_and_all_members(self):
        G = sym4()
        els = list(G.elements())
        assert len({e.images for e in els}) == len(els) == 24
        assert all(G.contains(e) for e in els)

    def test_cap_exceeded_is_loud(self):
        with pytest.raises(CapExceededError):
            list(sym4().elements(cap=10))


class TestCorpusInvariants:
    def test_orbit_stabilizer(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            order = G.order()
            for point in range(G.degree):
                stab = G.point_stabilizer(point)
                assert len(G.orbit(point)) * stab.order() == order, entry.name

    def test_transitive_order_identity(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            assert G.order() == G.degree * G.point_stabilizer(0).order(), entry.name

    def test_chain_order_matches_closure_small(self, corpus_entries):
        for entry in corpus_entries:
            gens = [g.images for g in entry.group.generators]
            closure = naive_closure(gens, limit=5000)
            if closure is None:
                assert entry.group.order() > 5000, entry.name
            else:
                assert entry.group.order() == len(closure), entry.name

    def test_membership_matches_closure_degree_le_5(self, corpus_entries):
        for entry in corpus_entries:
            n = entry.group.degree
            if n > 5:
                continue
            closure = naive_closure([g.images for g in entry.group.generators])
            for img in all_perms(range(n)):
                assert entry.group.contains(Permutation(img)) == (img in closure), entry.name


class TestRandomGroupProperties:
    @settings(max_examples=120, deadline=None)
    @given(random_groups())
    def test_chain_order_equals_closure(self, G):
        closure = naive_closure([g.images for g in G.generators] or [tuple(range(G.degree))])
        assert G.order() == len(closure)

    @settings(max_examples=60, deadline=None)
    @given(random_groups(max_degree=6))
    def test_membership_equals_closure(self, G):
        closure = naive_closure([g.images for g in G.generators] or [tuple(range(G.degree))])
        for img in all_perms(range(G.degree)):
            assert G.contains(Permutation(img)) == (img in closure)

    @settings(max_examples=80, deadline=None)
    @given(random_groups(), st.data())
    def test_orbit_stabilizer(self, G, data):
        point = data.draw(st.integers(min_value=0, max_value=G.degree - 1))
        stab = G.point_stabilizer(point)
        assert len(G.orbit(point)) * stab.order() == G.order()
        assert all(g.images[point] == point for g in stab.generators)

    @settings(max_examples=60, deadline=None)
    @given(random_groups(max_degree=6))
    def test_elements_enumeration_is_exact(self, G):
        els = list(G.elements())
        assert len({e.images for e in els}) == len(els) == G.order()


class TestM11Facts:
    def test_order_by_naive_closure(self, corpus_by_name):
        G = corpus_by_name["m11_12"].group
        closure = naive_closure([g.images for g in G.generators])
        assert len(closure) == 7920
        assert G.order() == 7920

    def test_element_enumeration_matches_closure(self, corpus_by_name):
        G = corpus_by_name["m11_12"].group
        closure = naive_closure([g.images for g in G.generators])
        assert {e.images for e in G.elements()} == closure
