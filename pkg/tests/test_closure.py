from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from pga.closure import (
    MalformedPartitionError,
    is_2_closed,
    orbitals,
    refine_partition,
    two_closure,
)
from pga.corpus import builtin_family
from pga.errors import DegreeCapExceededError
from pga.fixity import fixed_point_square_sum
from pga.group import PermGroup
from pga.perm import Permutation

from oracles import brute_two_closure


def perm(text, degree):
    return Permutation.from_cycles(text, degree)


def group(family, *params):
    return builtin_family(family, list(params)).group


class TestOrbitals:
    def test_two_transitive_has_rank_two(self):
        part = orbitals(group("symmetric", 3))
        assert part.rank == 2
        assert part.diagonal_colors == {0}

    def test_regular_cyclic_rank_equals_degree(self):
        assert orbitals(group("cyclic", 4)).rank == 4

    def test_dihedral_on_4_points(self):
        assert orbitals(group("dihedral", 4)).rank == 3

    def test_class_sizes_cover_all_pairs(self, corpus_entries):
        for entry in corpus_entries:
            part = orbitals(entry.group)
            n = part.degree
            sizes = {}
            for row in part.color:
                for c in row:
                    sizes[c] = sizes.get(c, 0) + 1
            assert sum(sizes.values()) == n * n, entry.name
            assert sorted(sizes) == list(range(part.rank)), entry.name

    def test_transitive_single_diagonal_color(self, corpus_entries):
        for entry in corpus_entries:
            assert len(orbitals(entry.group).diagonal_colors) == 1, entry.name

    def test_colors_invariant_under_generators(self):
        G = group("dihedral", 5)
        part = orbitals(G)
        for g in G.generators:
            for a in range(5):
                for b in range(5):
                    assert part.color[g[a]][g[b]] == part.color[a][b]


class TestRefinePartition:
    def test_full_symmetry_never_splits(self):
        part = orbitals(group("symmetric", 5))
        assert refine_partition(part, [tuple(range(5))]) == [tuple(range(5))]

    def test_regular_cyclic_splits_to_points(self):
        part = orbitals(group("cyclic", 4))
        assert refine_partition(part, [(0,), (1, 2, 3)]) == [(0,), (1,), (2,), (3,)]

    def test_discrete_is_fixed_point(self):
        part = orbitals(group("dihedral", 4))
        discrete = [(i,) for i in range(4)]
        assert refine_partition(part, discrete) == discrete

    def test_malformed_partition_rejected(self):
        part = orbitals(group("cyclic", 4))
        with pytest.raises(MalformedPartitionError):
            refine_partition(part, [(0, 1), (1, 2, 3)])


class TestTwoClosure:
    def test_symmetric_group_is_closed(self):
        G = group("symmetric", 5)
        assert two_closure(G).order() == 120
        assert is_2_closed(G)

    def test_regular_cyclic_is_closed(self):
        G = group("cyclic", 4)
        assert two_closure(G).order() == 4
        assert is_2_closed(G)

    def test_alt4_closes_to_sym4(self):
        G = group("alternating", 4)
        H = two_closure(G)
        assert H.order() == 24
        assert not is_2_closed(G)

    def test_degree_cap(self):
        with pytest.raises(DegreeCapExceededError):
            two_closure(group("cyclic", 12), degree_cap=10)

    def test_trivial_group(self):
        G = PermGroup(3)
        assert two_closure(G).order() == 1

    def test_intransitive_input(self):
        G = PermGroup(4, [perm("(0 1)", 4)])
        H = two_closure(G)
        assert H.order() == 2
        assert H.contains(perm("(0 1)", 4))


class TestOracleEquivalence:
    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(min_value=2, max_value=6).flatmap(
            lambda n: st.lists(
                st.permutations(list(range(n))).map(Permutation),
                min_size=1,
                max_size=3,
            ).map(lambda gens: PermGroup(n, gens))
        )
    )
    def test_matches_brute_filter_on_random_groups(self, G):
        expected = brute_two_closure([g.images for g in G.generators], G.degree)
        H = two_closure(G)
        assert H.order() == len(expected)
        assert all(g.images in expected for g in H.generators)

    def test_matches_brute_filter_up_to_degree_7(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            if G.degree > 7:
                continue
            expected = brute_two_closure([g.images for g in G.generators], G.degree)
            H = two_closure(G)
            assert H.order() == len(expected), entry.name
            assert all(H.contains(Permutation(img)) for img in expected), entry.name
            assert all(g.images in expected for g in H.generators), entry.name


class TestClosureLaws:
    def test_containment_and_idempotence_degree_le_10(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            if G.degree > 10:
                continue
            H = two_closure(G)
            assert all(H.contains(g) for g in G.generators), entry.name
            assert H.order() >= G.order(), entry.name
            HH = two_closure(H)
            assert HH.order() == H.order(), entry.name

    def test_orbital_agreement(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            if G.degree > 10:
                continue
            assert orbitals(two_closure(G)).color == orbitals(G).color, entry.name

    def test_two_transitive_closes_to_symmetric(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            part = orbitals(G)
            if part.rank != 2 or G.degree > 12:
                continue
            assert two_closure(G).order() == factorial(G.degree), entry.name


class TestBurnsideRankIdentity:
    def test_rank_times_order_is_fix_square_sum(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            if G.order() > 100_000:
                continue
            assert orbitals(G).rank * G.order() == fixed_point_square_sum(G), entry.name
