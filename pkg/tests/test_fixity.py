import pytest

from pga.corpus import builtin_family
from pga.errors import (
    CapExceededError,
    NotDividingOrderError,
    NotTransitiveError,
    TrivialGroupError,
)
from pga.fixity import (
    any_derangement,
    fixity,
    is_elusive,
    is_frobenius,
    is_regular,
    is_semiregular_subgroup,
    prime_fix_profile,
    prime_order_derangement,
)
from pga.group import PermGroup
from pga.perm import Permutation

from oracles import fixed_count, naive_closure


def perm(text, degree):
    return Permutation.from_cycles(text, degree)


def group(family, *params):
    return builtin_family(family, list(params)).group


class TestFixity:
    def test_sym4(self):
        result = fixity(group("symmetric", 4))
        assert result.fixity == 2
        assert result.witness.cycle_type() == (1, 1, 2)
        assert result.witness_fixed_set == result.witness.fixed_points()

    def test_regular_cyclic_is_zero(self):
        assert fixity(group("cyclic", 5)).fixity == 0

    def test_dihedral5_is_one(self):
        assert fixity(group("dihedral", 5)).fixity == 1

    def test_trivial_group_rejected(self):
        with pytest.raises(TrivialGroupError):
            fixity(PermGroup(3))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            fixity(group("symmetric", 6), cap=100)

    def test_symmetric_fixity_is_degree_minus_two(self):
        for n in range(3, 9):
            assert fixity(group("symmetric", n)).fixity == n - 2

    def test_witness_attains_fixity_by_scan(self):
        G = group("dihedral", 6)
        result = fixity(G)
        counts = [fixed_count(e) for e in naive_closure([g.images for g in G.generators])]
        counts.remove(G.degree)  # the identity
        assert result.fixity == max(counts)
        assert len(result.witness.fixed_points()) == result.fixity


class TestPrimeFixProfile:
    def test_sym4(self):
        profile = prime_fix_profile(group("symmetric", 4))
        assert profile.power_fix_counts[2] == {0, 2}
        assert profile.power_fix_counts[3] == {1}
        assert profile.prime_fix_counts[3] == {1}

    def test_regular_cyclic6(self):
        profile = prime_fix_profile(group("cyclic", 6))
        assert profile.power_fix_counts == {2: {0}, 3: {0}}

    def test_m11(self, corpus_by_name):
        profile = prime_fix_profile(corpus_by_name["m11_12"].group)
        assert set(profile.power_fix_counts) == {2, 3, 5, 11}
        assert profile.prime_fix_counts[2] == {4}
        assert profile.prime_fix_counts[3] == {3}
        assert profile.prime_fix_counts[5] == {2}
        assert profile.prime_fix_counts[11] == {1}

    def test_cauchy_every_prime_has_elements(self, corpus_entries):
        from pga.structure import factorize

        for entry in corpus_entries:
            profile = prime_fix_profile(entry.group)
            for p in factorize(entry.group.order()).primes:
                assert profile.prime_fix_counts.get(p), entry.name


class TestPrimeOrderDerangement:
    def test_sym3_order3(self):
        g = prime_order_derangement(group("symmetric", 3), 3)
        assert g is not None
        assert g.order() == 3
        assert not g.fixed_points()

    def test_sym3_order2_absent(self):
        assert prime_order_derangement(group("symmetric", 3), 2) is None

    def test_m11_all_primes_absent(self, corpus_by_name):
        G = corpus_by_name["m11_12"].group
        for p in (2, 3, 5, 11):
            assert prime_order_derangement(G, p) is None

    def test_prime_must_divide_order(self):
        with pytest.raises(NotDividingOrderError):
            prime_order_derangement(group("symmetric", 3), 5)

    def test_returned_element_is_semiregular(self, corpus_entries):
        from pga.structure import factorize

        for entry in corpus_entries:
            G = entry.group
            for p in factorize(G.order()).primes:
                g = prime_order_derangement(G, p)
                if g is not None:
                    assert g.order() == p, entry.name
                    assert not g.fixed_points(), entry.name
                    assert g.is_semiregular(), entry.name


class TestElusive:
    def test_regular_cyclic_not_elusive(self):
        assert not is_elusive(group("cyclic", 6))

    def test_sym3_not_elusive(self):
        assert not is_elusive(group("symmetric", 3))

    def test_m11_is_elusive(self, corpus_by_name):
        assert is_elusive(corpus_by_name["m11_12"].group)

    def test_intransitive_rejected(self):
        with pytest.raises(NotTransitiveError):
            is_elusive(PermGroup(3, [perm("(0 1)", 3)]))

    def test_m11_is_the_only_elusive_corpus_group(self, corpus_entries):
        elusive = [e.name for e in corpus_entries if is_elusive(e.group)]
        assert elusive == ["m11_12"]


class TestRegularAndFrobenius:
    def test_regular(self):
        assert is_regular(group("cyclic", 4))
        assert not is_regular(group("symmetric", 3))
        assert is_regular(PermGroup(1))

    def test_fixity_zero_iff_regular(self, corpus_entries):
        for entry in corpus_entries:
            assert (fixity(entry.group).fixity == 0) == is_regular(entry.group), entry.name

    def test_frobenius(self):
        assert is_frobenius(group("dihedral", 5))
        assert is_frobenius(group("frobenius", 7, 3))
        assert not is_frobenius(group("symmetric", 4))
        assert not is_frobenius(group("cyclic", 4))

    def test_fixity_one_iff_frobenius(self, corpus_entries):
        for entry in corpus_entries:
            G = entry.group
            expected = not is_regular(G) and fixity(G).fixity == 1
            assert is_frobenius(G) == expected, entry.name


class TestSemiregularSubgroup:
    def test_cases(self):
        assert is_semiregular_subgroup(PermGroup(4, [perm("(0 1)(2 3)", 4)]))
        assert not is_semiregular_subgroup(PermGroup(3, [perm("(0 1)", 3)]))
        assert is_semiregular_subgroup(group("elem_abelian", 2, 2))
        assert is_semiregular_subgroup(PermGroup(2))


class TestAnyDerangement:
    def test_every_nontrivial_transitive_corpus_group_has_one(self, corpus_entries):
        # classical: a transitive group on more than one point has a derangement
        for entry in corpus_entries:
            g = any_derangement(entry.group)
            assert g is not None, entry.name
            assert not g.fixed_points(), entry.name
