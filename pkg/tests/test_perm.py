from math import factorial

import pytest
from hypothesis import given, strategies as st

from pga.errors import (
    CycleParseError,
    DegreeMismatchError,
    InvalidPermutationError,
    PointOutOfRangeError,
    RepeatedPointError,
)
from pga.perm import Permutation


def perm(text, degree):
    return Permutation.from_cycles(text, degree)


@st.composite
def permutations_st(draw, max_degree=12):
    n = draw(st.integers(min_value=1, max_value=max_degree))
    return Permutation(draw(st.permutations(list(range(n)))))


def same_degree_perms(count, max_degree=12):
    def build(args):
        n, seeds = args
        return [Permutation(seed) for seed in seeds]

    return st.integers(min_value=1, max_value=max_degree).flatmap(
        lambda n: st.tuples(
            st.just(n), st.lists(st.permutations(list(range(n))), min_size=count, max_size=count)
        )
    ).map(build)


class TestConstruction:
    def test_identity(self):
        assert Permutation.identity(3).images == (0, 1, 2)
        assert Permutation.identity(1).images == (0,)

    def test_identity_rejects_zero_degree(self):
        with pytest.raises(InvalidPermutationError):
            Permutation.identity(0)

    def test_rejects_non_bijection(self):
        with pytest.raises(InvalidPermutationError):
            Permutation([0, 0, 1])
        with pytest.raises(InvalidPermutationError):
            Permutation([])

    def test_identity_composes_neutrally(self):
        g = perm("(0 1 2 3)", 4)
        assert Permutation.identity(4) * g == g
        assert g * Permutation.identity(4) == g


class TestCompose:
    def test_square_of_three_cycle(self):
        g = perm("(0 1 2)", 3)
        assert g * g == perm("(0 2 1)", 3)

    def test_left_to_right_convention(self):
        a = perm("(0 1)", 3)
        b = perm("(1 2)", 3)
        assert (a * b).images == (2, 0, 1)

    def test_inverse_cancels(self):
        g = perm("(0 2)(1 3 4)", 5)
        assert g * g.inverse() == Permutation.identity(5)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            perm("(0 1)", 2) * perm("(0 1)", 3)


class TestInverse:
    def test_four_cycle(self):
        assert perm("(0 1 2 3)", 4).inverse() == perm("(0 3 2 1)", 4)

    def test_identity(self):
        assert Permutation.identity(5).inverse() == Permutation.identity(5)

    def test_involution(self):
        assert perm("(0 1)", 2).inverse() == perm("(0 1)", 2)


class TestOrder:
    def test_lcm_of_cycle_lengths(self):
        assert perm("(0 1 2)(3 4)", 5).order() == 6

    def test_identity(self):
        assert Permutation.identity(4).order() == 1

    def test_four_cycle(self):
        assert perm("(0 1 2 3)", 4).order() == 4


class TestFixedPoints:
    def test_identity_fixes_everything(self):
        assert Permutation.identity(5).fixed_points() == {0, 1, 2, 3, 4}

    def test_double_transposition(self):
        assert perm("(0 1)(2 3)", 5).fixed_points() == {4}

    def test_derangement(self):
        assert perm("(0 1 2 3 4)", 5).fixed_points() == frozenset()


class TestCycleType:
    def test_double_transposition(self):
        assert perm("(0 1)(2 3)", 4).cycle_type() == (2, 2)

    def test_three_cycle_with_fixed_points(self):
        assert perm("(0 1 2)", 5).cycle_type() == (1, 1, 3)

    def test_identity(self):
        assert Permutation.identity(3).cycle_type() == (1, 1, 1)


class TestSemiregular:
    def test_double_transposition(self):
        assert perm("(0 1)(2 3)", 4).is_semiregular()

    def test_transposition_with_fixed_point(self):
        assert not perm("(0 1)", 3).is_semiregular()

    def test_identity(self):
        assert Permutation.identity(4).is_semiregular()


class TestParsing:
    def test_four_cycle(self):
        assert perm("(0 1 2 3)", 4).images == (1, 2, 3, 0)

    def test_empty_cycles_is_identity(self):
        assert perm("()", 3) == Permutation.identity(3)

    def test_repeated_point_rejected(self):
        with pytest.raises(RepeatedPointError):
            perm("(0 1)(1 2)", 3)

    def test_point_out_of_range(self):
        with pytest.raises(PointOutOfRangeError):
            perm("(0 1 4)", 3)

    def test_malformed(self):
        for bad in ["", "(0", "0 1)", "(0)", "(x y)", "(0 1) junk"]:
            with pytest.raises(CycleParseError):
                perm(bad, 4)

    def test_canonical_printing(self):
        g = perm("(2 3)(0 1)", 6)
        assert g.cycle_string() == "(0 1)(2 3)"
        assert Permutation.identity(4).cycle_string() == "()"
        rotated = perm("(3 1 2)", 4)
        assert rotated.cycle_string() == "(1 2 3)"


class TestProperties:
    @given(same_degree_perms(3))
    def test_associativity(self, perms):
        a, b, c = perms
        assert (a * b) * c == a * (b * c)

    @given(permutations_st())
    def test_identity_laws(self, g):
        e = Permutation.identity(g.degree)
        assert e * g == g
        assert g * e == g

    @given(permutations_st())
    def test_inverse_law(self, g):
        e = Permutation.identity(g.degree)
        assert g * g.inverse() == e
        assert g.inverse() * g == e

    @given(permutations_st())
    def test_order_divides_factorial_and_annihilates(self, g):
        k = g.order()
        assert factorial(g.degree) % k == 0
        assert (g**k).is_identity()
        for smaller in range(1, min(k, 6)):
            assert not (g**smaller).is_identity()

    @given(permutations_st())
    def test_fixed_points_match_cycle_type(self, g):
        assert len(g.fixed_points()) == sum(1 for l in g.cycle_type() if l == 1)

    @given(permutations_st())
    def test_cycle_text_round_trip(self, g):
        assert Permutation.from_cycles(g.cycle_string(), g.degree) == g

    @given(permutations_st())
    def test_order_is_lcm_certificate(self, g):
        assert g.order() == min(
            k for k in range(1, g.order() + 1) if (g**k).is_identity()
        )

    @given(permutations_st(max_degree=8))
    def test_prime_order_semiregular_iff_derangement(self, g):
        # for prime-order elements: semiregular means no fixed points at all
        from pga.structure import is_prime

        if is_prime(g.order()):
            assert g.is_semiregular() == (len(g.fixed_points()) == 0)
