"""Fixity, fixed-point profiles, derangements, and elusiveness.

Everything here is an exhaustive scan over the group elements, guarded
by the enumeration cap.  At corpus scale the scans are oracle-grade and
a single pass collects every quantity at once; the pass is cached on the
group, so repeated queries are free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CAPS
from .errors import (
    CapExceededError,
    NotDividingOrderError,
    NotTransitiveError,
    TrivialGroupError,
)
from .group import PermGroup
from .perm import Permutation
from .structure import factorize


@dataclass(frozen=True)
class FixityResult:
    """Largest fixed-point count of a non-identity element, with a witness."""

    fixity: int
    witness: Permutation | None
    witness_fixed_set: frozenset


@dataclass(frozen=True)
class PrimeFixProfile:
    """Fixed-point counts of prime-power-order elements, bucketed by prime.

    power_fix_counts[p] collects |Fix(x)| over nontrivial x of order p**a;
    prime_fix_counts[p] is the sub-bucket for order exactly p.
    """

    power_fix_counts: dict
    prime_fix_counts: dict


@dataclass
class _Scan:
    order: int
    max_fix: int
    max_fix_witness: Permutation | None
    power_fix: dict
    prime_fix: dict
    prime_derangements: dict
    derangement: Permutation | None
    fix_square_sum: int


def _element_scan(G: PermGroup, cap: int) -> _Scan:
    if G._scan is not None and G.order() <= cap:
        return G._scan
    max_fix = -1
    witness = None
    power_fix: dict = {}
    prime_fix: dict = {}
    prime_derangements: dict = {}
    derangement = None
    fix_sq = 0
    count = 0
    for g in G.elements(cap):
        count += 1
        fp = g.fixed_point_count()
        fix_sq += fp * fp
        if g.is_identity():
            continue
        if fp > max_fix:
            max_fix = fp
            witness = g
        if fp == 0 and derangement is None:
            derangement = g
        m = g.order()
        m_factors = factorize(m).factors
        for p, _ in m_factors:
            if p not in prime_derangements:
                h = g ** (m // p)
                if h.fixed_point_count() == 0:
                    prime_derangements[p] = h
        if len(m_factors) == 1:
            p, a = m_factors[0]
            power_fix.setdefault(p, set()).add(fp)
            if a == 1:
                prime_fix.setdefault(p, set()).add(fp)
    scan = _Scan(
        order=count,
        max_fix=max_fix,
        max_fix_witness=witness,
        power_fix=power_fix,
        prime_fix=prime_fix,
        prime_derangements=prime_derangements,
        derangement=derangement,
        fix_square_sum=fix_sq,
    )
    G._scan = scan
    return scan


def fixity(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> FixityResult:
    """Largest number of points fixed by a non-identity element."""
    scan = _element_scan(G, cap)
    if scan.max_fix_witness is None:
        raise TrivialGroupError("fixity is undefined for the trivial group")
    return FixityResult(
        fixity=scan.max_fix,
        witness=scan.max_fix_witness,
        witness_fixed_set=scan.max_fix_witness.fixed_points(),
    )


def prime_fix_profile(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> PrimeFixProfile:
    scan = _element_scan(G, cap)
    return PrimeFixProfile(
        power_fix_counts={p: frozenset(v) for p, v in sorted(scan.power_fix.items())},
        prime_fix_counts={p: frozenset(v) for p, v in sorted(scan.prime_fix.items())},
    )


def prime_order_derangement(
    G: PermGroup, p: int, cap: int = DEFAULT_CAPS.enumeration_cap
) -> Permutation | None:
    """Some fixed-point-free element of order exactly p, or None.

    Found by scanning elements g and testing the power g**(order(g)/p)
    for each prime p dividing order(g).
    """
    if G.order() % p != 0:
        raise NotDividingOrderError(f"{p} does not divide the group order")
    return _element_scan(G, cap).prime_derangements.get(p)


def is_elusive(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> bool:
    """True iff the transitive group G has no fixed-point-free element of
    prime order.  Intransitive input is a caller error, not False."""
    if not G.is_transitive():
        raise NotTransitiveError("elusiveness is defined for transitive groups")
    return not _element_scan(G, cap).prime_derangements


def is_regular(G: PermGroup) -> bool:
    return G.is_transitive() and G.order() == G.degree


def is_frobenius(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> bool:
    """Transitive, not regular, and no non-identity element fixes 2 points."""
    if not G.is_transitive():
        raise NotTransitiveError("Frobenius classification needs a transitive group")
    if is_regular(G):
        return False
    return fixity(G, cap).fixity == 1


def is_semiregular_subgroup(H: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> bool:
    """True iff every point stabilizer is trivial (all orbits of full length)."""
    n = H.order()
    if n > cap:
        raise CapExceededError(f"order {n} exceeds cap {cap}", needed=n, cap=cap)
    return all(len(orbit) == n for orbit in H.orbits())


def fixed_point_square_sum(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> int:
    """Sum of |Fix(g)|**2 over all elements, identity included."""
    return _element_scan(G, cap).fix_square_sum


def any_derangement(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> Permutation | None:
    """Some fixed-point-free element of any order, or None."""
    return _element_scan(G, cap).derangement


def first_prime_derangement(
    G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap
) -> Permutation | None:
    """A fixed-point-free element of prime order if one exists, else None."""
    scan = _element_scan(G, cap)
    for p in sorted(scan.prime_derangements):
        return scan.prime_derangements[p]
    return None
