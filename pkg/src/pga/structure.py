"""Arithmetic and structural predicates used by the fact checks.

Covers integer factorization, derived series and solvability, abelian
invariants (by element-order census), normal closures, and the full
normal-subgroup listing of a group.  The listing is computed as the
join closure of the normal closures of single elements, one per
conjugacy class: every normal subgroup is the join of the closures of
its own elements, so nothing is missed, and every join of normal
subgroups is normal, so nothing extra appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .config import DEFAULT_CAPS
from .errors import (
    InvalidPermutationError,
    LatticeCapExceededError,
    NotAbelianError,
    NotInGroupError,
    NotPrimeError,
)
from .group import PermGroup
from .perm import Permutation


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer with its prime factorization, primes ascending."""

    value: int
    factors: tuple  # ((prime, exponent), ...)

    @property
    def primes(self) -> tuple:
        return tuple(p for p, _ in self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


# witnesses proving Miller-Rabin deterministic for every n below 3.3e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Some nontrivial factor of an odd composite n (Brent's cycle variant,
    deterministically seeded so results are reproducible)."""
    from math import gcd

    for c in range(1, n):
        y, m = 2, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise AssertionError(f"no factor found for {n}")  # unreachable for composite n


def factorize(n: int) -> FactoredInteger:
    """Exact factorization for values up to 2**63: trial division by small
    primes, then recursive splitting of the remainder."""
    if n < 1:
        raise InvalidPermutationError(f"cannot factor {n}")
    value = n
    counts: dict = {}
    for d in range(2, 1000):
        if d * d > n:
            break
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return FactoredInteger(value, tuple(sorted(counts.items())))


def p_valuation(n: int, p: int) -> int:
    """Largest e with p**e dividing n."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if n < 1:
        raise InvalidPermutationError(f"valuation undefined for {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def smallest_primitive_root(p: int) -> int:
    """Least generator of the multiplicative group mod a prime p."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        return 1
    phi = p - 1
    prime_parts = [q for q, _ in factorize(phi).factors]
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in prime_parts):
            return g
    raise AssertionError("no primitive root found")  # unreachable for prime p


def commutator(a: Permutation, b: Permutation) -> Permutation:
    return a.inverse() * b.inverse() * a * b


def conjugate(h: Permutation, g: Permutation) -> Permutation:
    """h conjugated by g, i.e. g^-1 * h * g."""
    return g.inverse() * h * g


def normal_closure(G: PermGroup, seeds) -> PermGroup:
    """Smallest subgroup of G containing the seeds and closed under
    conjugation by G's generators."""
    gens = []
    seen = set()
    for s in seeds:
        if not G.contains(s):
            raise NotInGroupError(f"{s!r} is not an element of the group")
        if s.is_identity() or s.images in seen:
            continue
        seen.add(s.images)
        gens.append(s)
    H = PermGroup(G.degree, gens)
    queue = list(gens)
    while queue:
        h = queue.pop(0)
        for g in G.generators:
            c = conjugate(h, g)
            if not H.contains(c):
                gens.append(c)
                H = PermGroup(G.degree, gens)
                queue.append(c)
    return H


def derived_subgroup(G: PermGroup) -> PermGroup:
    """Normal closure of the commutators of all generator pairs."""
    comms = []
    for i, a in enumerate(G.generators):
        for b in G.generators[i + 1 :]:
            comms.append(commutator(a, b))
    return normal_closure(G, comms)


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            if a * b != b * a:
                return False
    return True


def is_solvable(G: PermGroup) -> bool:
    """True iff the derived series reaches the trivial group."""
    H = G
    while True:
        n = H.order()
        if n == 1:
            return True
        D = derived_subgroup(H)
        if D.order() == n:
            return False
        H = D


def exponent(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> int:
    """Least e with g**e trivial for every g.

    Abelian groups use the lcm of generator orders; otherwise the whole
    group is scanned, subject to the enumeration cap.
    """
    if is_abelian(G):
        return lcm(1, *(g.order() for g in G.generators))
    return lcm(*(g.order() for g in G.elements(cap)))


def is_cyclic(G: PermGroup) -> bool:
    """True iff G is abelian with exponent equal to its order."""
    if not is_abelian(G):
        return False
    return exponent(G) == G.order()


def is_elementary_abelian(G: PermGroup):
    """(p, k) when G is abelian of order p**k and exponent p, else None."""
    if not is_abelian(G):
        return None
    fac = factorize(G.order())
    if len(fac.factors) != 1:
        return None
    p, k = fac.factors[0]
    return (p, k) if exponent(G) == p else None


def abelian_invariants(G: PermGroup, cap: int = DEFAULT_CAPS.enumeration_cap) -> tuple:
    """Invariant factors d_1 | d_2 | ... of an abelian group.

    Recovered from the element-order census: for each prime p, the count
    of elements of order dividing p**i determines the partition of the
    p-part, and the per-prime parts are then aligned largest-with-largest.
    """
    if not is_abelian(G):
        raise NotAbelianError("abelian_invariants needs an abelian group")
    order = G.order()
    if order == 1:
        return ()
    counts = {}
    for g in G.elements(cap):
        o = g.order()
        counts[o] = counts.get(o, 0) + 1
    parts_by_prime = {}
    for p, e_max in factorize(order).factors:
        # count elements whose order is exactly p**v, per v
        by_valuation = {}
        for o, c in counts.items():
            v = p_valuation(o, p)
            if p**v == o:
                by_valuation[v] = by_valuation.get(v, 0) + c
        log_counts = [0]  # log_p of #elements of order dividing p**i
        for i in range(1, e_max + 1):
            n_i = sum(c for v, c in by_valuation.items() if v <= i)
            s = 0
            while p**s < n_i:
                s += 1
            assert p**s == n_i, "order census of an abelian p-part must be a p-power"
            log_counts.append(s)
        # m_i = #(cyclic factors of p-order at least p**i); its drops give the factors
        m = [log_counts[i] - log_counts[i - 1] for i in range(1, e_max + 1)]
        parts = []
        for i in range(1, e_max + 1):
            next_m = m[i] if i < e_max else 0
            parts.extend([i] * (m[i - 1] - next_m))
        parts_by_prime[p] = sorted(p**a for a in parts)
    width = max(len(v) for v in parts_by_prime.values())
    invariants = []
    for j in range(width):
        d = 1
        for p, parts in parts_by_prime.items():
            pad = width - len(parts)
            if j >= pad:
                d *= parts[j - pad]
        invariants.append(d)
    return tuple(invariants)


@dataclass
class NormalSubgroupInfo:
    """Per-subgroup summary consumed by the fact checks."""

    subgroup: PermGroup
    order: FactoredInteger
    is_abelian: bool
    is_cyclic: bool
    is_p_group_for: int | None
    smallest_prime: int | None  # None only for the trivial subgroup
    is_elementary_abelian_of: tuple | None
    abelian_invariants: tuple | None
    is_semiregular: bool
    orbit_lengths: tuple
    is_minimal_normal: bool = False


def _subgroup_le(A: PermGroup, B: PermGroup) -> bool:
    return all(B.contains(g) for g in A.generators)


def _conjugacy_class_representatives(G: PermGroup, cap: int) -> list:
    ident = Permutation.identity(G.degree).images
    seen = {ident}
    reps = []
    for e in G.elements(cap):
        if e.images in seen:
            continue
        reps.append(e)
        frontier = [e]
        seen.add(e.images)
        while frontier:
            x = frontier.pop()
            for g in G.generators:
                c = conjugate(x, g)
                if c.images not in seen:
                    seen.add(c.images)
                    frontier.append(c)
    return reps


def normal_subgroups(
    G: PermGroup,
    cap: int = DEFAULT_CAPS.enumeration_cap,
    lattice_cap: int = DEFAULT_CAPS.lattice_cap,
) -> list:
    """All normal subgroups of G (trivial and G itself included), as
    NormalSubgroupInfo records sorted by order."""
    subs = [PermGroup(G.degree)]

    def register(H):
        n = H.order()
        for S in subs:
            if S.order() == n and _subgroup_le(H, S):
                return False
        subs.append(H)
        if len(subs) > lattice_cap:
            raise LatticeCapExceededError(
                f"more than {lattice_cap} normal subgroups",
                needed=len(subs),
                cap=lattice_cap,
            )
        return True

    for rep in _conjugacy_class_representatives(G, cap):
        register(normal_closure(G, [rep]))

    # close under pairwise join; a join of normal subgroups is their product,
    # so generating from the union of generator sets is enough
    frontier = list(subs)
    while frontier:
        A = frontier.pop(0)
        for B in list(subs):
            J = PermGroup(G.degree, A.generators + B.generators)
            if register(J):
                frontier.append(J)

    subs.sort(key=lambda H: (H.order(), tuple(g.images for g in H.generators)))
    infos = [_describe_subgroup(H, cap) for H in subs]
    _mark_minimal(infos)
    return infos


def _describe_subgroup(H: PermGroup, cap: int) -> NormalSubgroupInfo:
    fac = factorize(H.order())
    abelian = is_abelian(H)
    orbit_lengths = tuple(sorted(len(o) for o in H.orbits()))
    return NormalSubgroupInfo(
        subgroup=H,
        order=fac,
        is_abelian=abelian,
        is_cyclic=is_cyclic(H),
        is_p_group_for=fac.factors[0][0] if len(fac.factors) == 1 else None,
        smallest_prime=fac.factors[0][0] if fac.factors else None,
        is_elementary_abelian_of=is_elementary_abelian(H),
        abelian_invariants=abelian_invariants(H, cap) if abelian else None,
        is_semiregular=all(l == fac.value for l in orbit_lengths),
        orbit_lengths=orbit_lengths,
    )


def _mark_minimal(infos) -> None:
    nontrivial = [i for i in infos if i.order.value > 1]
    for info in nontrivial:
        info.is_minimal_normal = not any(
            other is not info
            and other.order.value < info.order.value
            and info.order.value % other.order.value == 0
            and _subgroup_le(other.subgroup, info.subgroup)
            for other in nontrivial
        )


def minimal_normal_subgroups(
    G: PermGroup,
    cap: int = DEFAULT_CAPS.enumeration_cap,
    lattice_cap: int = DEFAULT_CAPS.lattice_cap,
) -> list:
    """Nontrivial normal subgroups containing no smaller nontrivial one."""
    return [i for i in normal_subgroups(G, cap, lattice_cap) if i.is_minimal_normal]
