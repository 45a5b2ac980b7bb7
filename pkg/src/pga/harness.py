"""Hypothesis/conclusion checks over analyzed groups.

Every check consumes only the GroupAnalysis record, never recomputes
group theory, so each one is a pure predicate pair that can be exercised
on synthetic records.  Statuses form a closed set:

    verified   hypotheses held and the conclusion held
    vacuous    some hypothesis failed
    violated   hypotheses held, conclusion failed; a witness is attached
    skipped    a field the check needs was unavailable (resource caps)

Bounds are evaluated in exact rational arithmetic; no floating point.
Check ids are stable opaque labels used in reports and on the command
line.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .closure import is_2_closed
from .config import Caps, DEFAULT_CAPS
from .corpus import CorpusEntry, Report, report_metadata
from .errors import (
    CapExceededError,
    NotTransitiveError,
    PgaError,
    TrivialGroupError,
    UnknownCheckError,
)
from .fixity import (
    FixityResult,
    PrimeFixProfile,
    any_derangement,
    first_prime_derangement,
    fixity,
    is_elusive,
    prime_fix_profile,
)
from .perm import Permutation
from .structure import (
    FactoredInteger,
    factorize,
    is_solvable,
    normal_subgroups,
)

VERIFIED = "verified"
VACUOUS = "vacuous"
VIOLATED = "violated"
SKIPPED = "skipped"

CHECK_IDS = (
    "L2_1a",
    "L2_1b",
    "C2_2",
    "C2_3",
    "L2_4i",
    "L2_4ii",
    "C2_5",
    "L2_6",
    "L2_7",
    "C2_8",
    "C2_9",
    "C2_10",
    "A1",
    "A2",
    "A3",
    "A4",
)


@dataclass
class GroupAnalysis:
    """Aggregate per-group record consumed by the checks.

    Fields that scans or searches could not populate are None, with the
    reason recorded in skip_reasons under the field name.
    """

    entry: CorpusEntry
    name: str
    degree: int
    order: int
    degree_factored: FactoredInteger
    order_factored: FactoredInteger
    stab_order_factored: FactoredInteger
    primes_group: frozenset
    primes_stab: frozenset
    smallest_prime: int
    transitive: bool
    solvable: bool
    fixity: FixityResult | None
    elusive: bool | None
    two_closed: bool | None
    prime_profile: PrimeFixProfile | None
    normal_lattice: list | None
    minimal_normals: list | None
    derangement: Permutation | None
    prime_derangement: Permutation | None
    skip_reasons: dict


@dataclass
class CheckResult:
    group: str
    degree: int
    order: int
    check_id: str
    status: str
    witness: dict | None = None
    elapsed_ms: int = 0


def analyze(entry: CorpusEntry, caps: Caps = DEFAULT_CAPS) -> GroupAnalysis:
    """Compute the full per-group record.

    Rejects intransitive groups; cap overruns never raise, they leave the
    affected fields None with the reason recorded.
    """
    G = entry.group
    if not G.is_transitive():
        raise NotTransitiveError(f"{entry.name}: the checks assume a transitive group")
    order = G.order()
    degree = G.degree
    order_factored = factorize(order)
    stab_order_factored = factorize(order // degree)
    skip_reasons = {}

    fix = elusive = profile = derang = prime_derang = None
    try:
        elusive = is_elusive(G, caps.enumeration_cap)
        profile = prime_fix_profile(G, caps.enumeration_cap)
        derang = any_derangement(G, caps.enumeration_cap)
        prime_derang = first_prime_derangement(G, caps.enumeration_cap)
        try:
            fix = fixity(G, caps.enumeration_cap)
        except TrivialGroupError as exc:
            skip_reasons["fixity"] = str(exc)
    except CapExceededError as exc:
        for f in ("fixity", "elusive", "prime_profile", "derangement"):
            skip_reasons[f] = str(exc)

    two_closed = None
    try:
        two_closed = is_2_closed(G, caps.closure_degree_cap)
    except CapExceededError as exc:
        skip_reasons["two_closed"] = str(exc)

    lattice = minimal = None
    try:
        lattice = normal_subgroups(G, caps.enumeration_cap, caps.lattice_cap)
        minimal = [i for i in lattice if i.is_minimal_normal]
    except CapExceededError as exc:
        skip_reasons["normal_lattice"] = str(exc)

    return GroupAnalysis(
        entry=entry,
        name=entry.name,
        degree=degree,
        order=order,
        degree_factored=factorize(degree),
        order_factored=order_factored,
        stab_order_factored=stab_order_factored,
        primes_group=frozenset(order_factored.primes),
        primes_stab=frozenset(stab_order_factored.primes),
        smallest_prime=order_factored.factors[0][0] if order_factored.factors else 1,
        transitive=True,
        solvable=is_solvable(G),
        fixity=fix,
        elusive=elusive,
        two_closed=two_closed,
        prime_profile=profile,
        normal_lattice=lattice,
        minimal_normals=minimal,
        derangement=derang,
        prime_derangement=prime_derang,
        skip_reasons=skip_reasons,
    )


def _skip(a: GroupAnalysis, cid: str, field: str) -> CheckResult:
    reason = a.skip_reasons.get(field, f"{field} unavailable")
    return CheckResult(a.name, a.degree, a.order, cid, SKIPPED, {"missing": field, "reason": reason})


def _done(a: GroupAnalysis, cid: str, status: str, witness=None) -> CheckResult:
    return CheckResult(a.name, a.degree, a.order, cid, status, witness)


def _nontrivial(lattice):
    return [i for i in lattice if i.order.value > 1]


def _p_subgroups(lattice):
    return [i for i in _nontrivial(lattice) if i.is_p_group_for is not None]


def _abelian_normals(lattice):
    return [i for i in _nontrivial(lattice) if i.is_abelian]


def _check_L2_1a(a: GroupAnalysis) -> CheckResult:
    """Primes above the fixity that divide the stabilizer order divide it
    to the full multiplicity of the group order (fixity at least 2)."""
    if a.fixity is None:
        return _skip(a, "L2_1a", "fixity")
    f = a.fixity.fixity
    large = [p for p in sorted(a.primes_stab) if p > f]
    if f < 2 or not large:
        return _done(a, "L2_1a", VACUOUS)
    for p in large:
        v_stab = a.stab_order_factored.valuation(p)
        v_group = a.order_factored.valuation(p)
        if v_stab != v_group:
            return _done(
                a,
                "L2_1a",
                VIOLATED,
                {"prime": p, "stabilizer_valuation": v_stab, "group_valuation": v_group},
            )
    return _done(a, "L2_1a", VERIFIED)


def _check_L2_1b(a: GroupAnalysis) -> CheckResult:
    """With fixity at least 2, a prime with a nontrivial normal p-subgroup
    and p above the fixity cannot divide the stabilizer order."""
    if a.fixity is None:
        return _skip(a, "L2_1b", "fixity")
    f = a.fixity.fixity
    if f < 2:
        return _done(a, "L2_1b", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "L2_1b", "normal_lattice")
    cands = [i for i in _p_subgroups(a.normal_lattice) if i.is_p_group_for > f]
    if not cands:
        return _done(a, "L2_1b", VACUOUS)
    for info in cands:
        p = info.is_p_group_for
        if p in a.primes_stab:
            return _done(a, "L2_1b", VIOLATED, {"prime": p, "subgroup_order": info.order.value})
    return _done(a, "L2_1b", VERIFIED)


def _check_C2_2(a: GroupAnalysis) -> CheckResult:
    """Elusive with a nontrivial normal p-subgroup forces p at most the fixity."""
    if a.elusive is None:
        return _skip(a, "C2_2", "elusive")
    if not a.elusive:
        return _done(a, "C2_2", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "C2_2", "normal_lattice")
    cands = _p_subgroups(a.normal_lattice)
    if not cands:
        return _done(a, "C2_2", VACUOUS)
    if a.fixity is None:
        return _skip(a, "C2_2", "fixity")
    f = a.fixity.fixity
    for info in cands:
        if info.is_p_group_for > f:
            return _done(
                a, "C2_2", VIOLATED, {"prime": info.is_p_group_for, "subgroup_order": info.order.value, "fixity": f}
            )
    return _done(a, "C2_2", VERIFIED)


def _check_C2_3(a: GroupAnalysis) -> CheckResult:
    """Elusive groups have fixity at least 3."""
    if a.elusive is None:
        return _skip(a, "C2_3", "elusive")
    if not a.elusive:
        return _done(a, "C2_3", VACUOUS)
    if a.fixity is None:
        return _skip(a, "C2_3", "fixity")
    f = a.fixity.fixity
    if f >= 3:
        return _done(a, "C2_3", VERIFIED)
    return _done(a, "C2_3", VIOLATED, {"fixity": f})


def _requires_elusive_composite_degree(a: GroupAnalysis, cid: str):
    """Shared hypothesis: elusive, at least two primes divide the degree,
    fixity at least 3.  Returns a CheckResult to emit early, or None."""
    if a.elusive is None:
        return _skip(a, cid, "elusive")
    if not a.elusive:
        return _done(a, cid, VACUOUS)
    if len(a.degree_factored.factors) < 2:
        return _done(a, cid, VACUOUS)
    if a.fixity is None:
        return _skip(a, cid, "fixity")
    if a.fixity.fixity < 3:
        return _done(a, cid, VACUOUS)
    return None


def _check_L2_4i(a: GroupAnalysis) -> CheckResult:
    """Every prime dividing the degree is at most the fixity."""
    early = _requires_elusive_composite_degree(a, "L2_4i")
    if early is not None:
        return early
    f = a.fixity.fixity
    for p in a.degree_factored.primes:
        if p > f:
            return _done(a, "L2_4i", VIOLATED, {"prime": p, "fixity": f})
    return _done(a, "L2_4i", VERIFIED)


def _check_L2_4ii(a: GroupAnalysis) -> CheckResult:
    """For p dividing the degree, nontrivial p-power-order elements fix
    either no points or a positive multiple of p within the fixity."""
    early = _requires_elusive_composite_degree(a, "L2_4ii")
    if early is not None:
        return early
    if a.prime_profile is None:
        return _skip(a, "L2_4ii", "prime_profile")
    f = a.fixity.fixity
    for p in a.degree_factored.primes:
        for count in sorted(a.prime_profile.power_fix_counts.get(p, ())):
            if count == 0:
                continue
            if count % p != 0 or not p <= count <= f:
                return _done(a, "L2_4ii", VIOLATED, {"prime": p, "fix_count": count, "fixity": f})
    return _done(a, "L2_4ii", VERIFIED)


def _check_C2_5(a: GroupAnalysis) -> CheckResult:
    """Elusive on an odd-size point set forces fixity at least 5."""
    if a.elusive is None:
        return _skip(a, "C2_5", "elusive")
    if not a.elusive or a.degree % 2 == 0:
        return _done(a, "C2_5", VACUOUS)
    if a.fixity is None:
        return _skip(a, "C2_5", "fixity")
    f = a.fixity.fixity
    if f >= 5:
        return _done(a, "C2_5", VERIFIED)
    return _done(a, "C2_5", VIOLATED, {"fixity": f, "degree": a.degree})


def _check_L2_6(a: GroupAnalysis) -> CheckResult:
    """The degree is bounded by fixity times the smallest (|H|-1)/(p_H-1)
    over nontrivial normal subgroups H, in exact rationals."""
    if a.elusive is None:
        return _skip(a, "L2_6", "elusive")
    if not a.elusive:
        return _done(a, "L2_6", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "L2_6", "normal_lattice")
    nontrivial = _nontrivial(a.normal_lattice)
    if not nontrivial:
        return _done(a, "L2_6", VACUOUS)
    if a.fixity is None:
        return _skip(a, "L2_6", "fixity")
    f = a.fixity.fixity
    best = min(Fraction(i.order.value - 1, i.smallest_prime - 1) for i in nontrivial)
    bound = f * best
    if Fraction(a.degree) <= bound:
        return _done(a, "L2_6", VERIFIED)
    return _done(a, "L2_6", VIOLATED, {"degree": a.degree, "bound": str(bound)})


def _check_L2_7(a: GroupAnalysis) -> CheckResult:
    """A nontrivial normal abelian subgroup N with least prime p has order
    at most p*f, and the degree is at most f(pf-1)/(p-1) <= f(2f-1)."""
    if a.elusive is None:
        return _skip(a, "L2_7", "elusive")
    if not a.elusive:
        return _done(a, "L2_7", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "L2_7", "normal_lattice")
    abelians = _abelian_normals(a.normal_lattice)
    if not abelians:
        return _done(a, "L2_7", VACUOUS)
    if a.fixity is None:
        return _skip(a, "L2_7", "fixity")
    f = a.fixity.fixity
    for info in abelians:
        p = info.smallest_prime
        if info.order.value > p * f:
            return _done(
                a,
                "L2_7",
                VIOLATED,
                {"clause": 1, "subgroup_order": info.order.value, "bound": p * f},
            )
        degree_bound = Fraction(f * (p * f - 1), p - 1)
        if Fraction(a.degree) > degree_bound:
            return _done(
                a,
                "L2_7",
                VIOLATED,
                {"clause": 2, "degree": a.degree, "bound": str(degree_bound)},
            )
        if degree_bound > f * (2 * f - 1):
            return _done(
                a,
                "L2_7",
                VIOLATED,
                {"clause": 3, "bound": str(degree_bound), "outer_bound": f * (2 * f - 1)},
            )
    return _done(a, "L2_7", VERIFIED)


def _check_C2_8(a: GroupAnalysis) -> CheckResult:
    """A 2-closed elusive solvable group has fixity at least 6."""
    if a.elusive is None:
        return _skip(a, "C2_8", "elusive")
    if not a.elusive:
        return _done(a, "C2_8", VACUOUS)
    if a.two_closed is None:
        return _skip(a, "C2_8", "two_closed")
    if not a.two_closed or not a.solvable:
        return _done(a, "C2_8", VACUOUS)
    if a.fixity is None:
        return _skip(a, "C2_8", "fixity")
    f = a.fixity.fixity
    if f >= 6:
        return _done(a, "C2_8", VERIFIED)
    return _done(a, "C2_8", VIOLATED, {"fixity": f})


def _z2_candidates(factors) -> list:
    """Invariant-factor patterns allowed for an abelian normal subgroup with
    least prime 2 when the fixity is 4: (Z_2)^2, Z_2 x (Z_p)^2, (Z_2)^2 x Z_p."""
    if factors == ((2, 2),):
        return [(2, 2)]
    if len(factors) == 2 and factors[0] == (2, 1) and factors[1][1] == 2:
        p = factors[1][0]
        return [(p, 2 * p)]
    if len(factors) == 2 and factors[0] == (2, 2) and factors[1][1] == 1:
        p = factors[1][0]
        return [(2, 2 * p)]
    return []


def _check_C2_9(a: GroupAnalysis) -> CheckResult:
    """Constraints on a nontrivial normal abelian subgroup of an elusive
    group: never squarefree order, least prime power bound, and exact
    isomorphism types when the fixity is 3 or 4."""
    if a.elusive is None:
        return _skip(a, "C2_9", "elusive")
    if not a.elusive:
        return _done(a, "C2_9", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "C2_9", "normal_lattice")
    abelians = _abelian_normals(a.normal_lattice)
    if not abelians:
        return _done(a, "C2_9", VACUOUS)
    if a.fixity is None:
        return _skip(a, "C2_9", "fixity")
    f = a.fixity.fixity
    for info in abelians:
        factors = info.order.factors
        p1 = factors[0][0]
        total = sum(e for _, e in factors)
        if all(e == 1 for _, e in factors):
            return _done(
                a, "C2_9", VIOLATED, {"clause": 1, "subgroup_order": info.order.value}
            )
        if p1 ** (total - 1) > f:
            return _done(
                a,
                "C2_9",
                VIOLATED,
                {"clause": 2, "subgroup_order": info.order.value, "fixity": f},
            )
        invariants = tuple(info.abelian_invariants or ())
        if f == 3:
            if p1 not in (2, 3) or invariants != (p1, p1):
                return _done(
                    a,
                    "C2_9",
                    VIOLATED,
                    {"clause": 3, "subgroup_order": info.order.value, "invariants": list(invariants)},
                )
        if f == 4:
            if p1 == 3:
                ok = invariants == (3, 3)
            elif p1 == 2:
                ok = invariants in _z2_candidates(factors)
            else:
                ok = False
            if not ok:
                return _done(
                    a,
                    "C2_9",
                    VIOLATED,
                    {"clause": 4, "subgroup_order": info.order.value, "invariants": list(invariants)},
                )
    return _done(a, "C2_9", VERIFIED)


def _check_C2_10(a: GroupAnalysis) -> CheckResult:
    """A transitive 2-closed group of fixity 4 with a nontrivial normal
    p-subgroup has a fixed-point-free element.  The verdict uses the
    any-order reading; the prime-order result rides in the witness."""
    if not a.transitive:
        return _done(a, "C2_10", VACUOUS)
    if a.two_closed is None:
        return _skip(a, "C2_10", "two_closed")
    if not a.two_closed:
        return _done(a, "C2_10", VACUOUS)
    if a.fixity is None:
        return _skip(a, "C2_10", "fixity")
    if a.fixity.fixity != 4:
        return _done(a, "C2_10", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "C2_10", "normal_lattice")
    if not _p_subgroups(a.normal_lattice):
        return _done(a, "C2_10", VACUOUS)
    witness = {
        "any_order": a.derangement.cycle_string() if a.derangement else None,
        "prime_order": a.prime_derangement.cycle_string() if a.prime_derangement else None,
    }
    if a.derangement is not None:
        return _done(a, "C2_10", VERIFIED, witness)
    return _done(a, "C2_10", VIOLATED, witness)


def _check_A1(a: GroupAnalysis) -> CheckResult:
    """In an elusive group the stabilizer order has the same prime divisors
    as the group order."""
    if a.elusive is None:
        return _skip(a, "A1", "elusive")
    if not a.elusive:
        return _done(a, "A1", VACUOUS)
    if a.primes_group == a.primes_stab:
        return _done(a, "A1", VERIFIED)
    return _done(
        a,
        "A1",
        VIOLATED,
        {
            "group_primes": sorted(a.primes_group),
            "stabilizer_primes": sorted(a.primes_stab),
        },
    )


def _check_A2(a: GroupAnalysis) -> CheckResult:
    """An elusive group never acts on a prime-power number of points."""
    if a.elusive is None:
        return _skip(a, "A2", "elusive")
    if not a.elusive:
        return _done(a, "A2", VACUOUS)
    if len(a.degree_factored.factors) == 1:
        return _done(a, "A2", VIOLATED, {"degree": a.degree})
    return _done(a, "A2", VERIFIED)


def _check_A3(a: GroupAnalysis) -> CheckResult:
    """An elusive group has no nontrivial cyclic normal subgroup."""
    if a.elusive is None:
        return _skip(a, "A3", "elusive")
    if not a.elusive:
        return _done(a, "A3", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "A3", "normal_lattice")
    for info in _nontrivial(a.normal_lattice):
        if info.is_cyclic:
            return _done(a, "A3", VIOLATED, {"subgroup_order": info.order.value})
    return _done(a, "A3", VERIFIED)


def _check_A4(a: GroupAnalysis) -> CheckResult:
    """An elusive group has no nontrivial semiregular normal subgroup."""
    if a.elusive is None:
        return _skip(a, "A4", "elusive")
    if not a.elusive:
        return _done(a, "A4", VACUOUS)
    if a.normal_lattice is None:
        return _skip(a, "A4", "normal_lattice")
    for info in _nontrivial(a.normal_lattice):
        if info.is_semiregular:
            return _done(a, "A4", VIOLATED, {"subgroup_order": info.order.value})
    return _done(a, "A4", VERIFIED)


_CHECKS = {
    "L2_1a": _check_L2_1a,
    "L2_1b": _check_L2_1b,
    "C2_2": _check_C2_2,
    "C2_3": _check_C2_3,
    "L2_4i": _check_L2_4i,
    "L2_4ii": _check_L2_4ii,
    "C2_5": _check_C2_5,
    "L2_6": _check_L2_6,
    "L2_7": _check_L2_7,
    "C2_8": _check_C2_8,
    "C2_9": _check_C2_9,
    "C2_10": _check_C2_10,
    "A1": _check_A1,
    "A2": _check_A2,
    "A3": _check_A3,
    "A4": _check_A4,
}


def check(check_id: str, a: GroupAnalysis) -> CheckResult:
    """Run one check against an analysis record."""
    try:
        fn = _CHECKS[check_id]
    except KeyError:
        raise UnknownCheckError(f"unknown check id {check_id!r}") from None
    return fn(a)


def _entry_results(entry: CorpusEntry, selection, caps: Caps) -> list:
    try:
        a = analyze(entry, caps)
    except PgaError as exc:
        order = entry.group.order()
        return [
            CheckResult(
                entry.name,
                entry.declared_degree,
                order,
                cid,
                SKIPPED,
                {"missing": "analysis", "reason": str(exc)},
            )
            for cid in selection
        ]
    results = []
    for cid in selection:
        start = time.perf_counter()
        r = check(cid, a)
        r.elapsed_ms = int((time.perf_counter() - start) * 1000)
        results.append(r)
    return results


def _worker(args):
    return _entry_results(*args)


def run_all(
    corpus,
    selection=CHECK_IDS,
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
) -> Report:
    """Run the selected checks over every corpus entry.

    Per-entry failures become skipped results and never abort the other
    entries; output ordering is deterministic regardless of jobs.
    """
    requested = set(selection)
    unknown = requested - set(CHECK_IDS)
    if unknown:
        raise UnknownCheckError(f"unknown check ids {sorted(unknown)}")
    selection = tuple(cid for cid in CHECK_IDS if cid in requested)
    entries = sorted(corpus, key=lambda e: e.name)
    tasks = [(e, selection, caps) for e in entries]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_worker, tasks))
    else:
        chunks = [_worker(t) for t in tasks]
    results = [r for chunk in chunks for r in chunk]
    results.sort(key=lambda r: (r.group, r.check_id))
    return Report(metadata=report_metadata(__version__, caps, entries), entries=results)


def summarize(report: Report) -> dict:
    """Per-check status counts, keyed by check id."""
    summary = {}
    for r in report.entries:
        bucket = summary.setdefault(r.check_id, {VERIFIED: 0, VACUOUS: 0, VIOLATED: 0, SKIPPED: 0})
        bucket[r.status] += 1
    return summary
