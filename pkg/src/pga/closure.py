"""Orbits on ordered pairs, partition refinement, and 2-closure.

The 2-closure of a group G on points 0..n-1 is the largest subgroup of
the full symmetric group with the same orbits on ordered pairs.  It is
recovered here as the automorphism group of the complete digraph whose
arc (x, y) carries the index of the pair orbit containing it.

The searcher is a purpose-built individualization-refinement backtracker
over images of a fixed base.  At each level of the principal branch the
next base point is the least member of the first non-singleton cell; the
branch mapping it to itself is explored in full (that is the stabilizer
of the base prefix), while each later branch stops at the first
automorphism found, and candidate images already reachable from a
processed image under the automorphisms found so far are skipped.  That
is the classic descent that yields generators level by level, and it
keeps 2-transitive inputs (where refinement never splits anything) from
degenerating into a factorial enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_CAPS
from .errors import DegreeCapExceededError, PgaError
from .group import PermGroup
from .perm import Permutation


class MalformedPartitionError(PgaError, ValueError):
    """Cells do not partition the point set."""


@dataclass(frozen=True)
class OrbitalPartition:
    """Coloring of ordered pairs by orbit index.

    Color ids are dense and assigned in first-encountered order scanning
    pairs row-major, so equal pair partitions get byte-equal matrices.
    """

    degree: int
    color: tuple  # n x n matrix, color[x][y] is the orbit id of (x, y)
    rank: int
    diagonal_colors: frozenset


def orbitals(G: PermGroup) -> OrbitalPartition:
    """Orbits of G on ordered pairs, as a color matrix."""
    n = G.degree
    color = [[-1] * n for _ in range(n)]
    rank = 0
    for a in range(n):
        for b in range(n):
            if color[a][b] != -1:
                continue
            color[a][b] = rank
            queue = [(a, b)]
            while queue:
                x, y = queue.pop()
                for g in G.generators:
                    u, v = g.images[x], g.images[y]
                    if color[u][v] == -1:
                        color[u][v] = rank
                        queue.append((u, v))
            rank += 1
    matrix = tuple(tuple(row) for row in color)
    return OrbitalPartition(
        degree=n,
        color=matrix,
        rank=rank,
        diagonal_colors=frozenset(matrix[i][i] for i in range(n)),
    )


def _signature(color, rank, x, cells):
    """Per-cell counts of arc colors out of and into x, densely indexed."""
    row = color[x]
    parts = []
    for cell in cells:
        out = [0] * rank
        inn = [0] * rank
        for z in cell:
            out[row[z]] += 1
            inn[color[z][x]] += 1
        parts.append((tuple(out), tuple(inn)))
    return tuple(parts)


def _refine_pair(color, rank, pairs):
    """Refine matched (domain, image) cell lists to a stable partition pair.

    Returns the refined pair list, or None when the two sides split
    incompatibly, which proves no automorphism respects the pairing.
    """
    pairs = list(pairs)
    while True:
        p_cells = [p for p, _ in pairs]
        q_cells = [q for _, q in pairs]
        new_pairs = []
        changed = False
        for cp, cq in pairs:
            if len(cp) == 1:
                new_pairs.append((cp, cq))
                continue
            by_sig_p = {}
            for x in cp:
                by_sig_p.setdefault(_signature(color, rank, x, p_cells), []).append(x)
            by_sig_q = {}
            for y in cq:
                by_sig_q.setdefault(_signature(color, rank, y, q_cells), []).append(y)
            keys = sorted(by_sig_p)
            if keys != sorted(by_sig_q):
                return None
            if any(len(by_sig_p[k]) != len(by_sig_q[k]) for k in keys):
                return None
            if len(keys) > 1:
                changed = True
            for k in keys:
                new_pairs.append((tuple(by_sig_p[k]), tuple(by_sig_q[k])))
        pairs = new_pairs
        if not changed:
            return pairs


def refine_partition(part: OrbitalPartition, cells) -> list:
    """Coarsest stable refinement of an ordered partition under the coloring.

    Split cells keep their relative order and new fragments are ordered
    by their count vectors, so the result is deterministic.
    """
    n = part.degree
    cell_tuples = [tuple(c) for c in cells]
    flat = [x for c in cell_tuples for x in c]
    if sorted(flat) != list(range(n)):
        raise MalformedPartitionError("cells must partition 0..degree-1")
    refined = _refine_pair(part.color, part.rank, [(c, c) for c in cell_tuples])
    return [p for p, _ in refined]


def _individualize(pairs, t, x, y):
    cp, cq = pairs[t]
    rest_p = tuple(z for z in cp if z != x)
    rest_q = tuple(z for z in cq if z != y)
    mid = [((x,), (y,))]
    if rest_p:
        mid.append((rest_p, rest_q))
    return pairs[:t] + mid + pairs[t + 1 :]


def _first_non_singleton(pairs):
    for idx, (cp, _) in enumerate(pairs):
        if len(cp) > 1:
            return idx
    return None


def _reachable(points, gens):
    seen = set(points)
    stack = list(points)
    while stack:
        a = stack.pop()
        for g in gens:
            b = g.images[a]
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return seen


def _color_automorphism_generators(color, rank, n):
    """Generators of the full group of color-preserving permutations."""

    def extract(pairs):
        img = [0] * n
        for cp, cq in pairs:
            img[cp[0]] = cq[0]
        return img

    def preserves_colors(img):
        for a in range(n):
            row = color[a]
            mapped = color[img[a]]
            for b in range(n):
                if mapped[img[b]] != row[b]:
                    return False
        return True

    def find_one(pairs):
        """First automorphism consistent with the pairing, or None."""
        t = _first_non_singleton(pairs)
        if t is None:
            img = extract(pairs)
            return Permutation(img) if preserves_colors(img) else None
        cp, cq = pairs[t]
        x = cp[0]
        for y in cq:
            nxt = _refine_pair(color, rank, _individualize(pairs, t, x, y))
            if nxt is None:
                continue
            found = find_one(nxt)
            if found is not None:
                return found
        return None

    def descend(pairs):
        """Generators of the automorphisms fixing the individualized prefix."""
        t = _first_non_singleton(pairs)
        if t is None:
            return []
        cp, cq = pairs[t]
        x = cp[0]
        local = descend(_refine_pair(color, rank, _individualize(pairs, t, x, x)))
        processed = {x}
        for y in cq:
            if y == x:
                continue
            if y in _reachable(processed, local):
                processed.add(y)
                continue
            nxt = _refine_pair(color, rank, _individualize(pairs, t, x, y))
            found = find_one(nxt) if nxt is not None else None
            processed.add(y)
            if found is not None:
                local.append(found)
        return local

    unit = tuple(range(n))
    base = _refine_pair(color, rank, [(unit, unit)])
    return descend(base)


def two_closure(G: PermGroup, degree_cap: int = DEFAULT_CAPS.closure_degree_cap) -> PermGroup:
    """The full group of permutations preserving every pair orbit of G."""
    n = G.degree
    if n > degree_cap:
        raise DegreeCapExceededError(
            f"degree {n} exceeds closure degree cap {degree_cap}", needed=n, cap=degree_cap
        )
    part = orbitals(G)
    gens = _color_automorphism_generators(part.color, part.rank, n)
    return PermGroup(n, gens)


def is_2_closed(G: PermGroup, degree_cap: int = DEFAULT_CAPS.closure_degree_cap) -> bool:
    return two_closure(G, degree_cap).order() == G.order()
