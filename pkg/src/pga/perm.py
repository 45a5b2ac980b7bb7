"""Permutations of the point set {0, ..., n-1}.

Values are immutable image tuples: a permutation of degree n stores
images[i] = image of point i.  Composition is left-to-right everywhere,
(a * b) sends x to b(a(x)), so x^(a*b) = (x^a)^b and powers read in
application order.  Degree is part of the value: the same cycles on 4
and on 5 points are different permutations, because fixed-point counts
depend on the size of the point set.
"""

from __future__ import annotations

from math import lcm

from .errors import (
    CycleParseError,
    DegreeMismatchError,
    InvalidPermutationError,
    PointOutOfRangeError,
    RepeatedPointError,
)


class Permutation:
    """A bijection of {0, ..., degree-1}."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if not images:
            raise InvalidPermutationError("degree must be at least 1")
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutationError(
                f"images {images!r} are not a bijection of 0..{len(images) - 1}"
            )
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 1:
            raise InvalidPermutationError(f"degree must be at least 1, got {n}")
        return cls(range(n))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        """Parse disjoint-cycle notation like "(0 1 2)(4 5)"; "()" is the identity."""
        if degree < 1:
            raise InvalidPermutationError(f"degree must be at least 1, got {degree}")
        s = text.strip()
        if not s:
            raise CycleParseError("empty cycle expression")
        bodies = []
        pos = 0
        while pos < len(s):
            if s[pos].isspace():
                pos += 1
                continue
            if s[pos] != "(":
                raise CycleParseError(f"expected '(' at position {pos}, got {s[pos]!r}")
            end = s.find(")", pos)
            if end < 0:
                raise CycleParseError("unclosed cycle")
            bodies.append(s[pos + 1 : end])
            pos = end + 1
        if len(bodies) == 1 and not bodies[0].split():
            return cls.identity(degree)
        images = list(range(degree))
        seen = set()
        for body in bodies:
            parts = body.split()
            if len(parts) < 2:
                raise CycleParseError(f"cycle ({body.strip()}) needs at least two points")
            points = []
            for part in parts:
                if not part.isdigit():
                    raise CycleParseError(f"bad point {part!r}")
                p = int(part)
                if p >= degree:
                    raise PointOutOfRangeError(
                        f"point {p} out of range for degree {degree}"
                    )
                if p in seen:
                    raise RepeatedPointError(f"point {p} occurs twice")
                seen.add(p)
                points.append(p)
            for i, p in enumerate(points):
                images[p] = points[(i + 1) % len(points)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, point: int) -> int:
        return self.images[point]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot compose degree {self.degree} with degree {other.degree}"
            )
        img = other.images
        return Permutation(tuple(img[x] for x in self.images))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def order(self) -> int:
        """Least k >= 1 with self**k equal to the identity."""
        return lcm(*self.cycle_type())

    def fixed_points(self) -> frozenset:
        return frozenset(i for i, v in enumerate(self.images) if i == v)

    def fixed_point_count(self) -> int:
        return sum(1 for i, v in enumerate(self.images) if i == v)

    def cycles(self) -> list:
        """Nontrivial cycles, each rotated least-point-first, sorted by least point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        """Multiset of cycle lengths, fixed points included, sorted ascending."""
        lengths = [len(c) for c in self.cycles()]
        lengths.extend([1] * (self.degree - sum(lengths)))
        return tuple(sorted(lengths))

    def is_semiregular(self) -> bool:
        """True iff all cycle lengths (fixed points included) are equal."""
        return len(set(self.cycle_type())) == 1

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}]{self.cycle_string()}"
