"""Group files, builtin families, corpus loading, and report output.

Group file (.grp), UTF-8, line oriented::

    name: <token>         (required, first)
    degree: <int>         (required, second)
    gen: <cycles>         (zero or more)
    img: <d ints>         (zero or more; image-list form)

Comment lines starting with '#' and blank lines are ignored.  A file
with no gen:/img: lines describes the trivial group.  Comments of the
special form ``# expect: <key> <value>`` are kept as validation
expectations; validating loads recompute those facts from scratch and
refuse the file on a mismatch.

Reports are line-delimited JSON: one metadata line, then one record per
(group, check) sorted by group name and check id.  Group orders are
serialized as decimal strings to avoid integer-width ambiguity.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from .config import Caps, DEFAULT_CAPS
from .errors import (
    GroupFileError,
    InvalidFamilyError,
    PgaError,
)
from .group import PermGroup
from .perm import Permutation
from .structure import is_prime, smallest_primitive_root

TOOL_NAME = "pga"


@dataclass
class CorpusEntry:
    name: str
    source: str
    group: PermGroup
    declared_degree: int
    expectations: dict = field(default_factory=dict)


def parse_group_file(text: str, source: str = "<string>", max_degree: int = DEFAULT_CAPS.max_degree) -> CorpusEntry:
    """Parse one .grp file."""
    name = None
    degree = None
    gens = []
    expectations = {}
    saw_body = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("expect:"):
                parts = body[len("expect:") :].split()
                if len(parts) != 2:
                    raise GroupFileError("malformed expect comment", line=lineno, source=source)
                expectations[parts[0]] = parts[1]
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if not sep:
            raise GroupFileError(f"expected 'key: value', got {line!r}", line=lineno, source=source)
        if key == "name":
            if name is not None:
                raise GroupFileError("duplicate name line", line=lineno, source=source)
            if degree is not None or saw_body:
                raise GroupFileError("name must come first", line=lineno, source=source)
            if not value or any(c.isspace() for c in value):
                raise GroupFileError(f"bad name {value!r}", line=lineno, source=source)
            name = value
        elif key == "degree":
            if degree is not None:
                raise GroupFileError("duplicate degree line", line=lineno, source=source)
            if name is None or saw_body:
                raise GroupFileError("degree must come second", line=lineno, source=source)
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"bad degree {value!r}", line=lineno, source=source) from None
            if degree < 1:
                raise GroupFileError(f"degree must be at least 1, got {degree}", line=lineno, source=source)
            if degree > max_degree:
                raise GroupFileError(
                    f"degree {degree} exceeds the configured maximum {max_degree}",
                    line=lineno,
                    source=source,
                )
        elif key == "gen":
            if degree is None:
                raise GroupFileError("gen line before the degree line", line=lineno, source=source)
            saw_body = True
            try:
                gens.append(Permutation.from_cycles(value, degree))
            except PgaError as exc:
                raise GroupFileError(str(exc), line=lineno, source=source) from exc
        elif key == "img":
            if degree is None:
                raise GroupFileError("img line before the degree line", line=lineno, source=source)
            saw_body = True
            parts = value.split()
            if len(parts) != degree:
                raise GroupFileError(
                    f"img needs exactly {degree} integers, got {len(parts)}",
                    line=lineno,
                    source=source,
                )
            try:
                images = [int(p) for p in parts]
                gens.append(Permutation(images))
            except (ValueError, PgaError) as exc:
                raise GroupFileError(str(exc), line=lineno, source=source) from exc
        else:
            raise GroupFileError(f"unknown key {key!r}", line=lineno, source=source)
    if name is None:
        raise GroupFileError("missing name line", line=1, source=source)
    if degree is None:
        raise GroupFileError("missing degree line", line=1, source=source)
    return CorpusEntry(
        name=name,
        source=source,
        group=PermGroup(degree, gens),
        declared_degree=degree,
        expectations=expectations,
    )


def serialize_entry(entry: CorpusEntry) -> str:
    lines = [f"name: {entry.name}", f"degree: {entry.declared_degree}"]
    lines.extend(f"gen: {g.cycle_string()}" for g in entry.group.generators)
    return "\n".join(lines) + "\n"


_EXPECTATION_KEYS = ("order", "transitive", "stabilizer_order", "elusive", "fixity")


def validate_expectations(entry: CorpusEntry, caps: Caps = DEFAULT_CAPS) -> None:
    """Recompute every expectation embedded in the entry; raise on mismatch."""
    from .fixity import fixity as _fixity, is_elusive

    G = entry.group
    for key, want in entry.expectations.items():
        if key not in _EXPECTATION_KEYS:
            raise GroupFileError(f"unknown expectation {key!r}", source=entry.source)
        if key == "order":
            got = str(G.order())
        elif key == "transitive":
            got = "true" if G.is_transitive() else "false"
        elif key == "stabilizer_order":
            got = str(G.point_stabilizer(0).order())
        elif key == "elusive":
            got = "true" if is_elusive(G, caps.enumeration_cap) else "false"
        else:
            got = str(_fixity(G, caps.enumeration_cap).fixity)
        if got != want:
            raise GroupFileError(
                f"expectation {key} failed: expected {want}, recomputed {got}",
                source=entry.source,
            )


def _cycle_of(points: list) -> Permutation:
    degree = max(points) + 1
    return Permutation.from_cycles("(" + " ".join(map(str, points)) + ")", degree)


def builtin_family(family: str, params) -> CorpusEntry:
    """A named group from one of the builtin families.

    cyclic n          rotation of n points, order n
    dihedral n        rotation plus reflection, degree n >= 3, order 2n
    symmetric n       all permutations of n points, order n!
    alternating n     even permutations of n >= 3 points, order n!/2
    elem_abelian p k  translations of (Z_p)^k on p**k points, order p**k
    frobenius p q     x -> x+1 and x -> a*x mod p with a of order q | p-1,
                      degree p, order p*q; a = g**((p-1)/q) for the least
                      primitive root g
    """
    params = list(params)
    name = "_".join([family] + [str(p) for p in params])

    def entry(degree, gens):
        return CorpusEntry(
            name=name,
            source=f"builtin:{family}",
            group=PermGroup(degree, gens),
            declared_degree=degree,
        )

    if family == "cyclic":
        (n,) = _family_params(family, params, 1)
        if n < 1:
            raise InvalidFamilyError("cyclic needs n >= 1")
        if n == 1:
            return entry(1, [])
        return entry(n, [_pad(_cycle_of(list(range(n))), n)])
    if family == "dihedral":
        (n,) = _family_params(family, params, 1)
        if n < 3:
            raise InvalidFamilyError("dihedral needs n >= 3")
        rotation = _pad(_cycle_of(list(range(n))), n)
        reflection = Permutation([(n - i) % n for i in range(n)])
        return entry(n, [rotation, reflection])
    if family == "symmetric":
        (n,) = _family_params(family, params, 1)
        if n < 1:
            raise InvalidFamilyError("symmetric needs n >= 1")
        if n == 1:
            return entry(1, [])
        gens = [_pad(_cycle_of([0, 1]), n)]
        if n > 2:
            gens.append(_pad(_cycle_of(list(range(n))), n))
        return entry(n, gens)
    if family == "alternating":
        (n,) = _family_params(family, params, 1)
        if n < 3:
            raise InvalidFamilyError("alternating needs n >= 3")
        three_cycle = _pad(_cycle_of([0, 1, 2]), n)
        if n == 3:
            return entry(3, [three_cycle])
        if n % 2 == 1:
            big = _pad(_cycle_of(list(range(n))), n)
        else:
            big = _pad(_cycle_of(list(range(1, n))), n)
        return entry(n, [three_cycle, big])
    if family == "elem_abelian":
        p, k = _family_params(family, params, 2)
        if not is_prime(p) or k < 1:
            raise InvalidFamilyError("elem_abelian needs a prime p and k >= 1")
        degree = p**k
        if degree > DEFAULT_CAPS.max_degree:
            raise InvalidFamilyError(f"degree p**k = {degree} is too large")
        gens = []
        for i in range(k):
            step = p**i
            images = []
            for x in range(degree):
                digit = (x // step) % p
                images.append(x + step if digit < p - 1 else x - (p - 1) * step)
            gens.append(Permutation(images))
        return entry(degree, gens)
    if family == "frobenius":
        p, q = _family_params(family, params, 2)
        if not is_prime(p) or p < 3:
            raise InvalidFamilyError("frobenius needs an odd prime p")
        if q < 2 or (p - 1) % q != 0:
            raise InvalidFamilyError(f"frobenius needs q >= 2 dividing p-1 = {p - 1}")
        a = pow(smallest_primitive_root(p), (p - 1) // q, p)
        translation = Permutation([(x + 1) % p for x in range(p)])
        multiplier = Permutation([(a * x) % p for x in range(p)])
        return entry(p, [translation, multiplier])
    raise InvalidFamilyError(f"unknown family {family!r}")


def _family_params(family, params, want):
    if len(params) != want:
        raise InvalidFamilyError(f"{family} takes {want} parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except (TypeError, ValueError):
        raise InvalidFamilyError(f"{family} parameters must be integers") from None


def _pad(g: Permutation, degree: int) -> Permutation:
    if g.degree == degree:
        return g
    return Permutation(list(g.images) + list(range(g.degree, degree)))


def load_corpus(directory, caps: Caps = DEFAULT_CAPS, validate: bool = False) -> list:
    """Load every .grp file in a directory, sorted by entry name.

    Any parse error aborts the load naming the offending file; duplicate
    entry names are rejected.  With validate=True, embedded expectations
    are recomputed and must hold.
    """
    root = Path(directory)
    if not root.is_dir():
        raise GroupFileError(f"corpus directory {root} does not exist")
    entries = []
    for path in sorted(root.glob("*.grp")):
        entries.append(parse_group_file(path.read_text(), source=str(path), max_degree=caps.max_degree))
    by_name = {}
    for e in entries:
        if e.name in by_name:
            raise GroupFileError(
                f"duplicate group name {e.name!r} (also in {by_name[e.name].source})",
                source=e.source,
            )
        by_name[e.name] = e
    entries.sort(key=lambda e: e.name)
    if validate:
        for e in entries:
            validate_expectations(e, caps)
    return entries


def corpus_digest(entries) -> str:
    blob = "\n".join(serialize_entry(e) for e in sorted(entries, key=lambda e: e.name))
    return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class Report:
    """Check results plus the metadata needed to reproduce them."""

    metadata: dict
    entries: list  # CheckResult records


def report_metadata(version: str, caps: Caps, entries) -> dict:
    return {
        "tool": TOOL_NAME,
        "version": version,
        "caps": caps.as_dict(),
        "corpus_digest": corpus_digest(entries),
    }


def render_report_lines(report: Report) -> list:
    lines = [json.dumps(report.metadata, separators=(",", ":"))]
    for r in sorted(report.entries, key=lambda r: (r.group, r.check_id)):
        record = {
            "group": r.group,
            "degree": r.degree,
            "order": str(r.order),
            "check": r.check_id,
            "status": r.status,
            "witness": r.witness,
            "elapsed_ms": r.elapsed_ms,
        }
        lines.append(json.dumps(record, separators=(",", ":")))
    return lines


def write_report(report: Report, dest) -> None:
    """Write the line-delimited report to a path or file-like object."""
    text = "\n".join(render_report_lines(report)) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)


def read_report(source) -> tuple:
    """Parse a report back into (metadata, list of record dicts)."""
    text = source.read() if hasattr(source, "read") else Path(source).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PgaError("empty report")
    metadata = json.loads(lines[0])
    records = [json.loads(ln) for ln in lines[1:]]
    return metadata, records
