"""Command-line front end.

Subcommands: analyze, verify, two-closure, fixity, gen.  Exit codes:
0 success (verify: no violated results), 1 violated results, 2 parse or
parameter errors, 3 resource caps hit (verify: only with --strict).

The environment variable PGA_CAPS may override caps as comma-separated
key=value pairs (e.g. "enumeration_cap=10000,lattice_cap=128"); explicit
flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .closure import orbitals, two_closure
from .config import DEFAULT_CAPS, parse_caps_overrides
from .corpus import (
    CorpusEntry,
    Report,
    builtin_family,
    load_corpus,
    parse_group_file,
    report_metadata,
    serialize_entry,
    write_report,
)
from .errors import CapExceededError, InvalidFamilyError, PgaError
from .fixity import fixity
from .harness import CHECK_IDS, SKIPPED, VIOLATED, analyze, run_all, summarize

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_CAPPED = 3


def _add_cap_flags(parser):
    parser.add_argument("--enumeration-cap", type=int, metavar="N", default=None)
    parser.add_argument("--lattice-cap", type=int, metavar="N", default=None)
    parser.add_argument("--closure-cap", type=int, metavar="N", default=None)
    parser.add_argument("--max-degree", type=int, metavar="N", default=None)


def _caps_from(args):
    base = DEFAULT_CAPS
    env = os.environ.get("PGA_CAPS")
    if env:
        base = parse_caps_overrides(env, base)
    return base.with_overrides(
        enumeration_cap=args.enumeration_cap,
        lattice_cap=args.lattice_cap,
        closure_degree_cap=args.closure_cap,
        max_degree=args.max_degree,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pga", description=__doc__)
    parser.add_argument("--version", action="version", version=f"pga {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of one group file")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "machine-records"], default="text")
    _add_cap_flags(p)

    p = sub.add_parser("verify", help="run the check suite over a corpus directory")
    p.add_argument("dir")
    p.add_argument("--check", default="all", metavar="LIST", help="comma-separated check ids, or 'all'")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--strict", action="store_true", help="exit 3 when any result is skipped")
    p.add_argument("--format", choices=["text", "machine-records"], default="text")
    _add_cap_flags(p)

    p = sub.add_parser("two-closure", help="orbit coloring rank and 2-closure of one group")
    p.add_argument("file")
    p.add_argument("--emit", default=None, metavar="PATH", help="write the closure generators as a .grp file")
    _add_cap_flags(p)

    p = sub.add_parser("fixity", help="fixity and witness of one group")
    p.add_argument("file")
    _add_cap_flags(p)

    p = sub.add_parser("gen", help="write a builtin family member as a .grp file")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--out", required=True, metavar="PATH")
    return parser


def _load_entry(path, caps) -> CorpusEntry:
    text = Path(path).read_text()
    return parse_group_file(text, source=str(path), max_degree=caps.max_degree)


def _cmd_analyze(args) -> int:
    caps = _caps_from(args)
    try:
        entry = _load_entry(args.file, caps)
        a = analyze(entry, caps)
    except (OSError, PgaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "machine-records":
        print(json.dumps(_analysis_record(a), separators=(",", ":")))
    else:
        _print_analysis(a)
    return EXIT_CAPPED if a.skip_reasons else EXIT_OK


def _analysis_record(a) -> dict:
    return {
        "group": a.name,
        "degree": a.degree,
        "order": str(a.order),
        "transitive": a.transitive,
        "fixity": a.fixity.fixity if a.fixity else None,
        "elusive": a.elusive,
        "two_closed": a.two_closed,
        "solvable": a.solvable,
        "normal_orders": [str(i.order.value) for i in a.normal_lattice] if a.normal_lattice is not None else None,
        "skipped": sorted(a.skip_reasons),
    }


def _yesno(value) -> str:
    if value is None:
        return "skipped"
    return "yes" if value else "no"


def _print_analysis(a) -> None:
    print(f"name: {a.name}")
    print(f"degree: {a.degree} = {a.degree_factored}")
    print(f"order: {a.order} = {a.order_factored}")
    print(f"transitive: {_yesno(a.transitive)}")
    if a.fixity is not None:
        w = a.fixity.witness
        fixed = "{" + ", ".join(map(str, sorted(a.fixity.witness_fixed_set))) + "}"
        print(f"fixity: {a.fixity.fixity}  witness {w.cycle_string()}  fixes {fixed}")
    else:
        print(f"fixity: skipped ({a.skip_reasons.get('fixity', '')})")
    print(f"elusive: {_yesno(a.elusive)}")
    print(f"2-closed: {_yesno(a.two_closed)}")
    print(f"solvable: {_yesno(a.solvable)}")
    if a.normal_lattice is not None:
        orders = ", ".join(str(i.order.value) for i in a.normal_lattice)
        print(f"normal subgroup orders: {orders}")
        minimal = ", ".join(str(i.order.value) for i in a.minimal_normals)
        print(f"minimal normal orders: {minimal or '-'}")
    else:
        print(f"normal subgroup orders: skipped ({a.skip_reasons.get('normal_lattice', '')})")
    if a.prime_profile is not None:
        for p, counts in a.prime_profile.power_fix_counts.items():
            shown = "{" + ", ".join(map(str, sorted(counts))) + "}"
            print(f"fixed-point counts of {p}-power-order elements: {shown}")


def _cmd_verify(args) -> int:
    caps = _caps_from(args)
    try:
        entries = load_corpus(args.dir, caps)
    except (OSError, PgaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not entries:
        print("warning: corpus directory has no .grp files", file=sys.stderr)
        report = Report(metadata=report_metadata(__version__, caps, []), entries=[])
        _emit_report(report, args)
        return EXIT_OK
    if args.check.strip() == "all":
        selection = CHECK_IDS
    else:
        selection = tuple(s.strip() for s in args.check.split(",") if s.strip())
    try:
        report = run_all(entries, selection, caps, jobs=max(1, args.jobs))
    except PgaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit_report(report, args)
    counts = summarize(report)
    if args.format == "text":
        _print_summary(counts, len(entries))
    violated = sum(c[VIOLATED] for c in counts.values())
    skipped = sum(c[SKIPPED] for c in counts.values())
    if violated:
        return EXIT_VIOLATED
    if args.strict and skipped:
        return EXIT_CAPPED
    return EXIT_OK


def _emit_report(report, args) -> None:
    if args.out:
        write_report(report, args.out)
    elif args.format == "machine-records":
        write_report(report, sys.stdout)


def _print_summary(counts, n_groups) -> None:
    print(f"groups: {n_groups}")
    print(f"{'check':8} {'verified':>9} {'vacuous':>9} {'violated':>9} {'skipped':>9}")
    for cid in CHECK_IDS:
        if cid not in counts:
            continue
        c = counts[cid]
        print(f"{cid:8} {c['verified']:>9} {c['vacuous']:>9} {c['violated']:>9} {c['skipped']:>9}")


def _cmd_two_closure(args) -> int:
    caps = _caps_from(args)
    try:
        entry = _load_entry(args.file, caps)
    except (OSError, PgaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    G = entry.group
    try:
        closure = two_closure(G, caps.closure_degree_cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPPED
    part = orbitals(G)
    order = G.order()
    closure_order = closure.order()
    print(f"group order: {order}")
    print(f"pair-orbit rank: {part.rank}")
    print(f"closure order: {closure_order}")
    print(f"is 2-closed: {'yes' if closure_order == order else 'no'}")
    if args.emit:
        out = CorpusEntry(
            name=f"{entry.name}_closure",
            source="computed",
            group=closure,
            declared_degree=G.degree,
        )
        Path(args.emit).write_text(serialize_entry(out))
    return EXIT_OK


def _cmd_fixity(args) -> int:
    caps = _caps_from(args)
    try:
        entry = _load_entry(args.file, caps)
    except (OSError, PgaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = fixity(entry.group, caps.enumeration_cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPPED
    except PgaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fixed = "{" + ", ".join(map(str, sorted(result.witness_fixed_set))) + "}"
    print(f"fixity: {result.fixity}")
    print(f"witness: {result.witness.cycle_string()}  fixes {fixed}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        entry = builtin_family(args.family, args.params)
    except InvalidFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    Path(args.out).write_text(serialize_entry(entry))
    return EXIT_OK


_COMMANDS = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "two-closure": _cmd_two_closure,
    "fixity": _cmd_fixity,
    "gen": _cmd_gen,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
