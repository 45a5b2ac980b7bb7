#!/usr/bin/env python3
"""Survey the bundled corpus: fixity, elusiveness, pair-orbit rank and
2-closedness of every group, printed as a table.

Usage: python scripts/fixity_survey.py [corpus-dir]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from pga.closure import is_2_closed, orbitals
from pga.corpus import load_corpus
from pga.fixity import fixity, is_elusive, is_frobenius, is_regular

ROOT = Path(__file__).resolve().parents[1]


def classify(G):
    if is_regular(G):
        return "regular"
    if is_frobenius(G):
        return "frobenius"
    if is_elusive(G):
        return "elusive"
    return "-"


def main():
    corpus_dir = sys.argv[1] if len(sys.argv) > 1 else ROOT / "corpus"
    entries = load_corpus(corpus_dir)
    print(f"{'group':18} {'deg':>4} {'order':>8} {'fixity':>6} {'rank':>5} {'2-closed':>9}  class")
    for entry in entries:
        G = entry.group
        f = fixity(G).fixity
        rank = orbitals(G).rank
        closed = "yes" if is_2_closed(G) else "no"
        print(
            f"{entry.name:18} {G.degree:>4} {G.order():>8} {f:>6} {rank:>5} {closed:>9}  {classify(G)}"
        )


if __name__ == "__main__":
    main()
