#!/usr/bin/env python3
"""Construct the 3-transitive degree-12 action of the Mathieu group M11
and write it to corpus/m11_12.grp with embedded validation expectations.

Route: start from the classical degree-11 generators (an 11-cycle and a
double 4-cycle), locate an index-12 subgroup (order 660) as the group
generated by the 11-cycle and a suitable involution, and take the action
on its right cosets.  Every step is verified computationally: the
degree-11 group must have order 7920, the subgroup order 660, and the
resulting degree-12 group must recompute to order 7920, transitive,
point stabilizer order 660, elusive, and fixity 4.  The script fails
loudly if any of those checks fails, so the emitted file carries no
unverified data.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from pga.fixity import fixity, is_elusive
from pga.group import PermGroup
from pga.perm import Permutation

ROOT = Path(__file__).resolve().parents[1]


def find_index_12_subgroup(G):
    """Order-660 subgroup generated by the 11-cycle and an involution."""
    eleven_cycle = G.generators[0]
    assert eleven_cycle.order() == 11
    for t in G.elements():
        if t.order() != 2:
            continue
        H = PermGroup(G.degree, [eleven_cycle, t])
        if H.order() == 660:
            return H
    raise AssertionError("no order-660 subgroup found")


def coset_action(G, H):
    """Permutations induced by G's generators on the right cosets of H."""
    reps = []
    coset_of = {}
    for g in G.elements():
        for idx, r in enumerate(reps):
            if H.contains(g * r.inverse()):
                coset_of[g.images] = idx
                break
        else:
            coset_of[g.images] = len(reps)
            reps.append(g)
    n = len(reps)
    images = []
    for s in G.generators:
        images.append(Permutation([coset_of[(r * s).images] for r in reps]))
    return PermGroup(n, images)


def main():
    x = Permutation.from_cycles("(0 1 2 3 4 5 6 7 8 9 10)", 11)
    y = Permutation.from_cycles("(2 6 10 7)(3 9 4 5)", 11)
    G11 = PermGroup(11, [x, y])
    assert G11.order() == 7920, G11.order()

    H = find_index_12_subgroup(G11)
    G12 = coset_action(G11, H)

    assert G12.degree == 12
    assert G12.order() == 7920
    assert G12.is_transitive()
    assert G12.point_stabilizer(0).order() == 660
    assert is_elusive(G12)
    f = fixity(G12).fixity
    assert f == 4, f

    lines = ["name: m11_12", "degree: 12"]
    lines += [f"gen: {g.cycle_string()}" for g in G12.generators]
    lines += [
        "# expect: order 7920",
        "# expect: transitive true",
        "# expect: stabilizer_order 660",
        "# expect: elusive true",
        "# expect: fixity 4",
    ]
    out = ROOT / "corpus" / "m11_12.grp"
    out.parent.mkdir(exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")
    for g in G12.generators:
        print(f"  gen {g.cycle_string()}")


if __name__ == "__main__":
    main()
