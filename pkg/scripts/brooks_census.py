#!/usr/bin/env python3
"""Census of the max-degree tight cases over all small connected digraphs.

Enumerates every labelled digraph on up to --max-n vertices, classifies
the connected ones, and cross-checks the verdict against the exact
solver.  Prints one row per (vertex count, max-degree) cell.
"""

import argparse
from collections import Counter

from dichroma.brooks import classify_brooks
from dichroma.colouring import exact_dichromatic
from dichroma.core import Digraph


def labelled_digraphs(n):
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(pairs)):
        arcs = frozenset(p for q, p in enumerate(pairs) if (mask >> q) & 1)
        yield Digraph(n, arcs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    tally = Counter()
    tight_kinds = Counter()
    for n in range(1, args.max_n + 1):
        for d in labelled_digraphs(n):
            if not d.is_connected:
                continue
            verdict = classify_brooks(d)
            chi = exact_dichromatic(d).value
            assert verdict.tight == (chi == d.delta_max + 1)
            tally[(n, d.delta_max, verdict.tight)] += 1
            if verdict.tight:
                tight_kinds[verdict.components[0].exception] += 1
    print(f"{'n':>3} {'delta_max':>9} {'tight':>6} {'count':>8}")
    for (n, dm, tight), count in sorted(tally.items()):
        print(f"{n:>3} {dm:>9} {str(tight):>6} {count:>8}")
    print("\ntight kinds:", dict(tight_kinds))


if __name__ == "__main__":
    main()
