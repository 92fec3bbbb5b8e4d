"""Report whether composition-series length depends on the tie-breaking order.

Every order of choosing among minimal ideals is explored on small random graphs.
"""

from __future__ import annotations

import argparse
from collections import Counter

from leavitt.monoid import all_series_lengths
from leavitt.randgraph import RandomGraphSpec, random_graph


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-vertices", type=int, default=6)
    args = ap.parse_args()

    lengths = Counter()
    varying = []
    for i in range(args.n):
        g = random_graph(RandomGraphSpec(args.seed * 1_000_003 + i, args.max_vertices, 12, connected=None))
        found = all_series_lengths(g)
        if len(found) > 1:
            varying.append((g.name, sorted(found)))
        else:
            lengths[next(iter(found))] += 1
    for length, count in sorted(lengths.items()):
        print(f"length {length}: {count} graphs")
    print(f"order-dependent lengths: {len(varying)}")
    for name, found in varying:
        print(f"  {name}: {found}")


if __name__ == "__main__":
    main()
