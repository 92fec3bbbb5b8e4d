"""Run the random-graph cross-checks and write counterexamples to a directory."""

from __future__ import annotations

import argparse
import json
import os

from leavitt.checks import property_suite
from leavitt.randgraph import RandomGraphSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--chars", default="0,2,3")
    ap.add_argument("--max-vertices", type=int, default=8)
    ap.add_argument("--max-edges", type=int, default=16)
    ap.add_argument("--out", default="counterexamples")
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    spec = RandomGraphSpec(args.seed, args.max_vertices, args.max_edges, connected=None)
    chars = [int(c) for c in args.chars.split(",")]
    res = property_suite(args.n, spec, chars, out_dir=args.out, jobs=args.jobs)
    print(json.dumps(res["failures"], indent=2, sort_keys=True))
    print("ok" if res["ok"] else f"{len(res['counterexamples'])} counterexamples in {args.out}/")


if __name__ == "__main__":
    main()
