"""Rewrite the expected-report files next to every graph in a corpus directory.

Review the diff by hand before committing regenerated goldens.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from leavitt import corpus


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("dir", nargs="?", default=None, help="defaults to the builtin corpus")
    args = ap.parse_args()
    directory = Path(args.dir) if args.dir else corpus.builtin_dir()
    for path in sorted(directory.glob("*.graph")):
        out = corpus.golden_for(path)
        out.write_text(corpus.dump_json(corpus.golden_reports(path)), encoding="utf-8")
        print(f"wrote {out.name}")


if __name__ == "__main__":
    main()
