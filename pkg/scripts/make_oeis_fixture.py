#!/usr/bin/env python3
"""Regenerate the vendored A249665 b-file fixture.

The anchored k=3 sequence is exactly what that entry enumerates, so the
fixture is produced from the proven depth-8 recurrence (offset 1). When a
network is available, pass --fetch to pull the live b-file instead.
"""

import argparse
from pathlib import Path

from anchorperms.closed_form import k3_table
from anchorperms.oeis import fetch_terms

FIXTURE_DIRS = [
    Path(__file__).resolve().parent.parent / "src" / "anchorperms" / "data",
    Path(__file__).resolve().parent.parent / "tests" / "fixtures",
]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=60)
    ap.add_argument("--fetch", action="store_true", help="pull the live b-file")
    args = ap.parse_args()

    if args.fetch:
        table = fetch_terms("A249665", FIXTURE_DIRS[0], refresh=True)
        text = "".join(f"{i} {table[i]}\n" for i in sorted(table.terms))
    else:
        text = "".join(f"{n} {v}\n" for n, v in enumerate(k3_table(args.terms), start=1))
    for d in FIXTURE_DIRS:
        d.mkdir(parents=True, exist_ok=True)
        (d / "A249665.txt").write_text(text)
        print(f"wrote {d / 'A249665.txt'}")


if __name__ == "__main__":
    main()
