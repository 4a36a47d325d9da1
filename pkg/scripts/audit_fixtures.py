#!/usr/bin/env python3
"""Run the stated-vs-computed claims audit over every bundled fixture.

Each graph gets one table with both backends side by side.  The audit
reports divergence, it never raises on a mismatched row, so this script
always exits 0 unless a fixture fails to parse.
"""

import argparse
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from graphprob import Backend, claims_audit, parse_graph  # noqa: E402

FIXTURES = ROOT / "fixtures"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--depth",
        type=int,
        default=8,
        help="fock truncation depth, at least 6 for the order-6 rows",
    )
    args = parser.parse_args()

    backends = [Backend.axiomatic(), Backend.fock(args.depth)]
    for path in sorted(FIXTURES.glob("*.graph")):
        graph = parse_graph(path.read_text(encoding="utf-8"))
        report = claims_audit(graph, backends)
        print(f"== {path.stem} ==")
        print(report.to_text())
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
