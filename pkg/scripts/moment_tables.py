#!/usr/bin/env python3
"""Print moment and cumulant tables for an element under both backends.

The element uses the same mini-language as the command line, so the
tables double as a quick way to eyeball where the two backends diverge:

    python3 scripts/moment_tables.py fixtures/one_loop.graph "a:l"
    python3 scripts/moment_tables.py fixtures/single_edge.graph "L[e] + L*[e]" --max-order 8
"""

import argparse
import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from graphprob import Backend, CumulantFunctional, parse_graph  # noqa: E402
from graphprob.analyzers import format_table  # noqa: E402
from graphprob.cli import ast_degree, build_element, parse_element_ast  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("graph", type=pathlib.Path)
    parser.add_argument("element")
    parser.add_argument("--max-order", type=int, default=6)
    parser.add_argument("--depth", type=int, default=0, help="override the fock depth")
    args = parser.parse_args()

    graph = parse_graph(args.graph.read_text(encoding="utf-8"))
    ast = parse_element_ast(args.element)
    depth = args.depth or max(1, ast_degree(graph, ast)) * args.max_order
    backends = [Backend.axiomatic(), Backend.fock(depth)]

    rows = []
    for backend in backends:
        a = build_element(graph, backend, ast)
        functional = CumulantFunctional(bound=max(8, args.max_order))
        for n in range(1, args.max_order + 1):
            rows.append(
                [
                    str(backend),
                    str(n),
                    str(a.power(n).expectation()),
                    str(functional.valuation((a,) * n)),
                ]
            )
    print(f"graph: {graph.summary()}")
    print(f"element: {args.element}")
    print(format_table(["backend", "n", "E(a^n)", "k_n(a,...,a)"], rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
