"""Command line front end.

Element expressions use a small language: ``L[w]`` and ``L*[w]`` are the
generator for an admissible word ``w`` and its adjoint, ``a:w`` is the
symmetrized generator ``L[w] + L*[w]``, juxtaposition multiplies, ``+``
and ``-`` combine terms, and a term may carry a rational coefficient
(``2*L[e]``, ``1/2 a:l``).  Vertex words are written ``@v``.

Exit codes: 0 on success, 1 on a reported domain error (a JSON error
object goes to stderr), 2 on argument errors.  Output is deterministic
for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra import AlgebraElement
from .analyzers import (
    check_freeness,
    check_r_diagonal,
    check_semicircular,
    claims_audit,
    decompose,
    format_table,
)
from .cumulants import CumulantFunctional, DEFAULT_ARITY_BOUND
from .errors import DomainError
from .graphs import Graph, enumerate_paths, parse_graph, parse_word
from .operators import Backend

AUDIT_DEPTH = 8


# ---- element expression parsing ----

_WORD_RE = r"@?[A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*"
_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<plus>\+)"
    r"|(?P<minus>-)"
    r"|(?P<rat>\d+(?:/\d+)?)"
    r"|(?P<star>\*)"
    r"|L\*\[(?P<lstar>" + _WORD_RE + r")\]"
    r"|L\[(?P<lword>" + _WORD_RE + r")\]"
    r"|a:(?P<sym>" + _WORD_RE + r")"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DomainError(
                f"bad element syntax at position {pos}: {text[pos:pos + 12]!r}"
            )
        pos = m.end()
        kind = m.lastgroup
        if kind == "ws":
            continue
        tokens.append((kind, m.group(kind)))
    return tokens


def parse_element_ast(text: str) -> list[tuple[Fraction, list[tuple[str, str, bool]]]]:
    """One term per summand: (coefficient, factors).  A factor is
    ("gen", word, starred) or ("sym", word, False)."""
    tokens = _tokenize(text)
    if not tokens:
        raise DomainError("empty element expression")
    terms = []
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        kind, _ = tokens[i]
        if kind in ("plus", "minus"):
            sign = -1 if kind == "minus" else 1
            i += 1
        elif not first:
            raise DomainError(f"expected + or - between terms, got {tokens[i][1]!r}")
        first = False
        coeff = Fraction(1)
        has_coeff = False
        if i < len(tokens) and tokens[i][0] == "rat":
            coeff = Fraction(tokens[i][1])
            has_coeff = True
            i += 1
            if i < len(tokens) and tokens[i][0] == "star":
                i += 1
        factors = []
        while i < len(tokens) and tokens[i][0] in ("lword", "lstar", "sym"):
            kind, word = tokens[i]
            if kind == "sym":
                factors.append(("sym", word, False))
            else:
                factors.append(("gen", word, kind == "lstar"))
            i += 1
        if not factors and not has_coeff:
            raise DomainError(f"expected a generator at token {i}")
        if i < len(tokens) and tokens[i][0] not in ("plus", "minus"):
            raise DomainError(f"unexpected token {tokens[i][1]!r}")
        terms.append((Fraction(sign) * coeff, factors))
    return terms


def ast_degree(graph: Graph, ast) -> int:
    """Largest total word length across the terms; the degree bound one
    product with the expression can reach."""
    deg = 0
    for _, factors in ast:
        total = sum(parse_word(graph, word).length for _, word, _ in factors)
        deg = max(deg, total)
    return deg


def build_element(graph: Graph, backend: Backend, ast) -> AlgebraElement:
    total = AlgebraElement.zero(graph, backend)
    for coeff, factors in ast:
        if not factors:
            acc = AlgebraElement.identity(graph, backend)
        else:
            acc = None
            for kind, word_text, starred in factors:
                w = parse_word(graph, word_text)
                if kind == "sym":
                    if w.is_vertex:
                        raise DomainError(f"a:{word_text} needs a path word, not a vertex")
                    el = AlgebraElement.symmetrized_generator(graph, backend, w)
                else:
                    el = AlgebraElement.generator(graph, backend, w, starred=starred)
                acc = el if acc is None else acc * el
        total = total + acc.scale(coeff)
    return total


def parse_element(graph: Graph, backend: Backend, text: str) -> AlgebraElement:
    return build_element(graph, backend, parse_element_ast(text))


# ---- shared option plumbing ----


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise DomainError(f"cannot read graph file: {exc}") from None


def _make_backend(args, auto_depth: int) -> Backend:
    if args.backend == "axiomatic":
        if args.depth is not None:
            raise DomainError("depth applies to the fock backend")
        return Backend.axiomatic()
    depth = args.depth if args.depth is not None else auto_depth
    return Backend.fock(depth)


def _add_output_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None, metavar="FILE")


def _add_backend_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=("fock", "axiomatic"), default="fock")
    p.add_argument(
        "--depth",
        type=int,
        default=None,
        help="fock truncation depth (default: scales with order and word length)",
    )


def _render(args, text_fn, json_fn) -> str:
    if args.format == "json":
        return json.dumps(json_fn(), ensure_ascii=False, indent=2)
    return text_fn()


# ---- subcommands ----


def cmd_validate(args) -> str:
    graph = _load_graph(args.graph)

    def text():
        lines = [f"graph ok: {graph.summary()}", "vertices: " + " ".join(graph.vertices)]
        for e in graph.edges:
            tag = " (loop)" if e.is_loop else ""
            lines.append(f"edge {e.id}: {e.initial} -> {e.final}{tag}")
        return "\n".join(lines)

    def as_json():
        return {
            "summary": graph.summary(),
            "vertices": list(graph.vertices),
            "edges": [
                {"id": e.id, "initial": e.initial, "final": e.final, "loop": e.is_loop}
                for e in graph.edges
            ],
        }

    return _render(args, text, as_json)


def cmd_paths(args) -> str:
    graph = _load_graph(args.graph)
    if args.max_len < 0:
        raise DomainError("max length must be nonnegative")
    words = enumerate_paths(graph, args.max_len)

    def text():
        rows = [
            [str(w), w.initial, w.final, str(w.length), "yes" if w.is_loop else "no"]
            for w in words
        ]
        return format_table(["word", "from", "to", "len", "loop"], rows)

    def as_json():
        return [
            {
                "word": str(w),
                "initial": w.initial,
                "final": w.final,
                "length": w.length,
                "loop": w.is_loop,
            }
            for w in words
        ]

    return _render(args, text, as_json)


def cmd_decompose(args) -> str:
    graph = _load_graph(args.graph)
    report = decompose(graph, args.loop_bound)
    return _render(args, report.to_text, report.to_json_dict)


def _series_rows(entries) -> str:
    rows = [[str(n), str(v)] for n, v in entries]
    return format_table(["order", "value"], rows)


def cmd_moments(args) -> str:
    graph = _load_graph(args.graph)
    if args.max_order < 1:
        raise DomainError("max order must be positive")
    ast = parse_element_ast(args.element)
    auto = max(1, ast_degree(graph, ast)) * args.max_order
    backend = _make_backend(args, auto)
    a = build_element(graph, backend, ast)
    entries = [(n, a.power(n).expectation()) for n in range(1, args.max_order + 1)]

    def text():
        head = f"moments of {a}  [{backend}]"
        return "\n".join([head, _series_rows(entries)])

    def as_json():
        return {
            "element": str(a),
            "backend": backend.to_json(),
            "moments": [
                {"order": n, "value": str(v), "coeffs": v.to_json_dict()}
                for n, v in entries
            ],
        }

    return _render(args, text, as_json)


def cmd_cumulants(args) -> str:
    graph = _load_graph(args.graph)
    if args.max_order < 1:
        raise DomainError("max order must be positive")
    ast = parse_element_ast(args.element)
    auto = max(1, ast_degree(graph, ast)) * args.max_order
    backend = _make_backend(args, auto)
    a = build_element(graph, backend, ast)
    f = CumulantFunctional(bound=max(DEFAULT_ARITY_BOUND, args.max_order))
    entries = [(n, f.valuation((a,) * n)) for n in range(1, args.max_order + 1)]

    def text():
        head = f"cumulants of {a}  [{backend}]"
        return "\n".join([head, _series_rows(entries)])

    def as_json():
        return {
            "element": str(a),
            "backend": backend.to_json(),
            "cumulants": [
                {"order": n, "value": str(v), "coeffs": v.to_json_dict()}
                for n, v in entries
            ],
        }

    return _render(args, text, as_json)


def cmd_check_semicircular(args) -> str:
    graph = _load_graph(args.graph)
    if args.max_order < 2:
        raise DomainError("semicircularity needs max order at least 2")
    ast = parse_element_ast(args.element)
    auto = max(1, ast_degree(graph, ast)) * args.max_order
    backend = _make_backend(args, auto)
    a = build_element(graph, backend, ast)
    report = check_semicircular(a, args.max_order, bound=max(DEFAULT_ARITY_BOUND, args.max_order))
    return _render(args, report.to_text, report.to_json_dict)


def cmd_check_rdiagonal(args) -> str:
    graph = _load_graph(args.graph)
    if args.max_order < 2:
        raise DomainError("R-diagonality needs max order at least 2")
    word = parse_word(graph, args.word)
    auto = max(1, word.length) * args.max_order
    backend = _make_backend(args, auto)
    report = check_r_diagonal(
        graph, backend, word, args.max_order, bound=max(DEFAULT_ARITY_BOUND, args.max_order)
    )
    return _render(args, report.to_text, report.to_json_dict)


def cmd_check_freeness(args) -> str:
    graph = _load_graph(args.graph)
    if args.max_order < 1:
        raise DomainError("max order must be positive")
    asts_a = [parse_element_ast(t) for t in args.family_a]
    asts_b = [parse_element_ast(t) for t in args.family_b]
    deg = max(
        [ast_degree(graph, ast) for ast in asts_a + asts_b] or [0]
    )
    auto = max(1, deg) * args.max_order
    backend = _make_backend(args, auto)
    family_a = [build_element(graph, backend, ast) for ast in asts_a]
    family_b = [build_element(graph, backend, ast) for ast in asts_b]
    report = check_freeness(
        family_a,
        family_b,
        args.max_order,
        bound=max(DEFAULT_ARITY_BOUND, args.max_order),
    )
    return _render(args, report.to_text, report.to_json_dict)


def cmd_audit(args) -> str:
    graph = _load_graph(args.graph)
    depth = args.depth if args.depth is not None else AUDIT_DEPTH
    if args.backend == "axiomatic":
        if args.depth is not None:
            raise DomainError("depth applies to the fock backend")
        backends = [Backend.axiomatic()]
    elif args.backend == "fock":
        backends = [Backend.fock(depth)]
    else:
        backends = [Backend.axiomatic(), Backend.fock(depth)]
    report = claims_audit(graph, backends)
    return _render(args, report.to_text, report.to_json_dict)


# ---- driver ----


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphprob",
        description="exact workbench for graph-indexed operator distributions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a graph file and echo its contents")
    p.add_argument("graph")
    _add_output_opts(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("paths", help="enumerate admissible words up to a length")
    p.add_argument("graph")
    p.add_argument("--max-len", type=int, default=3)
    _add_output_opts(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("decompose", help="free product block decomposition")
    p.add_argument("graph")
    p.add_argument("--loop-bound", type=int, default=3)
    _add_output_opts(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("moments", help="diagonal moments E(a^n)")
    p.add_argument("graph")
    p.add_argument("element", help="element expression, e.g. 'a:l' or 'L[e] + L*[e]'")
    p.add_argument("--max-order", type=int, default=4)
    _add_backend_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("cumulants", help="diagonal cumulants k_n(a, ..., a)")
    p.add_argument("graph")
    p.add_argument("element")
    p.add_argument("--max-order", type=int, default=4)
    _add_backend_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("check-semicircular", help="is the element semicircular?")
    p.add_argument("graph")
    p.add_argument("element")
    p.add_argument("--max-order", type=int, default=6)
    _add_backend_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=cmd_check_semicircular)

    p = sub.add_parser("check-rdiagonal", help="is the word generator R-diagonal?")
    p.add_argument("graph")
    p.add_argument("word", help="path word, e.g. 'e' or 'e1.e2'")
    p.add_argument("--max-order", type=int, default=6)
    _add_backend_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=cmd_check_rdiagonal)

    p = sub.add_parser("check-freeness", help="mixed cumulants of two families")
    p.add_argument("graph")
    p.add_argument("--family-a", action="append", required=True, metavar="EXPR")
    p.add_argument("--family-b", action="append", required=True, metavar="EXPR")
    p.add_argument("--max-order", type=int, default=4)
    _add_backend_opts(p)
    _add_output_opts(p)
    p.set_defaults(func=cmd_check_freeness)

    p = sub.add_parser("audit", help="stated-vs-computed audit table")
    p.add_argument("graph")
    p.add_argument("--backend", choices=("both", "fock", "axiomatic"), default="both")
    p.add_argument("--depth", type=int, default=None)
    _add_output_opts(p)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        out = args.func(args)
    except DomainError as exc:
        sys.stderr.write(json.dumps({"error": exc.payload()}, ensure_ascii=False) + "\n")
        return 1
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        sys.stdout.write(out + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
