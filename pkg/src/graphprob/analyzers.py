"""Structure checkers and comparison reports.

Every checker recomputes through the public algebra operations, so a
report is reproducible from its inputs.  The audit table compares stated
reference identities for these algebras against the values each backend
actually computes; disagreement is data, not an error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    DiagonalElement,
    faithfulness_probe,
)
from .cumulants import (
    DEFAULT_ARITY_BOUND,
    CumulantFunctional,
    MixedScanReport,
    ScanFinding,
    mixed_cumulant_scan,
)
from .errors import DomainError
from .graphs import Graph, PathWord, classify_edges, diagram_distinct, enumerate_paths, primitive_root
from .operators import Backend


def format_table(headers, rows) -> str:
    widths = [len(h) for h in headers]
    for r in rows:
        for i, cell in enumerate(r):
            widths[i] = max(widths[i], len(cell))
    def fmt(row):
        return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines.extend(fmt(r) for r in rows)
    return "\n".join(lines)


# ==== semicircularity ====


def build_semicircular_system(graph: Graph, backend: Backend, loops) -> list[AlgebraElement]:
    """Symmetrized generators L[l] + L*[l] for pairwise diagram-distinct loops."""
    loops = list(loops)
    for w in loops:
        if w.is_vertex or not w.is_loop:
            raise DomainError(f"not a loop: {w}")
    for w1, w2 in itertools.combinations(loops, 2):
        if not diagram_distinct(w1, w2):
            raise DomainError(f"loops are not diagram-distinct: {w1} and {w2}")
    return [AlgebraElement.symmetrized_generator(graph, backend, w) for w in loops]


@dataclass(frozen=True)
class SemicircularReport:
    element: str
    backend: str
    max_checked_order: int
    k2: DiagonalElement
    offenders: tuple[tuple[int, DiagonalElement], ...]
    verdict: bool

    def to_json_dict(self) -> dict:
        return {
            "element": self.element,
            "backend": self.backend,
            "max_checked_order": self.max_checked_order,
            "k2": {"value": str(self.k2), "coeffs": self.k2.to_json_dict()},
            "offenders": [
                {"order": n, "value": str(v), "coeffs": v.to_json_dict()}
                for n, v in self.offenders
            ],
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        rows = [["2", str(self.k2), "variance"]]
        for n, v in self.offenders:
            rows.append([str(n), str(v), "offender"])
        table = format_table(["order", "bracket", "role"], rows)
        head = f"semicircularity of {self.element}  [{self.backend}]"
        tail = (
            f"verdict: semicircular to order {self.max_checked_order}"
            if self.verdict
            else f"verdict: not semicircular (nonzero brackets besides order 2)"
        )
        return "\n".join([head, table, tail])


def check_semicircular(
    a: AlgebraElement, max_order: int, *, bound: int = DEFAULT_ARITY_BOUND
) -> SemicircularReport:
    """Brackets k_n(a, ..., a) for n = 1..max_order; semicircular means
    the only nonzero bracket is the variance at order 2."""
    if not a.is_self_adjoint():
        raise DomainError("semicircularity check needs a self-adjoint element")
    f = CumulantFunctional(bound=max(bound, max_order))
    k2 = DiagonalElement.zero(a.graph)
    offenders = []
    for n in range(1, max_order + 1):
        val = f.valuation((a,) * n)
        if n == 2:
            k2 = val
        elif not val.is_zero:
            offenders.append((n, val))
    return SemicircularReport(
        str(a), str(a.backend), max_order, k2, tuple(offenders), not offenders
    )


# ==== R-diagonality ====


@dataclass(frozen=True)
class RDiagonalReport:
    word: str
    backend: str
    max_checked_order: int
    nonzero: tuple[ScanFinding, ...]
    verdict: bool

    def to_json_dict(self) -> dict:
        return {
            "word": self.word,
            "backend": self.backend,
            "max_checked_order": self.max_checked_order,
            "nonzero": [f.to_json_dict() for f in self.nonzero],
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        rows = [
            [str(f.order), "(" + ", ".join(f.pattern) + ")", str(f.value)]
            for f in self.nonzero
        ]
        table = format_table(["order", "pattern", "value"], rows)
        head = f"R-diagonality of a = L[{self.word}]  [{self.backend}]"
        tail = (
            "verdict: true (every nonzero bracket alternates a, a*)"
            if self.verdict
            else "verdict: false (nonzero bracket with a non-alternating pattern)"
        )
        return "\n".join([head, table, tail])


def _alternating(pattern: tuple[str, ...]) -> bool:
    if len(pattern) % 2:
        return False
    return all(pattern[i] != pattern[i + 1] for i in range(len(pattern) - 1))


def check_r_diagonal(
    graph: Graph,
    backend: Backend,
    word: PathWord,
    max_order: int,
    *,
    bound: int = DEFAULT_ARITY_BOUND,
) -> RDiagonalReport:
    """Scan every bracket over {L[w], L*[w]} up to max_order; R-diagonal
    means nonzero brackets occur only on even alternating patterns."""
    if word.is_vertex:
        raise DomainError("R-diagonality concerns path generators, not vertices")
    c = AlgebraElement.generator(graph, backend, word)
    s = AlgebraElement.generator(graph, backend, word, starred=True)
    names = {c: "a", s: "a*"}
    f = CumulantFunctional(bound=max(bound, max_order))
    findings = []
    for n in range(1, max_order + 1):
        for tup in itertools.product((c, s), repeat=n):
            val = f.valuation(tup)
            if not val.is_zero:
                findings.append(ScanFinding(n, tuple(names[x] for x in tup), val))
    verdict = all(_alternating(f0.pattern) for f0 in findings)
    return RDiagonalReport(str(word), str(backend), max_order, tuple(findings), verdict)


# ==== freeness ====


@dataclass(frozen=True)
class FreenessReport:
    family_a: tuple[str, ...]
    family_b: tuple[str, ...]
    backend: str
    max_order: int
    scan: MixedScanReport
    prediction: str
    non_distinct_pairs: tuple[tuple[str, str], ...]
    agreement: str

    @property
    def free_to_order(self) -> bool:
        return self.scan.free_to_order

    def to_json_dict(self) -> dict:
        return {
            "family_a": list(self.family_a),
            "family_b": list(self.family_b),
            "backend": self.backend,
            "max_order": self.max_order,
            "scan": self.scan.to_json_dict(),
            "free_to_order": self.free_to_order,
            "prediction": self.prediction,
            "non_distinct_pairs": [list(p) for p in self.non_distinct_pairs],
            "agreement": self.agreement,
        }

    def to_text(self) -> str:
        head = (
            f"freeness of {{{', '.join(self.family_a)}}} vs "
            f"{{{', '.join(self.family_b)}}}  [{self.backend}]"
        )
        rows = [
            [str(f.order), "(" + ", ".join(f.pattern) + ")", str(f.value)]
            for f in self.scan.findings
        ]
        table = format_table(["order", "pattern", "value"], rows)
        lines = [
            head,
            f"mixed tuples checked: {self.scan.checked} (orders 1..{self.max_order})",
            table,
            f"computed: {'free' if self.free_to_order else 'not free'} to order {self.max_order}",
            f"diagram prediction: {self.prediction}",
            f"agreement: {self.agreement}",
        ]
        return "\n".join(lines)


def check_freeness(
    family_a,
    family_b,
    max_order: int,
    *,
    bound: int = DEFAULT_ARITY_BOUND,
    labels=None,
) -> FreenessReport:
    """Mixed-cumulant scan next to the diagram-distinctness prediction.

    The prediction compares the path words supporting each family: all
    cross pairs diagram-distinct predicts freeness.  Families supported
    only on vertices predict vacuously.
    """
    family_a = list(family_a)
    family_b = list(family_b)
    if not family_a or not family_b:
        raise DomainError("freeness check needs two nonempty families")
    backend = family_a[0].backend
    scan = mixed_cumulant_scan(
        family_a, family_b, max_order, bound=max(bound, max_order), labels=labels
    )
    words_a = sorted(
        {w for a in family_a for w in a.support().path_support}, key=lambda w: w.key()
    )
    words_b = sorted(
        {w for b in family_b for w in b.support().path_support}, key=lambda w: w.key()
    )
    bad = tuple(
        (str(wa), str(wb))
        for wa in words_a
        for wb in words_b
        if not diagram_distinct(wa, wb)
    )
    prediction = "diagram-distinct" if not bad else "not-diagram-distinct"
    agreement = "agree" if scan.free_to_order == (not bad) else "disagree"
    return FreenessReport(
        scan.family_a,
        scan.family_b,
        str(backend),
        max_order,
        scan,
        prediction,
        bad,
        agreement,
    )


# ==== free product decomposition ====


@dataclass(frozen=True)
class DiagonalBlock:
    vertices: tuple[str, ...]
    label: str


@dataclass(frozen=True)
class EdgeBlock:
    edge: str
    kind: str
    base: tuple[str, ...]
    structure: str
    hint: str | None


@dataclass(frozen=True)
class BasicLoopRow:
    word: str
    vertex: str
    factorization: tuple[str, ...]
    generated_by: tuple[str, ...]


@dataclass(frozen=True)
class DecompositionReport:
    """Free-product block picture: the diagonal plus one block per edge,
    with a finer view listing basic loops generated by those blocks."""

    diagonal: DiagonalBlock
    edge_blocks: tuple[EdgeBlock, ...]
    basic_loops: tuple[BasicLoopRow, ...]
    loop_length_bound: int
    notes: tuple[str, ...]

    @property
    def block_count(self) -> int:
        return 1 + len(self.edge_blocks)

    def to_json_dict(self) -> dict:
        return {
            "diagonal": {
                "vertices": list(self.diagonal.vertices),
                "label": self.diagonal.label,
            },
            "edge_blocks": [
                {
                    "edge": b.edge,
                    "kind": b.kind,
                    "base": list(b.base),
                    "structure": b.structure,
                    "hint": b.hint,
                }
                for b in self.edge_blocks
            ],
            "basic_loops": [
                {
                    "word": r.word,
                    "vertex": r.vertex,
                    "factorization": list(r.factorization),
                    "generated_by": list(r.generated_by),
                }
                for r in self.basic_loops
            ],
            "loop_length_bound": self.loop_length_bound,
            "block_count": self.block_count,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        rows = [["diagonal", "-", " ".join(self.diagonal.vertices), self.diagonal.label, "-"]]
        for b in self.edge_blocks:
            rows.append([b.edge, b.kind, " ".join(b.base), b.structure, b.hint or "-"])
        table = format_table(["block", "kind", "base", "structure", "hint"], rows)
        loop_rows = [
            [r.word, r.vertex, ".".join(r.factorization), " ".join(r.generated_by)]
            for r in self.basic_loops
        ]
        loops = format_table(["basic loop", "vertex", "factorization", "generated by"], loop_rows)
        parts = [
            f"free product decomposition ({self.block_count} blocks)",
            table,
            f"basic loops to length {self.loop_length_bound}",
            loops,
        ]
        parts.extend(f"note: {n}" for n in self.notes)
        return "\n".join(parts)


def decompose(graph: Graph, loop_length_bound: int = 3) -> DecompositionReport:
    """One block per edge over the common diagonal, with free-group-factor
    hints where several loop edges share a vertex."""
    if loop_length_bound < 1:
        raise DomainError("loop length bound must be positive")
    loops_at: dict[str, int] = {}
    for e in graph.edges:
        if e.is_loop:
            loops_at[e.initial] = loops_at.get(e.initial, 0) + 1
    blocks = []
    for e in graph.edges:
        if e.is_loop:
            k = loops_at[e.initial]
            blocks.append(
                EdgeBlock(
                    e.id,
                    "loop",
                    (e.initial,),
                    f"(W*({{L[{e.id}]}}), tr) ⊗ (D_G, 1)",
                    f"L(F_{k})",
                )
            )
        else:
            blocks.append(
                EdgeBlock(
                    e.id,
                    "nonloop",
                    (e.initial, e.final),
                    f"(W*({{L[{e.id}]}}, D_w), E_w) ⊗ (D_G, 1)",
                    None,
                )
            )
    basic = []
    for w in enumerate_paths(graph, loop_length_bound):
        if w.is_vertex or not w.is_loop:
            continue
        root, power = primitive_root(w)
        if power != 1:
            continue
        basic.append(
            BasicLoopRow(
                str(w), w.initial, w.edges, tuple(sorted(set(w.edges)))
            )
        )
    notes = [
        f"basic loops enumerated to length {loop_length_bound}; "
        "every loop is a power of a basic loop and adds no new block"
    ]
    if loops_at:
        notes.append("free-group-factor hints are annotations, not verified isomorphisms")
    if len(loops_at) >= 2:
        ks = [loops_at[v] for v in graph.vertices if v in loops_at]
        lhs = " *_D ".join(f"L(F_{k})" for k in ks)
        notes.append(f"{lhs} ≠ L(F_{sum(ks)})")
    return DecompositionReport(
        DiagonalBlock(graph.vertices, f"Δ_{len(graph.vertices)}"),
        tuple(blocks),
        tuple(basic),
        loop_length_bound,
        tuple(notes),
    )


# ==== stated-vs-computed audit ====


@dataclass(frozen=True)
class AuditRow:
    id: str
    claim: str
    stated: str
    computed: dict
    verdict: str

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "claim": self.claim,
            "stated": self.stated,
            "computed": dict(self.computed),
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class AuditReport:
    graph_summary: str
    backends: tuple[str, ...]
    rows: tuple[AuditRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_summary,
            "backends": list(self.backends),
            "rows": [r.to_json_dict() for r in self.rows],
        }

    def to_text(self) -> str:
        headers = ["id", "claim", "stated"] + list(self.backends) + ["verdict"]
        rows = []
        for r in self.rows:
            rows.append(
                [r.id, r.claim, r.stated]
                + [r.computed[b] for b in self.backends]
                + [r.verdict]
            )
        return "\n".join(
            [f"stated-vs-computed audit  [{self.graph_summary}]", format_table(headers, rows)]
        )


def _verdict(matches: dict) -> str:
    vals = set(matches.values())
    if vals == {True}:
        return "match"
    if vals == {False}:
        return "mismatch"
    return "backend-dependent"


def claims_audit(graph: Graph, backends) -> AuditReport:
    """Audit rows R1..R6 where the graph supplies a subject.

    R1 needs any edge, the loop rows R2, R3, R5, R6 need a loop edge, and
    fock backends need depth at least 6 for the order-6 semicircularity
    row.  Mismatching rows are reported, never raised.
    """
    backends = list(backends)
    kinds = [b.kind for b in backends]
    if len(set(kinds)) != len(kinds):
        raise DomainError("one backend per kind in an audit")
    classes = classify_edges(graph)
    rows = []

    first_edge = graph.edges[0] if graph.edges else None
    if first_edge is not None:
        w = PathWord.from_edges(graph, [first_edge.id])
        computed = {}
        matches = {}
        for b in backends:
            lw = AlgebraElement.generator(graph, b, w)
            prod = lw * lw.adjoint()
            proj = AlgebraElement.vertex_projection(graph, b, first_edge.initial)
            computed[b.kind] = str(prod)
            matches[b.kind] = prod == proj
        rows.append(
            AuditRow(
                "R1",
                f"range projection: L[{w}]L*[{w}] equals the projection at @{first_edge.initial}",
                f"1*L[@{first_edge.initial}]",
                computed,
                _verdict(matches),
            )
        )

        computed4, matches4 = {}, {}
        for b in backends:
            samples = [
                AlgebraElement.generator(graph, b, w),
                AlgebraElement.generator(graph, b, w, starred=True),
            ]
            probe = faithfulness_probe(graph, b, samples)
            if probe.faithful_on_samples:
                computed4[b.kind] = "no counterexamples"
            else:
                computed4[b.kind] = f"counterexample: a = {probe.counterexamples[0]}"
            matches4[b.kind] = probe.faithful_on_samples
        rows.append(
            AuditRow(
                "R4",
                "the diagonal compression is faithful: E(a* a) = 0 implies a = 0",
                "no counterexamples",
                computed4,
                _verdict(matches4),
            )
        )

    if classes.eloop:
        loop_edge = graph.edge(classes.eloop[0])
        lw = PathWord.from_edges(graph, [loop_edge.id])
        v = loop_edge.initial
        stated2 = DiagonalElement.vertex_unit(graph, v, 2)
        stated8 = DiagonalElement.vertex_unit(graph, v, 8)
        unit = DiagonalElement.vertex_unit(graph, v)

        computed2, matches2 = {}, {}
        computed3, matches3 = {}, {}
        computed5, matches5 = {}, {}
        computed6, matches6 = {}, {}
        for b in backends:
            a = AlgebraElement.symmetrized_generator(graph, b, lw)
            f = CumulantFunctional()
            k2 = f.valuation((a, a))
            computed2[b.kind] = str(k2)
            matches2[b.kind] = k2 == stated2

            m4 = a.power(4).expectation()
            computed3[b.kind] = str(m4)
            matches3[b.kind] = m4 == stated8

            rep = check_semicircular(a, 6)
            if rep.verdict:
                computed5[b.kind] = "verdict true"
            else:
                orders = ",".join(str(n) for n, _ in rep.offenders)
                computed5[b.kind] = f"verdict false (nonzero at orders {orders})"
            matches5[b.kind] = rep.verdict

            half = k2 * Fraction(1, 2)
            computed6[b.kind] = str(half)
            matches6[b.kind] = half == unit

        rows.append(
            AuditRow(
                "R2",
                f"second bracket of a = L[{lw}] + L*[{lw}] equals 2*L[@{v}]",
                str(stated2),
                computed2,
                _verdict(matches2),
            )
        )
        rows.append(
            AuditRow(
                "R3",
                f"fourth moment E(a^4) of a = L[{lw}] + L*[{lw}] equals 8*L[@{v}]",
                str(stated8),
                computed3,
                _verdict(matches3),
            )
        )
        rows.append(
            AuditRow(
                "R5",
                "the symmetrized loop generator is semicircular "
                "(only the order-2 bracket is nonzero, checked to order 6)",
                "verdict true",
                computed5,
                _verdict(matches5),
            )
        )
        rows.append(
            AuditRow(
                "R6",
                "halving the loop variance (squared 1/sqrt(2) normalization) "
                "gives the unit second bracket",
                str(unit),
                computed6,
                _verdict(matches6),
            )
        )

    order = {"R1": 0, "R2": 1, "R3": 2, "R4": 3, "R5": 4, "R6": 5}
    rows.sort(key=lambda r: order[r.id])
    return AuditReport(graph.summary(), tuple(kinds), tuple(rows))
