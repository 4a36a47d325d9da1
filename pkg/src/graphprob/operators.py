"""Two semantics for words in the creation and annihilation generators.

Every word over ``{L[w], L*[w]}`` reduces to a single two-sided normal
form ``L[p]L*[q]`` or to the zero operator.  The axiomatic backend also
identifies the range projection ``L[c]L*[c]`` with the projection at the
initial vertex of ``c``, which shortens normal forms by cancelling common
final segments.  The fock backend keeps those operators distinct: on the
path-space basis ``L[c]L*[c]`` only fixes vectors with prefix ``c``, a
proper subprojection of the vertex projection.  The divergence is
deliberate and surfaces in the analyzers' audit table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DepthError, DomainError
from .graphs import Graph, PathWord, concat, strip_prefix

AXIOMATIC = "axiomatic"
FOCK = "fock"


@dataclass(frozen=True)
class Backend:
    """Evaluation semantics tag; ``depth`` is the fock basis truncation."""

    kind: str
    depth: int = 0

    def __post_init__(self):
        if self.kind not in (AXIOMATIC, FOCK):
            raise DomainError(f"unknown backend kind: {self.kind!r}")
        if self.depth < 0:
            raise DomainError("depth must be nonnegative")
        if self.kind == AXIOMATIC and self.depth:
            raise DomainError("depth applies to the fock backend only")

    @classmethod
    def axiomatic(cls) -> "Backend":
        return cls(AXIOMATIC)

    @classmethod
    def fock(cls, depth: int) -> "Backend":
        return cls(FOCK, depth)

    @property
    def is_fock(self) -> bool:
        return self.kind == FOCK

    def __str__(self) -> str:
        if self.is_fock:
            return f"fock(depth={self.depth})"
        return self.kind

    def to_json(self) -> dict:
        if self.is_fock:
            return {"kind": self.kind, "depth": self.depth}
        return {"kind": self.kind}

    @staticmethod
    def from_json(data: dict) -> "Backend":
        return Backend(data["kind"], data.get("depth", 0))


@dataclass(frozen=True)
class GeneratorSymbol:
    """One letter L[w] or L*[w]; vertex generators are self-adjoint."""

    word: PathWord
    starred: bool = False

    def __post_init__(self):
        if self.word.is_vertex and self.starred:
            object.__setattr__(self, "starred", False)

    def adjoint(self) -> "GeneratorSymbol":
        return GeneratorSymbol(self.word, not self.starred)

    def __str__(self) -> str:
        return f"L*[{self.word}]" if self.starred else f"L[{self.word}]"


@dataclass(frozen=True)
class Monomial:
    """Normal form L[p]L*[q]; p and q must end at the same vertex.

    As a partial map on basis words it strips the prefix q and glues the
    prefix p.  Creation operators are the case q a vertex word,
    annihilation operators the case p a vertex word, and vertex
    projections the case p = q a vertex word.
    """

    creation: PathWord
    annihilation: PathWord

    def __post_init__(self):
        if self.creation.graph != self.annihilation.graph:
            raise DomainError("mixed-graph monomial")
        if self.creation.final != self.annihilation.final:
            raise DomainError(
                "monomial sides must share their final vertex: "
                f"{self.creation} ends at {self.creation.final}, "
                f"{self.annihilation} at {self.annihilation.final}"
            )
        object.__setattr__(self, "_hash", hash((self.creation, self.annihilation)))

    def __hash__(self):
        return self._hash

    @classmethod
    def vertex(cls, graph: Graph, v: str) -> "Monomial":
        w = PathWord.vertex(graph, v)
        return cls(w, w)

    @classmethod
    def from_symbol(cls, symbol: GeneratorSymbol) -> "Monomial":
        w = symbol.word
        unit = PathWord.vertex(w.graph, w.final)
        if symbol.starred:
            return cls(unit, w)
        return cls(w, unit)

    @property
    def graph(self) -> Graph:
        return self.creation.graph

    @property
    def is_vertex(self) -> bool:
        return self.creation.is_vertex and self.annihilation.is_vertex

    @property
    def degree(self) -> int:
        return self.creation.length + self.annihilation.length

    def adjoint(self) -> "Monomial":
        return Monomial(self.annihilation, self.creation)

    def sort_key(self):
        return (self.creation.key(), self.annihilation.key())

    def serialize(self) -> str:
        return f"L[{self.creation}]L*[{self.annihilation}]"

    def display(self) -> str:
        if self.annihilation.is_vertex:
            return f"L[{self.creation}]"
        if self.creation.is_vertex:
            return f"L*[{self.annihilation}]"
        return f"L[{self.creation}]L*[{self.annihilation}]"

    def __str__(self) -> str:
        return self.display()


def compose(m1: Monomial, m2: Monomial) -> Monomial | None:
    """Product of two normal forms as partial maps; None is zero.

    Valid in both semantics: on basis vectors the composite strips q2,
    glues p2, strips q1, glues p1, and the middle strip-glue pair
    collapses into one prefix comparison between q1 and p2.
    """
    rest = strip_prefix(m1.annihilation, m2.creation)
    if rest is not None:
        return Monomial(concat(m1.creation, rest), m2.annihilation)
    over = strip_prefix(m2.creation, m1.annihilation)
    if over is not None and not over.is_vertex:
        return Monomial(m1.creation, concat(m2.annihilation, over))
    return None


def cancel_final_segment(m: Monomial) -> Monomial:
    """Axiomatic canonical form: drop shared final edges of both sides."""
    p, q = m.creation, m.annihilation
    while p.edges and q.edges and p.edges[-1] == q.edges[-1]:
        p = p.drop_last_edge()
        q = q.drop_last_edge()
    if p is m.creation:
        return m
    return Monomial(p, q)


def required_depth(symbols: Sequence[GeneratorSymbol]) -> int:
    """Minimal fock depth for exact evaluation on all vertex vectors."""
    return sum(s.word.length for s in symbols)


def reduce_word(backend: Backend, symbols: Sequence[GeneratorSymbol]) -> Monomial | None:
    """Normal form of a generator word, or None for the zero operator.

    Axiomatic: confluent rewriting under the unit, source, range, and
    partial-isometry laws; the result carries no common final segment.
    Fock: the word's action on basis vectors as a partial injection,
    reported as the unique monomial inducing it; the configured depth
    must cover the word's total edge length, otherwise DepthError.
    """
    symbols = list(symbols)
    if not symbols:
        raise DomainError("empty generator word has no single normal form")
    g = symbols[0].word.graph
    for s in symbols[1:]:
        if s.word.graph != g:
            raise DomainError("mixed-graph generator word")
    if backend.is_fock:
        need = required_depth(symbols)
        if need > backend.depth:
            raise DepthError(need, backend.depth)
    acc = Monomial.from_symbol(symbols[0])
    if backend.kind == AXIOMATIC:
        acc = cancel_final_segment(acc)
    for s in symbols[1:]:
        nxt = compose(acc, Monomial.from_symbol(s))
        if nxt is None:
            return None
        acc = cancel_final_segment(nxt) if backend.kind == AXIOMATIC else nxt
    return acc


def fock_apply(backend: Backend, symbol: GeneratorSymbol, basis: PathWord) -> PathWord | None:
    """Action of one generator on one basis word; None is the zero vector.

    Unstarred generators glue their word in front when admissible and the
    image still fits the depth; starred generators strip their word as a
    prefix.  A basis vector beyond the depth is an error, not a zero.
    """
    if not backend.is_fock:
        raise DomainError("basis action requires the fock backend")
    if basis.length > backend.depth:
        raise DepthError(basis.length, backend.depth)
    if symbol.starred:
        return strip_prefix(symbol.word, basis)
    image = concat(symbol.word, basis)
    if image is None or image.length > backend.depth:
        return None
    return image


def apply_generator_word(
    backend: Backend, symbols: Iterable[GeneratorSymbol], basis: PathWord
) -> PathWord | None:
    """Apply a product of generators to a basis vector, rightmost first."""
    vec = basis
    for s in reversed(list(symbols)):
        vec = fock_apply(backend, s, vec)
        if vec is None:
            return None
    return vec
