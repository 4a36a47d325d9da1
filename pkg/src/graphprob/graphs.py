"""Directed multigraphs, admissible path words, and loop combinatorics.

A path word travels left to right: ``e1.e2`` starts at the initial vertex
of ``e1`` and ends at the final vertex of ``e2``.  Concatenation ``w1 w2``
is admissible exactly when ``w1`` ends where ``w2`` starts.  Vertex words
(length zero) act as units at their vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, GraphSyntaxError

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_EDGE_LINE = re.compile(
    r"edge\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*"
    r"([A-Za-z_][A-Za-z0-9_]*)\s*->\s*([A-Za-z_][A-Za-z0-9_]*)\Z"
)


@dataclass(frozen=True)
class Edge:
    id: str
    initial: str
    final: str

    @property
    def is_loop(self) -> bool:
        return self.initial == self.final


@dataclass(frozen=True)
class Graph:
    """Finite directed multigraph; parallel edges and loop edges allowed."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen: set[str] = set()
        for v in self.vertices:
            if not IDENT.match(v):
                raise DomainError(f"bad vertex identifier: {v!r}")
            if v in seen:
                raise DomainError(f"duplicate identifier: {v}")
            seen.add(v)
        for e in self.edges:
            if not IDENT.match(e.id):
                raise DomainError(f"bad edge identifier: {e.id!r}")
            if e.id in seen:
                raise DomainError(f"duplicate identifier: {e.id}")
            seen.add(e.id)
            for v in (e.initial, e.final):
                if v not in self.vertices:
                    raise DomainError(f"edge {e.id} references undeclared vertex {v}")
        object.__setattr__(self, "_edge_map", {e.id: e for e in self.edges})
        object.__setattr__(self, "_hash", hash((self.vertices, self.edges)))

    def __hash__(self):
        return self._hash

    def edge(self, edge_id: str) -> Edge:
        try:
            return self._edge_map[edge_id]
        except KeyError:
            raise DomainError(f"unknown edge: {edge_id}") from None

    def edges_from(self, vertex: str) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.initial == vertex)

    def summary(self) -> str:
        return f"{len(self.vertices)} vertices, {len(self.edges)} edges"


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Grammar: ``#`` starts a comment, one ``vertices:`` line lists vertex
    identifiers, and each ``edge <id>: <v1> -> <v2>`` line adds an edge.
    Identifiers match ``[A-Za-z_][A-Za-z0-9_]*`` and share one namespace.

    Raises:
        GraphSyntaxError: malformed line, with line and column.
        DomainError: duplicate identifier or undeclared vertex.
    """
    vertices: list[str] | None = None
    edges: list[Edge] = []
    seen: set[str] = set()
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise GraphSyntaxError("second vertices line", ln)
            vertices = []
            for name in line[len("vertices:"):].split():
                if not IDENT.match(name):
                    raise GraphSyntaxError(
                        f"bad identifier {name!r}", ln, raw.find(name) + 1
                    )
                if name in seen:
                    raise DomainError(f"line {ln}: duplicate identifier: {name}")
                seen.add(name)
                vertices.append(name)
        elif line.startswith("edge"):
            m = _EDGE_LINE.match(line)
            if not m:
                raise GraphSyntaxError("malformed edge line", ln)
            if vertices is None:
                raise GraphSyntaxError("edge line before the vertices line", ln)
            eid, v1, v2 = m.groups()
            if eid in seen:
                raise DomainError(f"line {ln}: duplicate identifier: {eid}")
            seen.add(eid)
            for v in (v1, v2):
                if vertices is None or v not in vertices:
                    raise DomainError(
                        f"line {ln}: edge {eid} references undeclared vertex {v}"
                    )
            edges.append(Edge(eid, v1, v2))
        else:
            raise GraphSyntaxError(f"unrecognized line: {line.split()[0]!r}", ln)
    if vertices is None:
        raise GraphSyntaxError("missing vertices line", 1)
    return Graph(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class PathWord:
    """An admissible path, or a vertex word when ``edges`` is empty."""

    graph: Graph
    edges: tuple[str, ...]
    initial: str
    final: str

    def __post_init__(self):
        g = self.graph
        if not self.edges:
            if self.initial != self.final or self.initial not in g.vertices:
                raise DomainError("vertex word must sit at one declared vertex")
        else:
            at = self.initial
            for eid in self.edges:
                e = g.edge(eid)
                if e.initial != at:
                    raise DomainError(
                        f"inadmissible step {eid}: starts at {e.initial}, not {at}"
                    )
                at = e.final
            if at != self.final:
                raise DomainError("final vertex does not match edge sequence")
        object.__setattr__(
            self, "_hash", hash((self.graph, self.edges, self.initial))
        )

    def __hash__(self):
        return self._hash

    @classmethod
    def vertex(cls, graph: Graph, v: str) -> "PathWord":
        return cls(graph, (), v, v)

    @classmethod
    def from_edges(cls, graph: Graph, edge_ids) -> "PathWord":
        ids = tuple(edge_ids)
        if not ids:
            raise DomainError("from_edges needs at least one edge; use vertex()")
        first = graph.edge(ids[0])
        last = graph.edge(ids[-1])
        return cls(graph, ids, first.initial, last.final)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_vertex(self) -> bool:
        return not self.edges

    @property
    def is_loop(self) -> bool:
        return self.initial == self.final

    def drop_last_edge(self) -> "PathWord":
        if self.is_vertex:
            raise DomainError("vertex word has no edges to drop")
        if len(self.edges) == 1:
            return PathWord.vertex(self.graph, self.initial)
        cut = self.graph.edge(self.edges[-1]).initial
        return PathWord(self.graph, self.edges[:-1], self.initial, cut)

    def key(self):
        """Canonical sort key: vertices first, then length, then edge ids."""
        return (len(self.edges), self.edges, self.initial)

    def __str__(self) -> str:
        if self.is_vertex:
            return f"@{self.initial}"
        return ".".join(self.edges)

    def __repr__(self) -> str:
        return f"PathWord({self!s})"


def parse_word(graph: Graph, text: str) -> PathWord:
    """Parse ``@v`` as a vertex word or ``e1.e2`` as an edge path."""
    text = text.strip()
    if not text:
        raise DomainError("empty word")
    if text.startswith("@"):
        v = text[1:]
        if v not in graph.vertices:
            raise DomainError(f"unknown vertex: {v}")
        return PathWord.vertex(graph, v)
    return PathWord.from_edges(graph, text.split("."))


def concat(w1: PathWord, w2: PathWord) -> PathWord | None:
    """Path product, or None when the endpoints do not meet."""
    if w1.graph != w2.graph:
        raise DomainError("mixed-graph concatenation")
    if w1.final != w2.initial:
        return None
    if w1.is_vertex:
        return w2
    if w2.is_vertex:
        return w1
    return PathWord(w1.graph, w1.edges + w2.edges, w1.initial, w2.final)


def strip_prefix(prefix: PathWord, word: PathWord) -> PathWord | None:
    """Return u with word = prefix u, or None when prefix does not fit.

    A vertex prefix at the right vertex strips to the word itself; a word
    equal to the prefix strips to the vertex word at the shared final
    vertex.
    """
    if prefix.graph != word.graph:
        raise DomainError("mixed-graph prefix")
    if prefix.initial != word.initial:
        return None
    k = len(prefix.edges)
    if word.edges[:k] != prefix.edges:
        return None
    if k == 0:
        return word
    rest = word.edges[k:]
    if not rest:
        return PathWord.vertex(word.graph, word.final)
    return PathWord(word.graph, rest, prefix.final, word.final)


def enumerate_paths(graph: Graph, max_len: int) -> list[PathWord]:
    """All words of length at most max_len: vertices first, then by length,
    then lexicographically by edge-id sequence."""
    if max_len < 0:
        raise DomainError("max_len must be nonnegative")
    out = [PathWord.vertex(graph, v) for v in sorted(graph.vertices)]
    level = out[:]
    for _ in range(max_len):
        nxt = []
        for p in level:
            for e in graph.edges_from(p.final):
                if p.is_vertex:
                    nxt.append(PathWord(graph, (e.id,), e.initial, e.final))
                else:
                    nxt.append(
                        PathWord(graph, p.edges + (e.id,), p.initial, e.final)
                    )
        nxt.sort(key=lambda w: w.edges)
        out.extend(nxt)
        level = nxt
        if not level:
            break
    return out


def primitive_root(word: PathWord) -> tuple[PathWord, int]:
    """Decompose a loop as root**power with the shortest loop root."""
    if word.is_vertex or not word.is_loop:
        raise DomainError("primitive root is defined for loops of positive length")
    n = len(word.edges)
    for d in range(1, n + 1):
        if n % d:
            continue
        if word.edges == word.edges[:d] * (n // d):
            return PathWord.from_edges(word.graph, word.edges[:d]), n // d
    raise AssertionError("unreachable: every word is its own period")


def diagram_distinct(w1: PathWord, w2: PathWord) -> bool:
    """Whether two paths have distinct diagrams.

    False exactly when the words are equal, or both are loops sharing one
    primitive root (a loop and its powers are never diagram-distinct).
    Rotated loops such as ``e.f`` and ``f.e`` count as distinct.
    """
    if w1.graph != w2.graph:
        raise DomainError("mixed-graph comparison")
    if w1.is_vertex or w2.is_vertex:
        raise DomainError("vertex words have no diagram")
    if w1 == w2:
        return False
    if w1.is_loop and w2.is_loop:
        return primitive_root(w1)[0] != primitive_root(w2)[0]
    return True


@dataclass(frozen=True)
class EdgeClasses:
    """Partition of the edge set into loop edges and the rest."""

    eloop: tuple[str, ...]
    eloop_c: tuple[str, ...]


def classify_edges(graph: Graph) -> EdgeClasses:
    return EdgeClasses(
        tuple(e.id for e in graph.edges if e.is_loop),
        tuple(e.id for e in graph.edges if not e.is_loop),
    )
