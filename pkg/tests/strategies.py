"""Hypothesis strategies for graphs, words, and small algebra elements."""

from fractions import Fraction

from hypothesis import strategies as st

from graphprob import AlgebraElement, Backend, Edge, Graph, PathWord
from graphprob.operators import GeneratorSymbol


@st.composite
def graphs(draw, max_vertices: int = 4, max_edges: int = 5, min_edges: int = 0):
    nv = draw(st.integers(1, max_vertices))
    vertices = tuple(f"v{i}" for i in range(1, nv + 1))
    ne = draw(st.integers(min_edges, max_edges))
    edges = []
    for i in range(ne):
        a = draw(st.sampled_from(vertices))
        b = draw(st.sampled_from(vertices))
        edges.append(Edge(f"e{i + 1}", a, b))
    return Graph(vertices, tuple(edges))


@st.composite
def words(draw, graph: Graph, max_len: int = 3, allow_vertex: bool = True):
    """An admissible word grown edge by edge; may stop early at a dead end."""
    start = draw(st.sampled_from(graph.vertices))
    target = draw(st.integers(0 if allow_vertex else 1, max_len))
    edges = []
    at = start
    for _ in range(target):
        out = graph.edges_from(at)
        if not out:
            break
        e = draw(st.sampled_from(out))
        edges.append(e.id)
        at = e.final
    if not edges:
        if not allow_vertex:
            return None
        return PathWord.vertex(graph, start)
    return PathWord.from_edges(graph, edges)


@st.composite
def symbols(draw, graph: Graph, max_len: int = 2):
    w = draw(words(graph, max_len=max_len))
    starred = draw(st.booleans())
    return GeneratorSymbol(w, starred)


_coeffs = st.fractions(
    min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4
).filter(lambda q: q != 0)


@st.composite
def elements(draw, graph: Graph, backend: Backend, max_terms: int = 3, max_len: int = 2):
    nterms = draw(st.integers(1, max_terms))
    total = AlgebraElement.zero(graph, backend)
    for _ in range(nterms):
        w = draw(words(graph, max_len=max_len))
        starred = draw(st.booleans())
        c = draw(_coeffs)
        g = AlgebraElement.generator(graph, backend, w, starred=starred)
        total = total + g.scale(c)
    return total
