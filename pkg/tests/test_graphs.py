import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphprob import (
    DomainError,
    Graph,
    GraphSyntaxError,
    PathWord,
    concat,
    diagram_distinct,
    enumerate_paths,
    parse_graph,
    parse_word,
    primitive_root,
)
from graphprob.graphs import classify_edges, strip_prefix

from .strategies import graphs, words


# ---- parsing ----


def test_parse_fixture_shapes(graphs):
    assert graphs["c3"].summary() == "3 vertices, 3 edges"
    assert graphs["one_loop"].edges[0].is_loop
    assert not graphs["single_edge"].edges[0].is_loop
    assert graphs["loops_bridge"].summary() == "2 vertices, 6 edges"


def test_parse_comments_and_blanks():
    g = parse_graph("# c\n\nvertices: a b\n# mid\nedge e: a -> b\n")
    assert g.vertices == ("a", "b")
    assert g.edges[0].id == "e"


def test_parse_errors_carry_position():
    with pytest.raises(GraphSyntaxError) as exc:
        parse_graph("vertices: a\nedge e a -> a\n")
    assert exc.value.line == 2

    with pytest.raises(DomainError, match="line 3"):
        parse_graph("vertices: a\nedge e: a -> a\nedge e: a -> a\n")

    with pytest.raises(DomainError, match="line 2"):
        parse_graph("vertices: a\nedge e: a -> zz\n")

    with pytest.raises(GraphSyntaxError):
        parse_graph("edge e: a -> a\n")


def test_duplicate_vertex_rejected():
    with pytest.raises(DomainError):
        Graph(("a", "a"), ())


def test_bad_identifier_rejected():
    with pytest.raises(DomainError):
        parse_graph("vertices: 9a\n")


# ---- words ----


def test_vertex_and_path_words(c3):
    v = PathWord.vertex(c3, "v1")
    assert v.is_vertex and v.length == 0 and str(v) == "@v1"
    w = parse_word(c3, "e1.e2")
    assert (w.initial, w.final, w.length) == ("v1", "v3", 2)
    assert str(w) == "e1.e2"
    assert parse_word(c3, str(w)) == w


def test_inadmissible_word_rejected(c3):
    with pytest.raises(DomainError):
        parse_word(c3, "e1.e3")
    with pytest.raises(DomainError):
        parse_word(c3, "@zz")
    with pytest.raises(DomainError):
        parse_word(c3, "e9")


def test_concat_unit_law(c3):
    # a vertex word concatenates as a unit on either side
    e1 = parse_word(c3, "e1")
    assert concat(PathWord.vertex(c3, "v1"), e1) == e1
    assert concat(e1, PathWord.vertex(c3, "v2")) == e1
    assert concat(PathWord.vertex(c3, "v2"), e1) is None


def test_concat_admissibility(c3):
    e1, e2 = parse_word(c3, "e1"), parse_word(c3, "e2")
    assert concat(e1, e2) == parse_word(c3, "e1.e2")
    assert concat(e2, e1) is None


def test_concat_rejects_mixed_graphs(c3, one_loop):
    with pytest.raises(DomainError):
        concat(parse_word(c3, "e1"), parse_word(one_loop, "l"))


def test_strip_prefix(c3):
    w = parse_word(c3, "e1.e2")
    e1 = parse_word(c3, "e1")
    assert strip_prefix(e1, w) == parse_word(c3, "e2")
    assert strip_prefix(w, w) == PathWord.vertex(c3, "v3")
    assert strip_prefix(parse_word(c3, "e2"), w) is None
    assert strip_prefix(PathWord.vertex(c3, "v1"), w) == w
    assert strip_prefix(PathWord.vertex(c3, "v2"), w) is None


def test_drop_last_edge(c3):
    w = parse_word(c3, "e1.e2")
    assert w.drop_last_edge() == parse_word(c3, "e1")
    assert parse_word(c3, "e1").drop_last_edge() == PathWord.vertex(c3, "v1")
    with pytest.raises(DomainError):
        PathWord.vertex(c3, "v1").drop_last_edge()


# ---- enumeration ----


def test_enumerate_paths_counts(graphs):
    assert len(enumerate_paths(graphs["c3"], 3)) == 3 + 3 + 3 + 3
    assert len(enumerate_paths(graphs["one_loop"], 5)) == 1 + 5
    assert len(enumerate_paths(graphs["bouquet3"], 2)) == 1 + 3 + 9
    assert len(enumerate_paths(graphs["single_edge"], 4)) == 2 + 1


def test_enumerate_paths_order_is_stable(c3):
    out = enumerate_paths(c3, 2)
    assert [str(w) for w in out[:3]] == ["@v1", "@v2", "@v3"]
    assert out == enumerate_paths(c3, 2)
    assert all(out[i].length <= out[i + 1].length for i in range(len(out) - 1))


def test_enumerate_paths_rejects_negative(c3):
    with pytest.raises(DomainError):
        enumerate_paths(c3, -1)


# ---- loop structure ----


def test_primitive_root(one_loop, c3):
    l = parse_word(one_loop, "l")
    ll = parse_word(one_loop, "l.l")
    assert primitive_root(l) == (l, 1)
    assert primitive_root(ll) == (l, 2)
    cyc = parse_word(c3, "e1.e2.e3")
    assert primitive_root(cyc) == (cyc, 1)


def test_diagram_distinct(graphs):
    one_loop = graphs["one_loop"]
    l = parse_word(one_loop, "l")
    assert not diagram_distinct(l, l)
    assert not diagram_distinct(l, parse_word(one_loop, "l.l"))

    par = graphs["parallel_edges"]
    assert diagram_distinct(parse_word(par, "e1"), parse_word(par, "e2"))

    bouquet = graphs["bouquet3"]
    ab = parse_word(bouquet, "l1.l2")
    ba = parse_word(bouquet, "l2.l1")
    # rotations of a loop are different words, hence distinct
    assert diagram_distinct(ab, ba)
    assert not diagram_distinct(ab, parse_word(bouquet, "l1.l2.l1.l2"))


def test_diagram_distinct_rejects_vertices(one_loop):
    with pytest.raises(DomainError):
        diagram_distinct(PathWord.vertex(one_loop, "v"), parse_word(one_loop, "l"))


def test_classify_edges(graphs):
    classes = classify_edges(graphs["lollipop"])
    assert classes.eloop == ("l",)
    assert classes.eloop_c == ("e",)


# ---- properties ----


@given(data=st.data())
@settings(max_examples=60)
def test_word_str_round_trip(data):
    g = data.draw(graphs())
    w = data.draw(words(g))
    assert parse_word(g, str(w)) == w


@given(data=st.data())
@settings(max_examples=60)
def test_concat_associative_when_defined(data):
    g = data.draw(graphs(min_edges=1))
    w1 = data.draw(words(g))
    w2 = data.draw(words(g))
    w3 = data.draw(words(g))
    left = concat(w1, w2)
    right = concat(w2, w3)
    if left is not None and right is not None:
        assert concat(left, w3) == concat(w1, right)


@given(data=st.data(), k=st.integers(1, 4))
@settings(max_examples=60)
def test_primitive_root_of_powers(data, k):
    g = data.draw(graphs(min_edges=1))
    w = data.draw(words(g, max_len=2, allow_vertex=False))
    if w is None or not w.is_loop:
        return
    power = w
    for _ in range(k - 1):
        power = concat(power, w)
    root, mult = primitive_root(power)
    base_root, base_mult = primitive_root(w)
    assert root == base_root
    assert mult == base_mult * k
