import pytest

from graphprob import (
    AlgebraElement,
    Backend,
    DiagonalElement,
    DomainError,
    build_semicircular_system,
    check_freeness,
    check_r_diagonal,
    check_semicircular,
    claims_audit,
    decompose,
    parse_word,
)

from .conftest import load_golden

AX = Backend.axiomatic()


# ---- semicircularity ----


def test_semicircular_one_loop_backends_disagree(one_loop):
    l = parse_word(one_loop, "l")
    a_fk = AlgebraElement.symmetrized_generator(one_loop, Backend.fock(6), l)
    rep_fk = check_semicircular(a_fk, 6)
    assert rep_fk.verdict
    assert str(rep_fk.k2) == "1*L[@v]"
    assert rep_fk.offenders == ()

    a_ax = AlgebraElement.symmetrized_generator(one_loop, AX, l)
    rep_ax = check_semicircular(a_ax, 6)
    assert not rep_ax.verdict
    assert str(rep_ax.k2) == "2*L[@v]"
    assert [n for n, _ in rep_ax.offenders] == [4, 6]
    assert str(rep_ax.offenders[0][1]) == "-2*L[@v]"


def test_semicircular_rejects_non_self_adjoint(one_loop):
    a = AlgebraElement.generator(one_loop, AX, parse_word(one_loop, "l"))
    with pytest.raises(DomainError):
        check_semicircular(a, 4)


def test_semicircular_report_serializes(one_loop):
    a = AlgebraElement.symmetrized_generator(one_loop, Backend.fock(4), parse_word(one_loop, "l"))
    rep = check_semicircular(a, 4)
    d = rep.to_json_dict()
    assert d["verdict"] is True
    assert d["k2"]["value"] == "1*L[@v]"
    assert "semicircular to order 4" in rep.to_text()


def test_build_semicircular_system(graphs):
    g = graphs["bouquet3"]
    loops = [parse_word(g, "l1"), parse_word(g, "l2")]
    system = build_semicircular_system(g, Backend.fock(4), loops)
    assert [str(a) for a in system] == ["1*L*[l1] + 1*L[l1]", "1*L*[l2] + 1*L[l2]"]

    with pytest.raises(DomainError, match="diagram-distinct"):
        build_semicircular_system(g, AX, [parse_word(g, "l1"), parse_word(g, "l1.l1")])

    lol = graphs["lollipop"]
    with pytest.raises(DomainError, match="not a loop"):
        build_semicircular_system(lol, AX, [parse_word(lol, "e")])


# ---- R-diagonality ----


def test_r_diagonal_single_edge(single_edge):
    e = parse_word(single_edge, "e")
    rep_fk = check_r_diagonal(single_edge, Backend.fock(6), e, 6)
    assert rep_fk.verdict
    assert [(f.order, f.pattern, str(f.value)) for f in rep_fk.nonzero] == [
        (2, ("a*", "a"), "1*L[@v2]")
    ]

    rep_ax = check_r_diagonal(single_edge, AX, e, 6)
    assert rep_ax.verdict
    got = {(f.order, f.pattern): str(f.value) for f in rep_ax.nonzero}
    assert got[(2, ("a", "a*"))] == "1*L[@v1]"
    assert got[(2, ("a*", "a"))] == "1*L[@v2]"
    assert got[(4, ("a", "a*", "a", "a*"))] == "-1*L[@v1]"
    assert len(got) == 6


def test_r_diagonal_rejects_vertex(single_edge):
    from graphprob import PathWord

    with pytest.raises(DomainError):
        check_r_diagonal(single_edge, AX, PathWord.vertex(single_edge, "v1"), 4)


def test_r_diagonal_longer_word(c3):
    w = parse_word(c3, "e1.e2")
    rep = check_r_diagonal(c3, Backend.fock(8), w, 4)
    assert rep.verdict
    assert [(f.order, f.pattern) for f in rep.nonzero] == [(2, ("a*", "a"))]


# ---- freeness ----


def test_freeness_parallel_edges(graphs):
    g = graphs["parallel_edges"]
    b = Backend.fock(4)
    x = AlgebraElement.generator(g, b, parse_word(g, "e1"))
    y = AlgebraElement.generator(g, b, parse_word(g, "e2"))
    rep = check_freeness([x], [y], 4)
    assert rep.free_to_order
    assert rep.prediction == "diagram-distinct"
    assert rep.agreement == "agree"
    assert rep.non_distinct_pairs == ()


def test_freeness_power_dependence(one_loop):
    b = Backend.fock(12)
    al = AlgebraElement.symmetrized_generator(one_loop, b, parse_word(one_loop, "l"))
    all_ = AlgebraElement.symmetrized_generator(one_loop, b, parse_word(one_loop, "l.l"))
    rep = check_freeness([al], [all_], 3)
    assert not rep.free_to_order
    assert rep.prediction == "not-diagram-distinct"
    assert rep.non_distinct_pairs == (("l", "l.l"),)
    assert rep.agreement == "agree"


def test_freeness_rejects_empty_family(one_loop):
    a = AlgebraElement.vertex_projection(one_loop, AX, "v")
    with pytest.raises(DomainError):
        check_freeness([a], [], 2)


# ---- decomposition ----


def test_decompose_c3(c3):
    rep = decompose(c3, 3)
    assert rep.block_count == 4
    assert rep.diagonal.label == "Δ_3"
    assert all(b.kind == "nonloop" and b.hint is None for b in rep.edge_blocks)
    words = [r.word for r in rep.basic_loops]
    assert words == ["e1.e2.e3", "e2.e3.e1", "e3.e1.e2"]
    assert rep.to_json_dict() == load_golden("decompose_c3.json")


def test_decompose_bouquet3(graphs):
    rep = decompose(graphs["bouquet3"], 2)
    assert rep.block_count == 4
    assert {b.hint for b in rep.edge_blocks} == {"L(F_3)"}
    assert rep.to_json_dict() == load_golden("decompose_bouquet3.json")


def test_decompose_loops_bridge(graphs):
    rep = decompose(graphs["loops_bridge"], 2)
    assert rep.block_count == 7
    hints = sorted(b.hint or "-" for b in rep.edge_blocks)
    assert hints == ["-", "L(F_2)", "L(F_2)", "L(F_3)", "L(F_3)", "L(F_3)"]
    assert any("≠ L(F_5)" in n for n in rep.notes)
    assert rep.to_json_dict() == load_golden("decompose_loops_bridge.json")


def test_decompose_lollipop_shapes(lollipop):
    rep = decompose(lollipop, 3)
    assert rep.block_count == 3
    loop_block = rep.edge_blocks[0]
    assert loop_block.kind == "loop" and loop_block.hint == "L(F_1)"
    edge_block = rep.edge_blocks[1]
    assert edge_block.kind == "nonloop" and edge_block.base == ("v1", "v2")
    assert [r.word for r in rep.basic_loops] == ["l"]


def test_decompose_rejects_bad_bound(c3):
    with pytest.raises(DomainError):
        decompose(c3, 0)


# ---- audit ----


def _audit(graph):
    return claims_audit(graph, [AX, Backend.fock(8)])


def test_audit_one_loop_rows(one_loop):
    rep = _audit(one_loop)
    by_id = {r.id: r for r in rep.rows}
    assert list(by_id) == ["R1", "R2", "R3", "R4", "R5", "R6"]
    assert by_id["R1"].verdict == "backend-dependent"
    assert by_id["R2"].verdict == "backend-dependent"
    assert by_id["R2"].computed == {"axiomatic": "2*L[@v]", "fock": "1*L[@v]"}
    assert by_id["R3"].verdict == "mismatch"
    assert by_id["R3"].computed == {"axiomatic": "6*L[@v]", "fock": "2*L[@v]"}
    assert by_id["R4"].verdict == "backend-dependent"
    assert by_id["R5"].verdict == "backend-dependent"
    assert by_id["R6"].verdict == "backend-dependent"
    assert rep.to_json_dict() == load_golden("audit_one_loop.json")


def test_audit_single_edge_rows(single_edge):
    rep = _audit(single_edge)
    assert [r.id for r in rep.rows] == ["R1", "R4"]
    by_id = {r.id: r for r in rep.rows}
    assert by_id["R1"].computed["axiomatic"] == "1*L[@v1]"
    assert by_id["R1"].computed["fock"] == "1*L[e]L*[e]"
    assert by_id["R4"].computed["fock"].startswith("counterexample")
    assert rep.to_json_dict() == load_golden("audit_single_edge.json")


def test_audit_single_backend(one_loop):
    rep = claims_audit(one_loop, [AX])
    assert rep.backends == ("axiomatic",)
    by_id = {r.id: r for r in rep.rows}
    assert by_id["R2"].verdict == "match"
    assert by_id["R3"].verdict == "mismatch"
    assert by_id["R5"].verdict == "mismatch"
    assert by_id["R6"].verdict == "match"


def test_audit_rejects_duplicate_kinds(one_loop):
    with pytest.raises(DomainError):
        claims_audit(one_loop, [Backend.fock(4), Backend.fock(6)])


def test_audit_text_renders(one_loop):
    text = _audit(one_loop).to_text()
    assert "R3" in text and "backend-dependent" in text
