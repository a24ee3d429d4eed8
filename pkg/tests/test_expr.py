import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dichroma.digraph import is_symmetric
from dichroma.exceptions import (
    DUnionArcDirectionError,
    DuplicateVertexNameError,
    EqualLabelsError,
    ExprSyntaxError,
    LabelOutOfRangeError,
)
from dichroma.expr import (
    Create,
    CwExpr,
    CwUnion,
    EdgeInsert,
    Relabel,
    dico_to_cw,
    eval_cw,
    eval_dico,
    format_cw,
    format_dico,
    parse_cw,
    parse_dico,
    postorder,
)
from dichroma.generators import gen_random_cw_expr, gen_random_dico_expr
from dichroma.oracle import enumerate_simple_cycles

seeds = st.integers(0, 10**6)


class TestParseCw:
    def test_single_vertex(self):
        e = parse_cw("v(x,1)")
        assert e.root == Create("x", 1) and e.k == 1

    def test_add_creates_label_arcs(self):
        lg = eval_cw(parse_cw("add(1,2,union(v(x,1),v(y,2)))"))
        assert lg.graph.arcs == {(1, 2)}
        assert lg.names == ("x", "y")

    def test_equal_labels(self):
        with pytest.raises(EqualLabelsError):
            parse_cw("add(1,1,v(x,1))")
        with pytest.raises(EqualLabelsError):
            parse_cw("rel(2,2,v(x,1))")

    def test_duplicate_name(self):
        with pytest.raises(DuplicateVertexNameError):
            parse_cw("union(v(x,1),v(x,2))")

    def test_header_overrides_k(self):
        e = parse_cw("# comment\nk=3\nunion(v(x,1),v(y,2))")
        assert e.k == 3
        assert format_cw(e) == "k=3\nunion(v(x,1),v(y,2))"
        with pytest.raises(LabelOutOfRangeError):
            parse_cw("k=1\nv(x,2)")

    @pytest.mark.parametrize(
        "text",
        ["", "v(x)", "union(v(x,1))", "v(x,1", "v(x,1))", "foo(v(x,1))", "add(a,2,v(x,1))", "v(x,1) v(y,1)", "v(x,1)$"],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(ExprSyntaxError):
            parse_cw(text)

    def test_error_position(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse_cw("union(v(x,1) v(y,2))")
        assert info.value.position == 13


class TestEvalCw:
    def test_worked_example(self, worked_x):
        lg = eval_cw(worked_x)
        assert lg.names == ("v1", "v2", "v3")
        # the final add(1,2) also reaches v2, which carries label 1 by then
        assert lg.graph.arcs == {(1, 2), (2, 1), (1, 3), (2, 3)}
        assert lg.labels == (1, 1, 2)

    def test_single_create(self):
        lg = eval_cw(Create("x", 1))
        assert lg.graph.n == 1 and lg.labels == (1,)

    def test_repeated_insert_idempotent(self):
        base = CwUnion(Create("x", 1), Create("y", 2))
        once = eval_cw(EdgeInsert(1, 2, base))
        twice = eval_cw(EdgeInsert(1, 2, EdgeInsert(1, 2, base)))
        assert once.graph == twice.graph

    def test_relabel_to_unused_label(self):
        lg = eval_cw(CwExpr(Relabel(1, 3, Create("x", 1)), 3))
        assert lg.labels == (3,)

    @settings(max_examples=50)
    @given(seeds, st.integers(1, 4), st.integers(1, 9))
    def test_vertex_count_and_arc_growth(self, seed, k, n):
        e = gen_random_cw_expr(k, n, seed)
        lg = eval_cw(e)
        assert lg.graph.n == n
        for node in postorder(e.root):
            for child in node.children:
                assert eval_cw(CwExpr(child, k)).graph.m <= eval_cw(CwExpr(node, k)).graph.m

    @settings(max_examples=50)
    @given(seeds, st.integers(1, 4), st.integers(1, 9))
    def test_round_trip(self, seed, k, n):
        e = gen_random_cw_expr(k, n, seed)
        assert parse_cw(format_cw(e)) == e


class TestDiCo:
    def test_series(self):
        assert eval_dico(parse_dico("series(v(a),v(b))")).arcs == {(1, 2), (2, 1)}

    def test_order(self):
        assert eval_dico(parse_dico("order(v(a),v(b))")).arcs == {(1, 2)}

    def test_dunion_empty(self):
        assert eval_dico(parse_dico("dunion(v(a),v(b),[])")).arcs == frozenset()

    def test_dunion_arcs(self):
        g = eval_dico(parse_dico("dunion(union(v(a),v(b)), v(c), [a>c, b>c])"))
        assert g.arcs == {(1, 3), (2, 3)}

    def test_dunion_wrong_direction(self):
        with pytest.raises(DUnionArcDirectionError):
            parse_dico("dunion(v(a),v(b),[b>a])")
        with pytest.raises(DUnionArcDirectionError):
            parse_dico("dunion(v(a),v(b),[a>z])")

    def test_duplicate_name(self):
        with pytest.raises(DuplicateVertexNameError):
            parse_dico("series(v(a),v(a))")

    @pytest.mark.parametrize("text", ["v(a,1)", "dunion(v(a),v(b))", "dunion(v(a),v(b),[a-b])", "series(v(a),[a>b])"])
    def test_syntax_errors(self, text):
        with pytest.raises(ExprSyntaxError):
            parse_dico(text)

    @settings(max_examples=60)
    @given(seeds, st.integers(1, 12))
    def test_round_trip(self, seed, n):
        e = gen_random_dico_expr(n, seed)
        assert parse_dico(format_dico(e)) == e

    @settings(max_examples=60, deadline=None)
    @given(seeds, st.integers(1, 10))
    def test_no_induced_long_directed_cycle(self, seed, n):
        g = eval_dico(gen_random_dico_expr(n, seed, ops=("union", "series", "order")))
        for cyc in enumerate_simple_cycles(g):
            if len(cyc) < 3:
                continue
            members = set(cyc)
            induced = {(u, v) for u, v in g.arcs if u in members and v in members}
            assert len(induced) > len(cyc), f"induced directed cycle {cyc}"

    @settings(max_examples=60)
    @given(seeds, st.integers(1, 12))
    def test_two_expression_translation(self, seed, n):
        e = gen_random_dico_expr(n, seed, ops=("union", "series", "order"))
        cwe = dico_to_cw(e)
        assert cwe.k == 2
        lg = eval_cw(cwe)
        assert lg.graph == eval_dico(e)
        assert set(lg.labels) == {1}

    def test_translation_rejects_dunion(self):
        with pytest.raises(ValueError):
            dico_to_cw(parse_dico("dunion(v(a),v(b),[])"))

    def test_series_of_singletons_is_symmetric(self):
        assert is_symmetric(eval_dico(parse_dico("series(v(a),series(v(b),v(c)))")))


def test_deep_expression_does_not_recurse():
    text = "v(x0)"
    for i in range(1, 3000):
        text = f"union({text},v(x{i}))"
    g = eval_dico(parse_dico(text))
    assert g.n == 3000
    assert format_dico(parse_dico(text)) == text
