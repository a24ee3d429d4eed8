import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete_bi, cycle, path
from dichroma.digraph import (
    Coloring,
    Digraph,
    LabeledDigraph,
    build_digraph,
    is_acyclic,
    is_symmetric,
    is_valid_acyclic_coloring,
    reach_pairs,
    scc_decompose,
    symmetric_part,
    underlying_undirected,
)
from dichroma.exceptions import DuplicateArcError, PartialColoringError, SelfLoopError, VertexOutOfRangeError
from dichroma.oracle import brute_force_dcn, enumerate_simple_cycles


@st.composite
def digraphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v]
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Digraph(n, frozenset(arcs))


def test_build_triangle(c3):
    assert c3.n == 3
    assert c3.arcs == {(1, 2), (2, 3), (3, 1)}


def test_build_single_vertex():
    g = build_digraph(1, [])
    assert g.n == 1 and g.m == 0


@pytest.mark.parametrize(
    "n, arcs, err",
    [
        (2, [(1, 1)], SelfLoopError),
        (2, [(1, 2), (1, 2)], DuplicateArcError),
        (2, [(1, 3)], VertexOutOfRangeError),
        (2, [(0, 1)], VertexOutOfRangeError),
    ],
)
def test_build_rejects(n, arcs, err):
    with pytest.raises(err):
        build_digraph(n, arcs)


def test_acyclic_witnesses(c3, p3):
    res = is_acyclic(c3)
    assert not res
    assert sorted(res.witness) == [1, 2, 3]
    res = is_acyclic(p3)
    assert res and res.witness == [1, 2, 3]
    assert is_acyclic(build_digraph(4, []))


@given(digraphs(max_n=9))
def test_acyclic_witness_checks_out(g):
    res = is_acyclic(g)
    if res:
        pos = {v: i for i, v in enumerate(res.witness)}
        assert sorted(res.witness) == list(g.vertices)
        assert all(pos[u] < pos[v] for u, v in g.arcs)
    else:
        cyc = res.witness
        assert len(set(cyc)) == len(cyc) >= 2
        assert all(g.has_arc(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))


def test_scc_examples(c3, p3):
    assert scc_decompose(c3) == [[1, 2, 3]]
    assert sorted(scc_decompose(p3)) == [[1], [2], [3]]
    two = build_digraph(4, [(1, 2), (2, 1), (3, 4), (4, 3)])
    assert sorted(scc_decompose(two)) == [[1, 2], [3, 4]]


def test_scc_reverse_topological():
    # 1 -> {2,3 cycle} -> 4
    g = build_digraph(4, [(1, 2), (2, 3), (3, 2), (3, 4)])
    assert scc_decompose(g) == [[4], [2, 3], [1]]


@given(digraphs(max_n=9))
def test_scc_matches_mutual_reachability(g):
    def reach(u):
        seen, todo = {u}, [u]
        while todo:
            for y in g.out[todo.pop()]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen

    r = {v: reach(v) for v in g.vertices}
    comps = scc_decompose(g)
    index = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in itertools.product(g.vertices, repeat=2):
        assert (index[u] == index[v]) == (v in r[u] and u in r[v])
    # reverse topological: arcs between components go from later to earlier entries
    for u, v in g.arcs:
        assert index[u] >= index[v]


def test_symmetric_part_examples(c3):
    g = build_digraph(3, [(1, 2), (2, 1), (2, 3)])
    assert symmetric_part(g).arcs == {(1, 2), (2, 1)}
    assert underlying_undirected(g)[1] == {frozenset((1, 2)), frozenset((2, 3))}
    assert symmetric_part(c3).arcs == frozenset()
    k2 = complete_bi(2)
    assert symmetric_part(k2) == k2


@given(digraphs())
def test_symmetric_part_idempotent(g):
    s = symmetric_part(g)
    assert is_symmetric(s)
    assert symmetric_part(s) == s


def test_reach_single_vertex():
    lg = LabeledDigraph(build_digraph(1, []), 3, (2,))
    assert reach_pairs(lg, [1]) == {(2, 2)}
    assert reach_pairs(lg, []) == frozenset()


def test_reach_consistent_with_worked_partition():
    # V1 = {v1, v6, v7} and V3 = {v3, v4, v5} are paths over labels 1 -> 2 -> 4, V2 = {v2} has label 3
    labels = (1, 3, 1, 2, 4, 2, 4)
    g = build_digraph(7, [(1, 6), (6, 7), (3, 4), (4, 5), (2, 1), (5, 2), (7, 3)])
    lg = LabeledDigraph(g, 4, labels)
    expected = {(1, 1), (2, 2), (4, 4), (1, 2), (2, 4), (1, 4)}
    assert reach_pairs(lg, [1, 6, 7]) == expected
    assert reach_pairs(lg, [3, 4, 5]) == expected
    assert reach_pairs(lg, [2]) == {(3, 3)}


@given(digraphs(max_n=7), st.data())
def test_reach_monotone(g, data):
    labels = tuple(data.draw(st.integers(1, 3)) for _ in g.vertices)
    lg = LabeledDigraph(g, 3, labels)
    big = data.draw(st.sets(st.sampled_from(list(g.vertices))))
    small = data.draw(st.sets(st.sampled_from(sorted(big)))) if big else set()
    assert reach_pairs(lg, small) <= reach_pairs(lg, big)
    assert {(lg.label(v), lg.label(v)) for v in big} <= reach_pairs(lg, big)


def test_coloring_examples(c3, p3):
    assert is_valid_acyclic_coloring(c3, Coloring((1, 1, 2)))
    res = is_valid_acyclic_coloring(c3, Coloring((1, 1, 1)))
    assert not res and res.color == 1 and sorted(res.cycle) == [1, 2, 3]
    assert is_valid_acyclic_coloring(p3, Coloring((1, 1, 1)))
    with pytest.raises(PartialColoringError):
        is_valid_acyclic_coloring(c3, Coloring((1, 2)))


@settings(max_examples=150)
@given(digraphs(max_n=7), st.data())
def test_coloring_valid_iff_no_monochromatic_cycle(g, data):
    colors = tuple(data.draw(st.integers(1, 3)) for _ in g.vertices)
    c = Coloring(colors)
    expected = all(len({c[v] for v in cyc}) > 1 for cyc in enumerate_simple_cycles(g))
    assert bool(is_valid_acyclic_coloring(g, c)) == expected


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=7), st.data())
def test_induced_subdigraph_monotone(g, data):
    keep = data.draw(st.sets(st.sampled_from(list(g.vertices)), min_size=1))
    sub, _ = g.induced(keep)
    assert brute_force_dcn(sub)[0] <= brute_force_dcn(g)[0]


def test_coloring_classes_and_compact():
    c = Coloring((2, 1, 2))
    assert c.classes() == {1: [2], 2: [1, 3]}
    assert c.r == 2 and c.is_compact()
    assert not Coloring((1, 3)).is_compact()


def test_paths_and_cycles_helpers():
    assert is_acyclic(path(5))
    assert not is_acyclic(cycle(5))
