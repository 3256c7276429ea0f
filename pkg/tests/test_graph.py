import pytest
from hypothesis import given, strategies as st

from avgindep.graph import (
    CapacityError,
    Graph,
    GraphError,
    complete,
    disjoint_union,
    empty,
    figure1_tree,
    format_edge_list,
    from_spec,
    load_edge_list,
    make,
    parse_edge_list,
    path,
    star,
)
from avgindep.trees import enumerate_trees


def test_generators():
    s = star(4)
    assert s.order() == 4 and s.edges() == [(0, 1), (0, 2), (0, 3)]
    assert path(1).order() == 1 and path(1).edges() == []
    assert complete(3).edges() == [(0, 1), (0, 2), (1, 2)]
    assert empty(5).size() == 0
    assert make("path", 3) == path(3)
    with pytest.raises(CapacityError):
        path(65)
    with pytest.raises(GraphError):
        make("cycle", 3)


def test_surgery():
    assert star(4).remove_vertex(3).compact() == star(3)
    assert star(4).remove_vertex(0).compact() == empty(3)
    assert path(3).remove_closed_nbhd(1).order() == 0
    g = path(3).remove_edge(0, 1)
    assert g.edges() == [(1, 2)] and g.order() == 3
    with pytest.raises(GraphError):
        path(3).remove_vertex(5)
    with pytest.raises(GraphError):
        path(3).remove_vertex(1).remove_vertex(1)
    with pytest.raises(GraphError):
        path(3).remove_edge(0, 2)


def test_components():
    assert [c.order() for c in empty(3).components()] == [1, 1, 1]
    assert len(path(4).components()) == 1
    assert [c.vertices() for c in path(3).remove_vertex(1).components()] == [[0], [2]]
    assert Graph.from_edges(0, []).components() == []


def test_tree_and_independence():
    assert path(5).is_tree()
    assert not complete(3).is_tree()
    assert not empty(2).is_tree()
    assert not complete(3).is_independent(0b011)
    assert complete(3).is_independent(0)
    with pytest.raises(GraphError):
        path(2).is_independent(0b100)


def test_tree_vertex_removal_components():
    for t in enumerate_trees(8):
        for v in t.vertices():
            rest = t.remove_vertex(v)
            comps = rest.components()
            assert sum(c.order() for c in comps) == 7
            if t.degree(v) == 1:
                assert rest.is_tree()
            else:
                assert len(comps) == t.degree(v)


def test_edge_list_format(tmp_path):
    text = "# comment\nn 6\n\n0 1\n1 2\n2 3\n1 4\n1 5\n"
    assert parse_edge_list(text) == figure1_tree()
    assert parse_edge_list("0 1\n1 2\n") == path(3)
    assert parse_edge_list("n 4\n0 1\n").order() == 4
    assert parse_edge_list(format_edge_list(figure1_tree())) == figure1_tree()
    f = tmp_path / "g.edges"
    f.write_text(text)
    assert load_edge_list(f) == figure1_tree()
    assert from_spec(f"file:{f}") == figure1_tree()
    for bad in ["0 1 2\n", "a b\n", "0 0\n", "n 2\n0 5\n", "-1 0\n"]:
        with pytest.raises(GraphError):
            parse_edge_list(bad)


def test_bundled_figure1_file():
    from pathlib import Path

    f = Path(__file__).parent.parent / "data" / "figure1_tree.edges"
    assert load_edge_list(f) == figure1_tree()


@pytest.mark.parametrize("spec", ["path", "path:", "path:-1", "star:x", "wheel:4", "file:/nonexistent"])
def test_bad_specs(spec):
    with pytest.raises(GraphError):
        from_spec(spec)


def test_disjoint_union():
    u = disjoint_union([path(2), star(3)])
    assert u.order() == 5 and u.size() == 3
    with pytest.raises(CapacityError):
        disjoint_union([empty(40), empty(30)])


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_graph_invariants(g):
    for v in g.vertices():
        assert not g.adj[v] >> v & 1
        assert g.adj[v] & ~g.present == 0
        for w in g.vertices():
            assert bool(g.adj[v] >> w & 1) == bool(g.adj[w] >> v & 1)


@given(graphs(), st.data())
def test_remove_vertex_keeps_count(g, data):
    if g.order() == 0:
        return
    v = data.draw(st.sampled_from(g.vertices()))
    rest = g.remove_vertex(v)
    assert sum(c.order() for c in rest.components()) == g.order() - 1
