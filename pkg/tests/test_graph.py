import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lpl.graph import (
    CutCertificate,
    CutKind,
    GraphError,
    MultiGraph,
    RotationMap,
    boundary,
    components,
    contract,
    has_cut_vertex,
    has_triangle,
    induced_subgraph,
    is_connected,
    make_graph,
    min_edge_degree,
    validate_certificate,
)
from lpl.families import complete, cycle, hypercube, star
from lpl.io import dumps_edge_list, loads_edge_list, to_dot
from tests.strategies import graphs


def test_make_graph_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        make_graph(3, [(1, 1)])


def test_make_graph_rejects_out_of_range_endpoint():
    with pytest.raises(GraphError, match="outside"):
        make_graph(3, [(0, 3)])


def test_duplicates_collapse_unless_strict():
    assert make_graph(3, [(0, 1), (1, 0)]).m == 1
    with pytest.raises(GraphError, match="duplicate"):
        make_graph(3, [(0, 1), (1, 0)], strict=True)


def test_min_edge_degree_of_star_and_path():
    assert min_edge_degree(star(5)) == 3
    assert min_edge_degree(make_graph(4, [(0, 1), (1, 2), (2, 3)])) == 1


def test_min_edge_degree_of_edgeless_graph_raises():
    with pytest.raises(GraphError):
        min_edge_degree(make_graph(3, []))


@given(graphs())
def test_components_partition_vertices(g):
    comps = components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    for c in comps:
        assert not boundary(g, c)


@given(graphs(min_n=1, max_n=8))
def test_cut_vertex_matches_vertex_deletion(g):
    base = len(components(g))
    expected = False
    for v in range(g.n):
        sub, _ = induced_subgraph(g, [u for u in range(g.n) if u != v])
        if g.n > 1 and len(components(sub)) > base:
            expected = True
    assert has_cut_vertex(g) == expected


@given(graphs(max_n=8))
def test_triangle_detection_matches_enumeration(g):
    expected = any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(range(g.n), 3)
    )
    assert has_triangle(g) == expected


def test_rotation_map_detects_broken_involution():
    g = cycle(4)
    good = RotationMap(tuple(tuple((y, g.adj[y].index(x)) for y in g.adj[x]) for x in range(4)))
    assert good.is_valid_for(g)
    rows = [list(r) for r in good.table]
    rows[0][0] = (rows[0][0][0], 1 - rows[0][0][1])
    bad = RotationMap(tuple(tuple(r) for r in rows))
    assert any("rot(rot" in p for p in bad.problems(g))
    with pytest.raises(GraphError):
        g.with_rotation(bad)


@given(graphs(min_n=2, max_n=8), st.data())
def test_contract_preserves_crossing_edges(g, data):
    block = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    mg, where = contract(g, [block])
    assert all(where[v] == 0 for v in block)
    assert sum(mg.capacity.values()) == g.m - sum(1 for u, v in g.edges() if u in block and v in block)
    assert mg.n == g.n - len(block) + 1


def test_contract_rejects_overlapping_blocks():
    with pytest.raises(GraphError):
        contract(cycle(5), [{0, 1}, {1, 2}])


def test_multigraph_rejects_bad_capacity():
    with pytest.raises(GraphError):
        MultiGraph(3, {(0, 1): 0})
    with pytest.raises(GraphError):
        MultiGraph(3, {(1, 0): 1})


def test_certificate_reasons():
    q = hypercube(3)
    ok = CutCertificate.from_fragment(q, {0, 1}, CutKind.RESTRICTED)
    assert validate_certificate(q, ok)
    assert ok.claimed_value == 4
    assert validate_certificate(q, CutCertificate(frozenset({0, 1}), ok.cut_edges, 5)).reason == "value-mismatch"
    assert validate_certificate(q, CutCertificate.from_fragment(q, {0}, CutKind.RESTRICTED)).reason == "side-too-small"
    assert validate_certificate(q, CutCertificate.from_fragment(q, range(8), CutKind.EDGE)).reason == "trivial-fragment"
    wrong = CutCertificate(frozenset({0, 1}), frozenset({(0, 2)}), 1)
    assert validate_certificate(q, wrong).reason == "cut-edges-differ-from-boundary"
    assert validate_certificate(q, CutCertificate(frozenset({9}), frozenset(), 0)).reason == "fragment-out-of-range"


def test_certificate_flags_isolated_vertex():
    path = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    cert = CutCertificate.from_fragment(path, {0, 1, 3}, CutKind.RESTRICTED)
    assert validate_certificate(path, cert).reason == "isolated-vertex-2"


def test_certificate_must_disconnect():
    k4 = complete(4)
    # a fragment that is itself disconnected still disconnects; only an empty cut cannot
    g = make_graph(4, [(0, 1), (2, 3)])
    cert = CutCertificate.from_fragment(g, {0, 1}, CutKind.EDGE)
    assert validate_certificate(g, cert)
    assert validate_certificate(k4, CutCertificate.from_fragment(k4, {0, 1}, CutKind.EDGE))


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert loads_edge_list(dumps_edge_list(g)) == g


def test_edge_list_round_trip_keeps_ports():
    q = hypercube(3)
    back = loads_edge_list(dumps_edge_list(q))
    assert back.rotation == q.rotation


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n0 1 2\n", "3 2\n0 1\n", "2 1\n0 0\n", "x y\n", "3 2\n0 1 0 0\n1 2\n", "2 1\n0 5\n"],
)
def test_malformed_edge_list_raises(text):
    with pytest.raises(GraphError):
        loads_edge_list(text)


def test_comment_lines_are_skipped():
    g = loads_edge_list("# triangle\n3 3\n0 1\n1 2\n# mid\n0 2\n")
    assert g == complete(3)


def test_dot_lists_every_edge():
    text = to_dot(cycle(4), labels=["a", "b", "c", "d"])
    assert text.startswith("graph G {")
    assert text.count("--") == 4
    assert 'label="c"' in text


def test_connectivity_of_empty_graph():
    assert not is_connected(make_graph(0, []))
