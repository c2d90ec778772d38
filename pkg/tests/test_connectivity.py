import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import lpl.connectivity as conn
from lpl.connectivity import (
    LambdaPrimeOptions,
    classify,
    edge_connectivity,
    is_restricted_side,
    lambda_prime_atom,
    min_cut_between,
    restricted_cut_table,
    restricted_edge_connectivity,
    restricted_edge_connectivity_bruteforce,
    vertex_connectivity,
)
from lpl.families import circulant, complete, cycle, hypercube, random_regular, star
from lpl.graph import GraphError, MultiGraph, boundary, make_graph, validate_certificate
from lpl.replacement import ccc
from tests.strategies import graphs, regular_graphs, to_nx


def restricted_by_enumeration(g):
    """lambda' straight from the definition, for tiny graphs."""
    best = None
    for r in range(2, g.n - 1):
        for xs in itertools.combinations(range(g.n), r):
            if is_restricted_side(g, xs):
                c = len(boundary(g, xs))
                best = c if best is None else min(best, c)
    return best


def test_q3_corner_to_antipode_cut():
    q = hypercube(3)
    res = min_cut_between(MultiGraph.from_graph(q), 0, 7)
    # every set holding 0 but not 7 has at least 3 boundary edges; {0} attains it
    oracle = min(
        len(boundary(q, {0, *rest}))
        for r in range(0, 7)
        for rest in itertools.combinations(range(1, 7), r)
    )
    assert res.value == oracle == 3
    assert 0 in res.source_side and 7 not in res.source_side
    assert len(res.cut_edges) == 3


def test_min_cut_between_prunes():
    res = min_cut_between(MultiGraph.from_graph(hypercube(3)), 0, 7, prune_at=2)
    assert res.pruned and res.value == 2 and res.source_side is None


@given(graphs(min_n=2, max_n=9, connected=True))
def test_edge_connectivity_matches_networkx(g):
    lam, cert = edge_connectivity(g)
    assert lam == nx.edge_connectivity(to_nx(g))
    assert validate_certificate(g, cert)
    assert cert.claimed_value == lam


@given(graphs(min_n=2, max_n=9, connected=True))
def test_vertex_connectivity_matches_networkx(g):
    assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_hypercube_kappa_by_brute_force(n):
    q = hypercube(n)
    # smallest vertex set whose removal disconnects; Q_n needs n
    smallest = None
    for r in range(1, n + 1):
        for cut in itertools.combinations(range(q.n), r):
            rest = [v for v in range(q.n) if v not in cut]
            sub = to_nx(q).subgraph(rest)
            if not nx.is_connected(sub):
                smallest = r
                break
        if smallest:
            break
    assert vertex_connectivity(q) == smallest == n


def test_disconnected_graph_has_zero_edge_connectivity():
    g = make_graph(4, [(0, 1), (2, 3)])
    lam, cert = edge_connectivity(g)
    assert lam == 0 and not cert.cut_edges


def test_complete_graph_kappa():
    assert vertex_connectivity(complete(6)) == 5


@given(graphs(min_n=4, max_n=8, connected=True))
def test_restricted_matches_enumeration(g):
    expected = restricted_by_enumeration(g)
    res = restricted_edge_connectivity(g)
    assert res.value == expected
    assert restricted_edge_connectivity_bruteforce(g) == expected
    if expected is not None:
        assert validate_certificate(g, res.certificate)


@given(regular_graphs(max_n=12))
def test_restricted_matches_brute_force_on_regular_graphs(g):
    res = restricted_edge_connectivity(g)
    assert res.value == restricted_edge_connectivity_bruteforce(g)
    assert res.value <= 2 * g.degree(0) - 2


@given(graphs(min_n=4, max_n=9, connected=True), st.data())
def test_any_base_vertex_gives_the_same_value(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    a = restricted_edge_connectivity(g, LambdaPrimeOptions(base_vertex=v)).value
    b = restricted_edge_connectivity(g, LambdaPrimeOptions(exhaustive_pairs=True)).value
    assert a == b


@pytest.mark.parametrize(
    "g,expected",
    [(hypercube(2), 2), (hypercube(3), 4), (hypercube(4), 6), (hypercube(5), 8), (hypercube(6), 10),
     (circulant(8, (1, 3)), 6), (circulant(9, (1, 2)), 6), (circulant(11, (1, 2, 3)), 10),
     (circulant(8, (1, 3, 4)), 8), (complete(4), 4), (cycle(7), 2), (ccc(3), 3), (ccc(4), 4)],
    ids=lambda x: getattr(x, "name", str(x)),
)
def test_restricted_golden_values(g, expected):
    assert restricted_edge_connectivity(g).value == expected


@pytest.mark.parametrize("g", [star(5), complete(3), make_graph(4, [(0, 1), (2, 3)]), cycle(3)],
                         ids=["star", "K3", "disconnected", "C3"])
def test_restricted_undefined(g):
    res = restricted_edge_connectivity(g)
    assert res.value is None and not res.defined


def test_brute_force_rejects_large_graphs():
    with pytest.raises(GraphError):
        restricted_cut_table(hypercube(5))
    assert restricted_edge_connectivity_bruteforce(star(6)) is None


def test_ccc3_minimum_sides_are_the_triangles():
    g = ccc(3)
    value, winners = restricted_cut_table(g, threshold=24)
    small = {frozenset(i for i in range(g.n) if m >> i & 1) for m in winners}
    small = {s for s in small if len(s) <= g.n // 2}
    assert value == 3
    assert small == {frozenset(range(3 * x, 3 * x + 3)) for x in range(8)}


@pytest.mark.parametrize(
    "g,expected",
    [(ccc(3), [0, 1, 2]), (hypercube(3), [0, 1]), (circulant(8, (1, 3)), [0, 1])],
    ids=["CCC3", "Q3", "G(8;1,3)"],
)
def test_atoms(g, expected):
    assert sorted(lambda_prime_atom(g)) == expected
    assert sorted(lambda_prime_atom(g, LambdaPrimeOptions(use_vertex_transitivity=True))) == expected


@given(regular_graphs(min_n=5, max_n=10))
def test_atom_is_a_smallest_fragment(g):
    value, winners = restricted_cut_table(g)
    atom = lambda_prime_atom(g)
    assert len(boundary(g, atom)) == value
    assert is_restricted_side(g, atom)
    assert len(atom) == min(bin(m).count("1") for m in winners)


def test_parallel_scan_agrees(monkeypatch):
    monkeypatch.setattr(conn, "PARALLEL_MIN_PAIRS", 0)
    g = ccc(4)
    res = restricted_edge_connectivity(g, LambdaPrimeOptions(jobs=2))
    assert res.value == 4 and validate_certificate(g, res.certificate)


@pytest.mark.parametrize("g", [ccc(4), hypercube(5), circulant(11, (1, 2, 3)), random_regular(14, 5, 3)],
                         ids=lambda g: g.name)
def test_scipy_backend_agrees(g):
    a = restricted_edge_connectivity(g)
    b = restricted_edge_connectivity(g, LambdaPrimeOptions(backend="scipy"))
    assert a.value == b.value
    assert validate_certificate(g, b.certificate)


def test_prune_at_caps_the_search():
    res = restricted_edge_connectivity(hypercube(4), LambdaPrimeOptions(prune_at=3))
    assert res.value == 3 and res.certificate is None


def test_options_validation():
    with pytest.raises(ValueError):
        LambdaPrimeOptions(jobs=0)
    with pytest.raises(ValueError):
        LambdaPrimeOptions(backend="gpu")


def test_classify_cube_connected_cycles():
    rep = classify(ccc(4))
    assert (rep.lam, rep.lam_prime, rep.kappa, rep.xi) == (3, 4, 3, 4)
    assert rep.super_lambda and rep.lambda_prime_optimal
    assert rep.violations(ccc(4)) == []
    doc = rep.to_json()
    assert doc["lambda_prime_certificate"]["kind"] == "restricted-edge-cut"


def test_classify_reports_undefined_lambda_prime():
    rep = classify(star(5))
    assert rep.lam_prime is None and rep.to_json()["lambda_prime"] == "undefined"
    with pytest.raises(GraphError):
        classify(make_graph(4, [(0, 1), (2, 3)]))


@given(graphs(min_n=4, max_n=9, connected=True))
def test_report_invariants(g):
    assert classify(g).violations(g) == []
