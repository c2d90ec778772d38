"""Hypothesis strategies for graphs."""

import networkx as nx
from hypothesis import assume
from hypothesis import strategies as st

from lpl.families import random_regular
from lpl.graph import Graph, components, is_connected, make_graph


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = make_graph(n, chosen)
    if connected and not is_connected(g):
        # chain the components so the draw stays useful
        heads = sorted(min(c) for c in components(g))
        g = make_graph(n, list(chosen) + list(zip(heads, heads[1:])))
    return g


@st.composite
def regular_graphs(draw, min_n=4, max_n=12, min_d=2, connected=True):
    n = draw(st.integers(min_n, max_n))
    d = draw(st.integers(min_d, n - 1).filter(lambda d: n * d % 2 == 0))
    g = random_regular(n, d, draw(st.integers(0, 10_000)))
    if connected:
        assume(is_connected(g))
    return g


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
