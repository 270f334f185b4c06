"""Shared hypothesis strategies and corpora for the UCluster tests."""

import itertools

import hypothesis.strategies as st
from networkx import graph_atlas_g

from UCluster.Graph import Graph


def _build(n, flags):
    pairs = itertools.combinations(range(n), 2)
    return Graph(n, [e for e, keep in zip(pairs, flags) if keep])


@st.composite
def graphs(draw, min_n=0, max_n=7):
    """Small simple graphs with every edge pattern reachable."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    flags = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2,
                          max_size=n * (n - 1) // 2))
    return _build(n, flags)


def atlas(max_n=7, connected=False):
    """Every graph of the networkx atlas (all graphs on up to 7 vertices)
    with at most max_n vertices."""
    out = []
    for nx_graph in graph_atlas_g():
        if nx_graph.number_of_nodes() > max_n:
            continue
        g = Graph.from_networkx(nx_graph)
        if connected and len(g.component_masks()) != 1:
            continue
        out.append(g)
    return out
