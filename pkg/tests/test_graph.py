from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from indsets.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    edgelist_decode,
    edgelist_encode,
    empty_graph,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    join,
    make_graph,
    path_graph,
    regular_degree,
)


def test_make_graph_examples():
    assert make_graph(3, [(0, 1), (1, 2), (0, 2)]) == complete_graph(3)
    assert make_graph(4, []) == empty_graph(4)
    assert make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]) == cycle_graph(4)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 4)], [(-1, 2)]])
def test_make_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        make_graph(4, edges)


def test_duplicate_edges_collapse():
    assert make_graph(3, [(0, 1), (1, 0)]).num_edges() == 1


def test_regular_degree():
    assert regular_degree(complete_graph(3)) == 2
    assert regular_degree(cycle_graph(4)) == 2
    assert regular_degree(path_graph(3)) is None


def test_induced_subgraph():
    assert induced_subgraph(complete_graph(4), [0, 1]) == complete_graph(2)
    assert induced_subgraph(cycle_graph(4), [0, 2]) == empty_graph(2)
    assert induced_subgraph(cycle_graph(4), [0, 1, 2]) == path_graph(3)


def test_join():
    assert join(empty_graph(2), empty_graph(2)) == complete_bipartite(2, 2)
    wheel = join(empty_graph(1), cycle_graph(4))
    assert wheel.degrees() == [4, 3, 3, 3, 3]
    c5 = cycle_graph(5)
    assert join(empty_graph(0), c5) == c5


def test_graph6_hand_vectors():
    assert graph6_encode(empty_graph(2)) == "A?"
    assert graph6_encode(complete_graph(2)) == "A_"
    assert graph6_decode(graph6_encode(cycle_graph(5))) == cycle_graph(5)
    assert graph6_decode(">>graph6<<A_") == complete_graph(2)


@pytest.mark.parametrize("text", ["", "A", "A_?", "zz!!", "A\x7f"])
def test_graph6_malformed(text):
    with pytest.raises(GraphError):
        graph6_decode(text)


@given(graphs(max_n=14))
@settings(max_examples=200, deadline=None)
def test_graph6_matches_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    ref = nx.to_graph6_bytes(nxg, header=False).decode().strip()
    assert graph6_encode(g) == ref
    assert graph6_decode(ref) == g


@pytest.mark.parametrize("n", [0, 1, 62, 63, 64, 300])
def test_graph6_size_headers(n):
    g = cycle_graph(n) if n >= 3 else empty_graph(n)
    nxg = nx.cycle_graph(n) if n >= 3 else nx.empty_graph(n)
    assert graph6_encode(g) == nx.to_graph6_bytes(nxg, header=False).decode().strip()
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(max_n=12))
@settings(max_examples=100, deadline=None)
def test_edgelist_round_trip(g):
    assert edgelist_decode(edgelist_encode(g)) == g
