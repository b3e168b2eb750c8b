from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indsets.matching import (
    BipartiteGraph,
    NoPerfectMatching,
    maximum_matching,
    peel_matchings,
    perfect_matching,
    regular_subgraph,
)


def complete(p: int, q: int) -> BipartiteGraph:
    return BipartiteGraph.from_edges(p, q, [(u, v) for u in range(p) for v in range(q)])


def random_regular(rng: random.Random, m: int, r: int) -> BipartiteGraph:
    """r distinct cyclic shifts with both sides randomly relabelled."""
    shifts = rng.sample(range(m), r)
    left, right = list(range(m)), list(range(m))
    rng.shuffle(left)
    rng.shuffle(right)
    return BipartiteGraph.from_edges(m, m, [(left[i], right[(i + s) % m]) for i in range(m) for s in shifts])


def is_matching_of(b: BipartiteGraph, m: dict[int, int]) -> bool:
    return len(set(m.values())) == len(m) and all(v in b.adj[u] for u, v in m.items())


def test_k33_identity():
    assert perfect_matching(complete(3, 3)) == {0: 0, 1: 1, 2: 2}


def test_c8_alternating():
    # C8 as a 2-regular bipartite graph: left i ~ right i, i+1
    b = BipartiteGraph.from_edges(4, 4, [(i, i) for i in range(4)] + [(i, (i + 1) % 4) for i in range(4)])
    m = perfect_matching(b)
    assert len(m) == 4 and is_matching_of(b, m)


def test_hall_witness():
    b = BipartiteGraph.from_edges(5, 5, [(0, 0), (1, 0), (2, 0), (3, 1), (4, 2)])
    with pytest.raises(NoPerfectMatching) as info:
        perfect_matching(b)
    assert info.value.witness == frozenset({0, 1, 2})
    assert info.value.neighbourhood == frozenset({0})


def test_hall_witness_right_side():
    b = BipartiteGraph.from_edges(2, 3, [(0, 0), (1, 1)])
    with pytest.raises(NoPerfectMatching) as info:
        perfect_matching(b)
    exc = info.value
    assert len(exc.witness) > len(exc.neighbourhood)


def test_regular_subgraph_examples():
    k33 = complete(3, 3)
    assert regular_subgraph(k33, 0).num_edges() == 0
    assert regular_subgraph(k33, 3) == k33
    sub = regular_subgraph(complete(4, 4), 2)
    assert sub.regular_degree() == 2
    g = nx.Graph([(("l", u), ("r", v)) for u, v in sub.edges()])
    assert g.number_of_nodes() == 8
    assert all(len(c) % 2 == 0 and nx.is_eulerian(g.subgraph(c)) for c in nx.connected_components(g))


def test_peel_rejects_irregular():
    with pytest.raises(ValueError):
        peel_matchings(BipartiteGraph.from_edges(2, 2, [(0, 0)]), 1)
    with pytest.raises(ValueError):
        peel_matchings(complete(2, 2), 3)


@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.integers(1, 12), st.floats(0.0, 1.0))
@settings(max_examples=150, deadline=None)
def test_maximum_matching_size_matches_networkx(seed, p, q, dens):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(p) for v in range(q) if rng.random() < dens]
    b = BipartiteGraph.from_edges(p, q, edges)
    m = maximum_matching(b)
    assert is_matching_of(b, m)
    g = nx.Graph()
    g.add_nodes_from([("l", u) for u in range(p)] + [("r", v) for v in range(q)])
    g.add_edges_from((("l", u), ("r", v)) for u, v in edges)
    ref = nx.bipartite.hopcroft_karp_matching(g, top_nodes=[("l", u) for u in range(p)])
    assert len(m) == len(ref) // 2


@given(st.integers(0, 2**32 - 1), st.integers(1, 16), st.integers(1, 6))
@settings(max_examples=60, deadline=None)
def test_peeling_property(seed, m, r):
    r = min(r, m)
    b = random_regular(random.Random(seed), m, r)
    ms = peel_matchings(b, r)
    seen = set()
    for mt in ms:
        assert len(mt) == m and is_matching_of(b, mt)
        pairs = set(mt.items())
        assert not pairs & seen
        seen |= pairs
    assert seen == set(b.edges())


def test_deterministic():
    b = random_regular(random.Random(5), 10, 4)
    assert peel_matchings(b, 4) == peel_matchings(b, 4)
