from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from indsets.bounds import (
    BoundReport,
    claim_ub2_bound,
    container_size_formula,
    default_phi,
    easy_container_bound,
    sapozhenko_bound,
    ub1_bound,
    verify_bounds,
)
from indsets.construct_high import construct_high_dense
from indsets.counting import count_independent_sets
from indsets.graph import complete_bipartite, complete_graph, cycle_graph, regular_degree
from indsets.zykov import count_zykov


def test_sapozhenko_examples():
    n = 300
    assert sapozhenko_bound(n, 10, n / 3, 0) == pytest.approx(n * math.log2(5 / 2) / 3)
    assert 2 ** (sapozhenko_bound(n, 10, n / 3, 0) / n) == pytest.approx(1.3572, abs=1e-4)
    # frozen from direct evaluation: 50 + 100 * sqrt(log2(25) / 25)
    assert sapozhenko_bound(100, 25, 50, 1) == pytest.approx(93.09921665, abs=1e-6)
    assert sapozhenko_bound(100, 25, 50, 0) == pytest.approx(50)


def test_natural_log_option():
    a = sapozhenko_bound(100, 25, 50, 1, natural_log=True)
    assert a == pytest.approx(50 + 100 * math.sqrt(math.log(25) / 25))


def test_ub1_examples():
    n = 300
    assert ub1_bound(n, 10, n // 3, 0) == pytest.approx(n * math.log2(6) / 6)
    assert ub1_bound(20, 8, 5, 0) == pytest.approx(5 * math.log2(3))
    # divisible case: main term coincides with the Sapozhenko main term
    assert ub1_bound(40, 8, 4, 0) == pytest.approx(sapozhenko_bound(40, 8, 4, 0))


def test_exact_bound_examples():
    assert easy_container_bound(8, 4, 4) == 128
    assert count_independent_sets(complete_bipartite(4, 4)) == 31
    assert easy_container_bound(6, 4, 2) == 24
    assert easy_container_bound(10, 8, 2) == 40
    assert count_independent_sets(construct_high_dense(10, 8, 2).graph) <= 40
    assert claim_ub2_bound(6, 4) == 24
    assert claim_ub2_bound(10, 9) == 20
    assert claim_ub2_bound(8, 5) == 64


@pytest.mark.parametrize("args", [(8, 3, 2), (8, 4, 5)])
def test_easy_container_domain(args):
    with pytest.raises(ValueError):
        easy_container_bound(*args)


def test_container_size_examples():
    assert container_size_formula(100, 20, 10)[0] == 66
    phi = default_phi(20)
    assert phi == math.floor(math.sqrt(20 * math.log2(20)))
    assert container_size_formula(100, 20)[0] == (100 * 20) // (40 - phi)
    # phi -> d from below: size -> n
    assert container_size_formula(100, 1000, 999)[0] == 99
    with pytest.raises(ValueError):
        container_size_formula(100, 20, 20)


def test_verify_examples():
    r = verify_bounds(complete_bipartite(4, 4), 4)
    assert r.certified_ok
    assert all(e.satisfied for e in r.entries if e.applicable)
    r = verify_bounds(cycle_graph(5), 2)
    assert r.count == 11 and r.certified_ok
    assert next(e for e in r.entries if e.name == "zykov").exact_value == 12
    r = verify_bounds(complete_graph(3), 1)
    assert r.count == 4 and r.certified_ok
    assert next(e for e in r.entries if e.name == "zykov").exact_value == 4


def test_verify_false_alpha_claim():
    r = verify_bounds(complete_bipartite(4, 4), 3)
    assert not r.alpha_claim_holds and not r.certified_ok


def test_report_serialisation():
    r = verify_bounds(cycle_graph(6), 3)
    d = r.to_dict()
    assert d["count"] == "18" and d["certified_ok"] is True
    text = r.to_csv()
    assert text.startswith("# schema: indsets-bounds/1\n")


@given(st.integers(0, 2**32 - 1), st.integers(1, 12), st.floats(0.1, 0.9))
@settings(max_examples=100, deadline=None)
def test_random_graphs_never_break_certified_bounds(seed, n, p):
    g = random_graph(random.Random(seed), n, p)
    r = verify_bounds(g, n)
    # with a true alpha claim, Zykov dominance and the exact bounds always hold
    assert r.zykov_dominance
    rep = verify_bounds(g, r.alpha)
    assert rep.certified_ok


@given(st.integers(2, 12))
@settings(max_examples=20, deadline=None)
def test_regular_high_degree_bounds(m):
    # K_{m,m} is m-regular on 2m vertices: the easy-container bound applies
    g = complete_bipartite(m, m)
    r = verify_bounds(g, m)
    assert regular_degree(g) == m and r.certified_ok
    assert r.count <= 2 * m * count_zykov(m, m)
