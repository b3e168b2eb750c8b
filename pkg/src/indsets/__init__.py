"""Exact counting of independent sets in regular graphs, extremal constructions and bounds."""

from .bounds import BoundReport, verify_bounds
from .certificate import Certificate, ConstructionError, verify_certificate
from .construct_high import (
    CirculantSpec,
    build_circulant,
    construct_claim_lb,
    construct_high_dense,
    construct_high_general,
)
from .construct_low import construct_even, construct_odd
from .counting import (
    brute_force_count,
    count_independent_sets,
    independence_number,
    independence_polynomial,
)
from .graph import Graph, GraphError, graph6_decode, graph6_encode, make_graph
from .zykov import build_zykov, count_zykov, k_high, k_low, zykov_profile

__all__ = [
    "BoundReport", "Certificate", "CirculantSpec", "ConstructionError", "Graph", "GraphError",
    "brute_force_count", "build_circulant", "build_zykov", "construct_claim_lb", "construct_even",
    "construct_high_dense", "construct_high_general", "construct_odd", "count_independent_sets",
    "count_zykov", "graph6_decode", "graph6_encode", "independence_number", "independence_polynomial",
    "k_high", "k_low", "make_graph", "verify_bounds", "verify_certificate", "zykov_profile",
]
