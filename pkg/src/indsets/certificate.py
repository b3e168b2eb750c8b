"""Construction certificates: a built graph plus the witness data needed to check it cheaply."""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .counting import count_independent_sets, independence_number
from .graph import Graph, graph6_decode, graph6_encode, induced_subgraph, is_clique, regular_degree
from .zykov import count_zykov, zykov_profile

DEFAULT_ORACLE_CAP = 26
ORACLE_CAP_ENV = "INDSETS_ORACLE_CAP"


def oracle_cap() -> int:
    """Largest n for which exact alpha and i(G) are computed; overridable by environment variable."""
    return int(os.environ.get(ORACLE_CAP_ENV, DEFAULT_ORACLE_CAP))


class ConstructionError(ValueError):
    """A construction was asked for parameters outside its valid range.

    ``reason`` is a short machine-readable phrase such as ``"d above range"``.
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class Certificate:
    graph: Graph
    n: int
    d: int
    alpha: int
    regime: str
    case: str
    zykov_witness: tuple[int, ...]
    # (N, alpha) of the Zykov graph the witness must induce
    zykov_target: tuple[int, int]
    # alpha cliques covering V, when the construction has one (low regime)
    clique_partition: tuple[tuple[int, ...], ...] | None = None
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "regime": self.regime,
            "case": self.case,
            "n": self.n,
            "d": self.d,
            "alpha": self.alpha,
            "graph6": graph6_encode(self.graph),
            "zykov_target": list(self.zykov_target),
            "zykov_witness": list(self.zykov_witness),
            "clique_partition": None if self.clique_partition is None else [list(c) for c in self.clique_partition],
            "extra": self.extra,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, rec: dict[str, Any]) -> "Certificate":
        cp = rec.get("clique_partition")
        return cls(
            graph=graph6_decode(rec["graph6"]),
            n=rec["n"], d=rec["d"], alpha=rec["alpha"],
            regime=rec["regime"], case=rec["case"],
            zykov_witness=tuple(rec["zykov_witness"]),
            zykov_target=tuple(rec["zykov_target"]),
            clique_partition=None if cp is None else tuple(tuple(c) for c in cp),
            extra=rec.get("extra", {}),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


@dataclass
class CertificateCheck:
    """Outcome of ``verify_certificate``.  A check is None when it was not applicable or not run."""

    regular: bool
    clique_partition: bool | None
    zykov_witness: bool
    exact_alpha: bool | None
    count_lower_bound: bool | None
    alpha_found: int | None = None
    count: int | None = None
    zykov_count: int | None = None
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in (
            self.regular, self.clique_partition, self.zykov_witness, self.exact_alpha, self.count_lower_bound,
        ))


def is_zykov_graph(g: Graph, N: int, alpha: int) -> bool:
    """Structural check: ``g`` is a disjoint union of cliques with Z(N, alpha)'s size multiset."""
    if g.n != N:
        return False
    seen = [False] * g.n
    sizes = []
    for v in range(g.n):
        if seen[v]:
            continue
        comp = [v, *sorted(g.adjacency[v])]
        if not is_clique(g, comp) or any(len(g.adjacency[u]) != len(comp) - 1 for u in comp):
            return False
        for u in comp:
            seen[u] = True
        sizes.append(len(comp))
    return Counter(sizes) == Counter(zykov_profile(N, alpha).sizes())


def verify_certificate(cert: Certificate, cap: int | None = None, count: bool = True) -> CertificateCheck:
    """Check regularity, the clique cover, the induced Zykov witness and, for n <= cap,
    exact alpha(G) and i(G) >= i(Z(target))."""
    cap = oracle_cap() if cap is None else cap
    g = cert.graph
    msgs = []

    regular = g.n == cert.n and regular_degree(g) == cert.d
    if not regular:
        msgs.append(f"graph is not {cert.d}-regular on {cert.n} vertices")

    cover_ok = None
    if cert.clique_partition is not None:
        parts = cert.clique_partition
        flat = sorted(v for p in parts for v in p)
        cover_ok = (
            len(parts) == cert.alpha
            and flat == list(range(g.n))
            and all(is_clique(g, p) for p in parts)
        )
        if not cover_ok:
            msgs.append("clique_partition is not a partition of V into alpha cliques")

    N, a = cert.zykov_target
    witness_ok = len(set(cert.zykov_witness)) == len(cert.zykov_witness) and is_zykov_graph(
        induced_subgraph(g, cert.zykov_witness), N, a
    )
    if not witness_ok:
        msgs.append(f"zykov_witness does not induce Z({N},{a})")

    exact_alpha = count_ok = None
    alpha_found = total = zc = None
    if g.n <= cap:
        alpha_found = independence_number(g)
        exact_alpha = alpha_found == cert.alpha
        if not exact_alpha:
            msgs.append(f"alpha(G) = {alpha_found}, expected {cert.alpha}")
        if count:
            total = count_independent_sets(g)
            zc = count_zykov(N, a)
            count_ok = total >= zc
            if not count_ok:
                msgs.append(f"i(G) = {total} < i(Z({N},{a})) = {zc}")
    return CertificateCheck(regular, cover_ok, witness_ok, exact_alpha, count_ok, alpha_found, total, zc, msgs)
