"""Parameter sweeps over every construction, one verified row per triple."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bounds import claim_ub2_bound, easy_container_bound, exact_log2
from .certificate import Certificate, ConstructionError, oracle_cap, verify_certificate
from .construct_high import (
    construct_claim_lb,
    construct_high_dense,
    construct_high_general,
    dense_condition,
    general_conditions,
)
from .construct_low import (
    case_degree_range,
    construct_even,
    construct_odd,
    degree_range_low,
    degree_range_odd,
)
from .graph import remove_edges
from .zykov import count_zykov

REGIMES = ("low", "odd", "high", "claim")
CSV_SCHEMA = "indsets-sweep/1"
COLUMNS = [
    "n", "d", "alpha", "construction", "case", "regular", "clique_partition", "zykov_witness",
    "exact_alpha", "count_lower_bound", "count_upper_bound", "count", "log2_zykov", "log2_upper",
    "passed", "error",
]


@dataclass
class SweepSpec:
    regime: str
    n_min: int = 4
    n_max: int = 12
    d_range: tuple[int, int] | None = None
    alpha_range: tuple[int, int] | None = None
    oracle_cap: int | None = None
    threads: int = 0
    per_case: bool = False
    # test hook: drop one edge from every constructed graph
    corrupt: bool = False

    def __post_init__(self) -> None:
        if self.regime not in REGIMES:
            raise ValueError(f"regime must be one of {REGIMES}, got {self.regime!r}")
        if self.n_min > self.n_max:
            raise ValueError("empty n range")


def _within(x: int, rng: tuple[int, int] | None) -> bool:
    return rng is None or rng[0] <= x <= rng[1]


def triples(spec: SweepSpec) -> list[tuple[int, int, int, str]]:
    """(n, d, alpha, construction) in lexicographic order."""
    out = []
    for n in range(spec.n_min, spec.n_max + 1):
        if spec.regime == "low":
            if n % 2 or n < 4:
                continue
            for a in range(2, n // 2 + 1):
                lo, hi = case_degree_range(n, a) if spec.per_case else degree_range_low(n, a)
                out += [(n, d, a, "low-even") for d in range(max(lo, 1), hi + 1)]
        elif spec.regime == "odd":
            if n % 2 == 0 or n < 5:
                continue
            for a in range(2, (n - 1) // 2 + 1):
                lo, hi = degree_range_odd(n, a)
                out += [(n, d, a, "low-odd") for d in range(lo, hi + 1) if d % 2 == 0]
        elif spec.regime == "high":
            for d in range(-(-n // 2), n):
                if (n * d) % 2:
                    continue
                for a in range(2, n - d + 1):
                    if 3 * d >= 2 * n and a >= dense_condition(n, d):
                        out.append((n, d, a, "high-dense"))
                    if all(general_conditions(n, d, a)):
                        out.append((n, d, a, "high-general"))
        else:
            for d in range(n // 2 + 1, n):
                if (n * d) % 2 == 0:
                    out.append((n, d, n - d, "claim"))
    out = [t for t in out if _within(t[1], spec.d_range) and _within(t[2], spec.alpha_range)]
    return sorted(out)


def build(n: int, d: int, alpha: int, construction: str) -> Certificate:
    if construction == "low-even":
        return construct_even(n, d, alpha)
    if construction == "low-odd":
        return construct_odd(n, d, alpha)
    if construction == "high-dense":
        return construct_high_dense(n, d, alpha)
    if construction == "high-general":
        return construct_high_general(n, d, alpha)
    if construction == "claim":
        return construct_claim_lb(n, d)
    raise ValueError(f"unknown construction {construction!r}")


def _corrupt(cert: Certificate) -> Certificate:
    edges = cert.graph.edges()
    if not edges:
        return cert
    return Certificate(
        graph=remove_edges(cert.graph, [edges[0]]), n=cert.n, d=cert.d, alpha=cert.alpha,
        regime=cert.regime, case=cert.case, zykov_witness=cert.zykov_witness,
        zykov_target=cert.zykov_target, clique_partition=cert.clique_partition, extra=cert.extra,
    )


def _flag(x: bool | None) -> str:
    return "" if x is None else str(int(x))


@dataclass
class SweepRow:
    n: int
    d: int
    alpha: int
    construction: str
    case: str = ""
    checks: dict[str, bool | None] = field(default_factory=dict)
    count: int | None = None
    log2_zykov: float | None = None
    log2_upper: float | None = None
    error: str = ""

    @property
    def passed(self) -> bool:
        return not self.error and all(v is not False for v in self.checks.values())

    def as_csv(self) -> dict[str, str]:
        row = {
            "n": str(self.n), "d": str(self.d), "alpha": str(self.alpha),
            "construction": self.construction, "case": self.case,
            "count": "" if self.count is None else str(self.count),
            "log2_zykov": "" if self.log2_zykov is None else f"{self.log2_zykov:.9f}",
            "log2_upper": "" if self.log2_upper is None else f"{self.log2_upper:.9f}",
            "passed": str(int(self.passed)), "error": self.error,
        }
        for k in ("regular", "clique_partition", "zykov_witness", "exact_alpha",
                  "count_lower_bound", "count_upper_bound"):
            row[k] = _flag(self.checks.get(k))
        return row


def run_triple(n: int, d: int, alpha: int, construction: str, cap: int | None = None,
               corrupt: bool = False) -> SweepRow:
    row = SweepRow(n, d, alpha, construction)
    try:
        cert = build(n, d, alpha, construction)
    except ConstructionError as exc:
        row.error = exc.reason
        return row
    if corrupt:
        cert = _corrupt(cert)
    row.case = cert.case
    chk = verify_certificate(cert, cap=cap)
    row.checks = {
        "regular": chk.regular, "clique_partition": chk.clique_partition,
        "zykov_witness": chk.zykov_witness, "exact_alpha": chk.exact_alpha,
        "count_lower_bound": chk.count_lower_bound,
    }
    N, a = cert.zykov_target
    row.log2_zykov = exact_log2(count_zykov(N, a))
    upper = None
    if construction in ("high-dense", "high-general"):
        upper = easy_container_bound(n, d, alpha)
    elif construction == "claim":
        upper = claim_ub2_bound(n, d)
    if upper is not None:
        row.log2_upper = exact_log2(upper)
    row.count = chk.count
    if chk.count is not None and upper is not None:
        row.checks["count_upper_bound"] = chk.count <= upper
    return row


def _run_star(args) -> SweepRow:
    return run_triple(*args)


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    cap = oracle_cap() if spec.oracle_cap is None else spec.oracle_cap
    jobs = [(n, d, a, c, cap, spec.corrupt) for n, d, a, c in triples(spec)]
    threads = spec.threads or os.cpu_count() or 1
    if threads == 1 or len(jobs) < 2:
        rows = [_run_star(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_run_star, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    rows.sort(key=lambda r: (r.n, r.d, r.alpha, r.construction))
    return rows


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    buf.write(f"# schema: {CSV_SCHEMA}\n")
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_csv())
    return buf.getvalue()
