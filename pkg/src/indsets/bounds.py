"""Upper/lower bound evaluators and a per-graph bound report.

Bounds carrying an unspecified absolute constant ``c`` are evaluated with a
caller-supplied ``c`` and flagged ``parametric``; they never count toward the
certified verdict.  Exact bounds are compared with integer arithmetic.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

from .counting import count_independent_sets, independence_number, independence_polynomial
from .graph import Graph, regular_degree
from .zykov import count_zykov, convergence_rate, zykov_polynomial

LOG_SLACK = 1e-9
CSV_SCHEMA = "indsets-bounds/1"


def _log(x: float, natural: bool) -> float:
    return math.log(x) if natural else math.log2(x)


def _error_term(n: int, d: int, c: float, natural_log: bool) -> float:
    return c * n * math.sqrt(_log(d, natural_log) / d)


def _check_low(n: int, d: int, alpha: int) -> None:
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if not 1 <= alpha <= n / 2:
        raise ValueError(f"need 1 <= alpha <= n/2, got alpha={alpha}, n={n}")


def sapozhenko_bound(n: int, d: int, alpha: float, c: float, natural_log: bool = False) -> float:
    """log2 of (1 + n/(2 alpha))^alpha * 2^(c n sqrt(log d / d))."""
    _check_low(n, d, alpha)
    return alpha * math.log2(1 + n / (2 * alpha)) + _error_term(n, d, c, natural_log)


def ub1_bound(n: int, d: int, alpha: int, c: float, natural_log: bool = False) -> float:
    """log2 of i(Z(floor(n/2), alpha)) * 2^(c n sqrt(log d / d)) (error term carries the factor n)."""
    _check_low(n, d, alpha)
    return convergence_rate(n // 2, alpha) + _error_term(n, d, c, natural_log)


def easy_container_bound(n: int, d: int, alpha: int) -> int:
    """n * i(Z(n-d, alpha)), valid for (n, d, alpha)-graphs with d >= n/2."""
    if 2 * d < n:
        raise ValueError(f"need d >= n/2, got n={n}, d={d}")
    if not 1 <= alpha <= n - d:
        raise ValueError(f"need 1 <= alpha <= n-d, got alpha={alpha}")
    return n * count_zykov(n - d, alpha)


def claim_ub2_bound(n: int, d: int) -> int:
    """n * 2^(n-d) for (n, d)-graphs with n/2 < d < n."""
    if not (n < 2 * d and d < n):
        raise ValueError(f"need n/2 < d < n, got n={n}, d={d}")
    return n * 2 ** (n - d)


def default_phi(d: int, natural_log: bool = False) -> int:
    return math.floor(math.sqrt(d * _log(d, natural_log)))


def container_size_formula(n: int, d: int, phi: int | None = None, natural_log: bool = False) -> tuple[int, float]:
    """(floor(n d / (2d - phi)), log2 sum_{i <= n/phi} C(n, i)) for integer 0 < phi < d."""
    if phi is None:
        phi = default_phi(d, natural_log)
    if not 0 < phi < d:
        raise ValueError(f"need 0 < phi < d, got phi={phi}, d={d}")
    size = (n * d) // (2 * d - phi)
    family = sum(math.comb(n, i) for i in range(n // phi + 1))
    return size, math.log2(family)


# --- report ------------------------------------------------------------------


@dataclass
class BoundEntry:
    name: str
    log2_value: float | None
    applicable: bool
    satisfied: bool | None
    parametric: bool = False
    exact_value: int | None = None


@dataclass
class BoundReport:
    n: int
    d: int | None
    alpha_claim: int
    alpha: int
    alpha_claim_holds: bool
    count: int
    exact_log2_count: float
    polynomial: list[int]
    zykov_dominance: bool
    c: float
    natural_log: bool
    phi: int | None
    entries: list[BoundEntry] = field(default_factory=list)

    @property
    def certified_ok(self) -> bool:
        """alpha claim holds and every applicable non-parametric bound is satisfied."""
        return self.alpha_claim_holds and self.zykov_dominance and all(
            e.satisfied for e in self.entries if e.applicable and not e.parametric
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["count"] = str(self.count)
        out["polynomial"] = [str(x) for x in self.polynomial]
        for e in out["entries"]:
            if e["exact_value"] is not None:
                e["exact_value"] = str(e["exact_value"])
        out["certified_ok"] = self.certified_ok
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def csv_row(self) -> dict:
        row = {
            "n": self.n, "d": self.d, "alpha_claim": self.alpha_claim, "alpha": self.alpha,
            "count": str(self.count), "log2_count": f"{self.exact_log2_count:.9f}",
            "certified_ok": int(self.certified_ok),
        }
        for e in self.entries:
            row[f"{e.name}_log2"] = "" if e.log2_value is None else f"{e.log2_value:.9f}"
            row[f"{e.name}_ok"] = "" if e.satisfied is None else int(e.satisfied)
        return row

    def to_csv(self) -> str:
        row = self.csv_row()
        buf = io.StringIO()
        buf.write(f"# schema: {CSV_SCHEMA}\n")
        w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        w.writeheader()
        w.writerow(row)
        return buf.getvalue()


def exact_log2(x: int) -> float:
    return math.log2(x) if x > 0 else float("-inf")


def _exact_entry(name: str, applicable: bool, count: int, value: int | None) -> BoundEntry:
    if not applicable or value is None:
        return BoundEntry(name, None, False, None)
    return BoundEntry(name, exact_log2(value), True, count <= value, exact_value=value)


def verify_bounds(g: Graph, alpha_claim: int, c: float = 1.0, natural_log: bool = False) -> BoundReport:
    """Exact i(G), alpha(G) and every applicable bound, evaluated for ``alpha_claim``."""
    n = g.n
    d = regular_degree(g)
    poly = list(independence_polynomial(g))
    count = sum(poly)
    alpha = independence_number(g)
    if alpha != len(poly) - 1:
        raise AssertionError("independence number disagrees with polynomial degree")
    zpoly = zykov_polynomial(n, alpha) if n else (1,)
    dominance = all(t < len(zpoly) and x <= zpoly[t] for t, x in enumerate(poly))

    entries = []
    a_eff = min(max(alpha_claim, 1), n) if n else 0
    entries.append(_exact_entry("zykov", n > 0, count, count_zykov(n, a_eff) if n else None))

    high = d is not None and n > 0 and 2 * d >= n and d < n
    a_high = min(max(alpha_claim, 1), n - d) if high else 0
    entries.append(_exact_entry("easy_container", high, count, easy_container_bound(n, d, a_high) if high else None))
    strict = high and 2 * d > n
    entries.append(_exact_entry("claim_ub2", strict, count, claim_ub2_bound(n, d) if strict else None))

    low = d is not None and 2 <= d and 2 * d <= n and 1 <= alpha_claim <= n / 2
    lc = exact_log2(count)
    for name, fn in (("sapozhenko", sapozhenko_bound), ("ub1", ub1_bound)):
        if low:
            val = fn(n, d, alpha_claim, c, natural_log)
            entries.append(BoundEntry(name, val, True, lc <= val + LOG_SLACK, parametric=True))
        else:
            entries.append(BoundEntry(name, None, False, None, parametric=True))

    phi = None
    if d is not None and d >= 3:
        p = default_phi(d, natural_log)
        if 0 < p < d:
            phi = p
    return BoundReport(
        n=n, d=d, alpha_claim=alpha_claim, alpha=alpha, alpha_claim_holds=alpha <= alpha_claim,
        count=count, exact_log2_count=lc, polynomial=poly, zykov_dominance=dominance,
        c=c, natural_log=natural_log, phi=phi, entries=entries,
    )
