"""Acceptance criteria 1-11, each at its stated tolerance.

Every criterion records one ``[PASS]`` / ``[FAIL]`` line, printed in the pytest
terminal summary; ``python tests/test_acceptance.py`` prints the same lines
without pytest.
"""

from __future__ import annotations

import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, random_graph  # noqa: E402
from indsets.bounds import sapozhenko_bound  # noqa: E402
from indsets.construct_high import (  # noqa: E402
    CirculantSpec,
    build_circulant,
    circulant_alpha_bound,
    construct_claim_lb,
)
from indsets.counting import (  # noqa: E402
    brute_force_count,
    count_independent_sets,
    independence_number,
    independence_polynomial,
)
from indsets.graph import complete_bipartite  # noqa: E402
from indsets.matching import BipartiteGraph, peel_matchings  # noqa: E402
from indsets.sweeps import SweepSpec, run_sweep  # noqa: E402
from indsets.zykov import (  # noqa: E402
    check_monotonicity,
    convergence_rate,
    k_high,
    k_low,
    zykov_polynomial,
)

SEED = 20240601


def record(num: int, ok: bool, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    assert ok, detail


# --- 1 ----------------------------------------------------------------------


def test_criterion_01_oracle_equivalence():
    rng = random.Random(SEED + 1)
    start = time.perf_counter()
    bad = 0
    for _ in range(1000):
        n = rng.randint(0, 16)
        g = random_graph(rng, n, rng.uniform(0.05, 0.95))
        total, poly = brute_force_count(g)
        fast = independence_polynomial(g)
        if (count_independent_sets(g), fast, independence_number(g)) != (total, poly, len(poly) - 1):
            bad += 1
    elapsed = time.perf_counter() - start
    record(1, bad == 0 and elapsed < 60,
           f"fast counter vs brute force on 1000 graphs (n <= 16): {bad} mismatches, {elapsed:.1f}s (< 60s)")


# --- 2 ----------------------------------------------------------------------


def test_criterion_02_zykov_extremality():
    rng = random.Random(SEED + 2)
    bad = 0
    for _ in range(1000):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.uniform(0.05, 0.95))
        poly = independence_polynomial(g)
        ref = zykov_polynomial(n, len(poly) - 1)
        if len(ref) != len(poly) or any(x > y for x, y in zip(poly, ref)):
            bad += 1
    record(2, bad == 0, f"i_t(G) <= i_t(Z(n, alpha(G))) on 1000 graphs (n <= 10): {bad} violations")


# --- 3-6: sweeps ------------------------------------------------------------


def _sweep(regime: str, n_max: int, count_cap: int):
    start = time.perf_counter()
    rows = run_sweep(SweepSpec(regime, 1, n_max, oracle_cap=n_max))
    elapsed = time.perf_counter() - start
    failed = [r for r in rows if not r.passed]
    # exact alpha everywhere, exact counts at least up to count_cap
    missing = [r for r in rows if r.checks.get("exact_alpha") is None
               or (r.n <= count_cap and r.count is None)]
    return rows, failed, missing, elapsed


def test_criterion_03_low_sweep():
    rows, failed, missing, elapsed = _sweep("low", 24, 22)
    ok = rows and not failed and not missing and elapsed < 600
    record(3, bool(ok), f"even n <= 24 low-regime sweep: {len(rows)} triples, {len(failed)} failures, "
                        f"{len(missing)} unchecked, {elapsed:.1f}s (< 600s)")


def test_criterion_04_odd_sweep():
    rows, failed, missing, elapsed = _sweep("odd", 25, 25)
    record(4, bool(rows) and not failed and not missing,
           f"odd n <= 25 sweep: {len(rows)} triples, {len(failed)} failures, {len(missing)} unchecked")


def test_criterion_05_high_sweeps():
    parts = []
    ok = True
    for regime in ("high", "claim"):
        rows, failed, missing, _ = _sweep(regime, 24, 20)
        sandwich = [r for r in rows if r.n <= 20 and r.checks.get("count_upper_bound") is not True]
        ok = ok and bool(rows) and not failed and not missing and not sandwich
        parts.append(f"{regime}: {len(rows)} triples, {len(failed)} failures, {len(sandwich)} missing sandwiches")
    record(5, ok, "high-regime sweeps n <= 24 (" + "; ".join(parts) + ")")


def test_criterion_06_claim_sandwich():
    checked = bad = 0
    for n in range(3, 15):
        for d in range(n // 2 + 1, n):
            if (n * d) % 2:
                continue
            i = count_independent_sets(construct_claim_lb(n, d).graph)
            checked += 1
            if not 2 ** (n - d) <= i <= n * 2 ** (n - d):
                bad += 1
    record(6, checked > 0 and bad == 0, f"2^(n-d) <= i <= n 2^(n-d) for n <= 14: {checked} graphs, {bad} violations")


# --- 7 ----------------------------------------------------------------------


def test_criterion_07_circulant_alpha_bound():
    checked = bad = 0
    for m in range(1, 21):
        for r in range(m):
            for g in range(m + 1):
                spec = CirculantSpec(m, r, g)
                if spec.problems():
                    continue
                checked += 1
                if independence_number(build_circulant(spec)) > circulant_alpha_bound(spec):
                    bad += 1
    r125 = CirculantSpec(12, 5)
    exact, bound = independence_number(build_circulant(r125)), circulant_alpha_bound(r125)
    record(7, checked > 0 and bad == 0 and (exact, bound) == (3, 4),
           f"alpha(R(m,r,g)) <= bound on {checked} valid circulants (m <= 20), {bad} violations; "
           f"alpha(R(12,5)) = {exact} vs bound {bound}")


# --- 8 ----------------------------------------------------------------------


def test_criterion_08_monotonicity():
    bad = checked = 0
    for N in range(1, 201):
        for a in range(1, N + 1):
            for k in range(1, 6):
                checked += 1
                if not check_monotonicity(N, a, k).holds:
                    bad += 1
    tight = check_monotonicity(4, 4, 1)
    record(8, bad == 0 and tight.ratio == Fraction(3, 2),
           f"i(Z(N,a)) <= i(Z(N+k,a)) <= (3/2)^k i(Z(N,a)) for a <= N <= 200, k <= 5: "
           f"{checked} checks, {bad} violations; Z(4,4)->Z(5,4) ratio {tight.ratio}")


# --- 9 ----------------------------------------------------------------------


def test_criterion_09_rate_constants():
    start = time.perf_counter()
    n = 10 ** 6
    k13 = k_low(1 / 3).value
    comparator = 2 ** (sapozhenko_bound(3 * n, 10, n, 0) / (3 * n))
    gaps = {}
    for c in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 10)):
        rate = convergence_rate(n // 2, math.floor(c * n)) / n
        gaps[str(c)] = abs(rate - k_low(float(c)).log2_value)
    c_ind, c_deg = Fraction(1, 5), Fraction(3, 5)
    rate = convergence_rate(n - math.floor(c_deg * n), math.floor(c_ind * n)) / n
    gaps["(0.2,0.6)"] = abs(rate - k_high(0.2, 0.6).log2_value)
    elapsed = time.perf_counter() - start
    ok = (round(k13, 4) == 1.3480 and round(comparator, 4) == 1.3572
          and max(gaps.values()) <= 1e-4 and elapsed < 5)
    record(9, ok, f"k(1/3) = {k13:.4f}, comparator {comparator:.4f}, max gap at n = 1e6 "
                  f"{max(gaps.values()):.2e} (<= 1e-4), {elapsed:.2f}s (< 5s)")


# --- 10 ---------------------------------------------------------------------


def random_regular_bipartite(rng: random.Random, m: int, r: int) -> BipartiteGraph:
    """Cyclic-shift r-regular graph mixed by degree-preserving edge switches."""
    shifts = rng.sample(range(m), r)
    edges = {(i, (i + s) % m) for i in range(m) for s in shifts}
    lst = sorted(edges)
    for _ in range(10 * m * r):
        a, b = rng.randrange(len(lst)), rng.randrange(len(lst))
        (u1, v1), (u2, v2) = lst[a], lst[b]
        if u1 == u2 or v1 == v2 or (u1, v2) in edges or (u2, v1) in edges:
            continue
        edges -= {(u1, v1), (u2, v2)}
        edges |= {(u1, v2), (u2, v1)}
        lst[a], lst[b] = (u1, v2), (u2, v1)
    return BipartiteGraph.from_edges(m, m, edges)


def test_criterion_10_peeling():
    rng = random.Random(SEED + 10)
    bad = 0
    for _ in range(100):
        m = rng.randint(1, 32)
        r = rng.randint(1, min(8, m))
        b = random_regular_bipartite(rng, m, r)
        try:
            ms = peel_matchings(b, r)  # asserts every residual is regular
        except (AssertionError, ValueError):
            bad += 1
            continue
        union = {(u, v) for mt in ms for u, v in mt.items()}
        if len(ms) != r or any(len(mt) != m for mt in ms) or len(union) != m * r or union != set(b.edges()):
            bad += 1
    record(10, bad == 0, f"peeled r disjoint perfect matchings in 100 random r-regular bipartite graphs: {bad} failures")


# --- 11 ---------------------------------------------------------------------


def test_criterion_11_complete_bipartite():
    bad = [d for d in range(1, 13) if count_independent_sets(complete_bipartite(d, d)) != 2 ** (d + 1) - 1]
    record(11, not bad, f"i(K_(d,d)) = 2^(d+1) - 1 for d <= 12: mismatches at {bad}")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
            print(ACCEPTANCE_LINES[-1], flush=True)
    sys.exit(1 if failures else 0)
