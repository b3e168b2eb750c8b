"""Zykov graphs Z(N, alpha) and the exponential rate constants built from them.

Z(N, alpha) is the disjoint union of alpha cliques whose sizes differ by at most
one.  Its independent sets pick at most one vertex per clique, so
``i(Z) = prod(size + 1)`` and its independence polynomial is
``prod(1 + size * x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, make_graph

INTEGRALITY_RTOL = 1e-9


@dataclass(frozen=True)
class CliqueProfile:
    """Canonical clique sizes of Z(N, alpha): ``small_count`` cliques of ``small_size``
    followed by ``large_count`` cliques of ``large_size`` (``large_size`` is
    ``small_size + 1``, or equal to it when alpha divides N and ``large_count`` is 0)."""

    small_size: int
    large_size: int
    small_count: int
    large_count: int

    @property
    def alpha(self) -> int:
        return self.small_count + self.large_count

    @property
    def order(self) -> int:
        return self.small_size * self.small_count + self.large_size * self.large_count

    def sizes(self) -> list[int]:
        """Clique sizes in build order (small cliques first)."""
        return [self.small_size] * self.small_count + [self.large_size] * self.large_count


def _check(N: int, alpha: int) -> None:
    if not (1 <= alpha <= N):
        raise ValueError(f"need 1 <= alpha <= N, got N={N}, alpha={alpha}")


def zykov_profile(N: int, alpha: int) -> CliqueProfile:
    _check(N, alpha)
    q, r = divmod(N, alpha)
    if r == 0:
        return CliqueProfile(q, q, alpha, 0)
    # alpha*ceil(N/alpha) - N cliques of size floor, N - alpha*floor cliques of size ceil
    return CliqueProfile(q, q + 1, alpha - r, r)


def clique_blocks(profile: CliqueProfile, start: int = 0) -> list[list[int]]:
    """Consecutive index blocks realising ``profile`` from ``start``."""
    blocks = []
    v = start
    for s in profile.sizes():
        blocks.append(list(range(v, v + s)))
        v += s
    return blocks


def build_zykov(N: int, alpha: int) -> Graph:
    blocks = clique_blocks(zykov_profile(N, alpha))
    return make_graph(N, [(u, v) for b in blocks for i, u in enumerate(b) for v in b[i + 1:]])


def count_zykov(N: int, alpha: int) -> int:
    p = zykov_profile(N, alpha)
    return (p.small_size + 1) ** p.small_count * (p.large_size + 1) ** p.large_count


def zykov_polynomial(N: int, alpha: int) -> tuple[int, ...]:
    p = zykov_profile(N, alpha)
    coeffs = [1]
    for s in p.sizes():
        nxt = coeffs + [0]
        for t, c in enumerate(coeffs):
            nxt[t + 1] += s * c
        coeffs = nxt
    return tuple(coeffs)


def log2_count_zykov(N: int, alpha: int) -> float:
    """log2 i(Z(N, alpha)) straight from the clique profile, no big integers."""
    p = zykov_profile(N, alpha)
    return p.small_count * math.log2(p.small_size + 1) + p.large_count * math.log2(p.large_size + 1)


def convergence_rate(N: int, alpha: int) -> float:
    """log2 i(Z(N, alpha)); divide by the host graph's n to compare against log2 of a rate constant."""
    return log2_count_zykov(N, alpha)


# --- rate constants ----------------------------------------------------------


@dataclass(frozen=True)
class RateConstant:
    log2_value: float
    c_ind: float
    c_deg: float | None = None

    @property
    def value(self) -> float:
        return 2.0 ** self.log2_value


def _near_integer(x: float) -> int | None:
    k = round(x)
    if k >= 1 and abs(x - k) <= INTEGRALITY_RTOL * max(1.0, abs(x)):
        return k
    return None


def _two_case_log2(c: float, ratio: float, width: float) -> float:
    """log2 of the two-case rate formula.

    ``ratio`` is clique size per unit of alpha (1/(2c) or (1-c_deg)/c) and
    ``width`` the normalised number of vertices the cliques cover (1/2 or 1-c_deg).
    Integer ratio: (1+ratio)^c.  Otherwise the floor-size cliques get exponent
    c*ceil - width and the ceil-size cliques exponent width - c*floor.
    """
    k = _near_integer(ratio)
    if k is not None:
        return c * math.log2(1 + k)
    return mixed_branch_log2(c, math.floor(ratio), math.ceil(ratio), width)


def mixed_branch_log2(c: float, lo: int, hi: int, width: float) -> float:
    """The non-integer branch with explicit floor/ceil values ``lo``, ``hi``."""
    return (c * hi - width) * math.log2(1 + lo) + (width - c * lo) * math.log2(1 + hi)


def k_low(c_ind: float) -> RateConstant:
    """Growth base of the maximum independent-set count when alpha ~ c_ind * n and d <= n/2."""
    if not (0 < c_ind <= 0.5):
        raise ValueError(f"c_ind must lie in (0, 1/2], got {c_ind}")
    return RateConstant(_two_case_log2(c_ind, 1 / (2 * c_ind), 0.5), c_ind)


def k_high(c_ind: float, c_deg: float) -> RateConstant:
    """Growth base when alpha ~ c_ind * n and d ~ c_deg * n with c_deg >= 1/2."""
    if not (0.5 <= c_deg < 1):
        raise ValueError(f"c_deg must lie in [1/2, 1), got {c_deg}")
    if not (0 < c_ind <= 1 - c_deg + INTEGRALITY_RTOL):
        raise ValueError(f"c_ind must lie in (0, 1 - c_deg], got {c_ind}")
    width = 1 - c_deg
    return RateConstant(_two_case_log2(c_ind, width / c_ind, width), c_ind, c_deg)


# --- monotonicity ------------------------------------------------------------


@dataclass(frozen=True)
class MonotonicityReport:
    N: int
    alpha: int
    k: int
    base_count: int
    grown_count: int
    lower_holds: bool
    upper_holds: bool
    ratio: Fraction

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds


def check_monotonicity(N: int, alpha: int, k: int) -> MonotonicityReport:
    """Exact check of i(Z(N,a)) <= i(Z(N+k,a)) <= (3/2)^k i(Z(N,a))."""
    _check(N, alpha)
    if k < 1:
        raise ValueError("k must be a positive integer")
    base = count_zykov(N, alpha)
    grown = count_zykov(N + k, alpha)
    return MonotonicityReport(
        N, alpha, k, base, grown,
        lower_holds=base <= grown,
        upper_holds=grown * 2 ** k <= 3 ** k * base,
        ratio=Fraction(grown, base),
    )
