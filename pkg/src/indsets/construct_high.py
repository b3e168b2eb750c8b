"""(n, d, alpha)-graphs with d >= n/2 containing Z(n-d, alpha), circulant fillers, and the
(2d-n)-regular join construction.

Labeling for the base graph: X = ``0..n-d-1``, W = ``n-d..d-1`` (|W| = 2d-n),
Y = ``d..n-1``.  X and Y are copies of Z(n-d, alpha) with small cliques first;
X_i and Y_i are joined by the identity matching and X_i, Y_j (i != j) are
completely joined.  With this order X u W is exactly ``0..d-1``, which is the
cyclic order used for the circulant overlay in ``construct_high_general``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certificate import Certificate, ConstructionError
from .graph import Graph, empty_graph, join, make_graph
from .zykov import clique_blocks, zykov_profile


def _ceil_div(p: int, q: int) -> int:
    return -(-p // q)


@dataclass(frozen=True)
class CirculantSpec:
    """R(m, r, g): ``m`` vertices on a cycle, degree ``r``, skipping the ``g`` nearest on each side."""

    m: int
    r: int
    g: int = 0

    def problems(self) -> list[str]:
        out = []
        if self.m < 0 or self.r < 0 or self.g < 0:
            out.append("m, r, g must be nonnegative")
        elif self.r > 0:
            if self.r % 2 and self.m % 2:
                out.append("odd r needs even m")
            # offsets g+1..g+floor(r/2) and their negatives (and m/2 for odd r) must be distinct mod m
            if 2 * (self.g + self.r // 2) >= self.m:
                out.append(f"need 2(g + floor(r/2)) < m, got g={self.g}, r={self.r}, m={self.m}")
        return out

    def validate(self) -> None:
        bad = self.problems()
        if bad:
            raise ConstructionError("invalid circulant", "; ".join(bad))


def circulant_edges(spec: CirculantSpec, labels: list[int] | None = None) -> list[tuple[int, int]]:
    spec.validate()
    m, r, g = spec.m, spec.r, spec.g
    lab = list(range(m)) if labels is None else labels
    offsets = list(range(g + 1, g + r // 2 + 1))
    edges = set()
    for i in range(m):
        for off in offsets:
            j = (i + off) % m
            edges.add((min(lab[i], lab[j]), max(lab[i], lab[j])))
        if r % 2:
            j = (i + m // 2) % m
            edges.add((min(lab[i], lab[j]), max(lab[i], lab[j])))
    return sorted(edges)


def build_circulant(spec: CirculantSpec) -> Graph:
    return make_graph(spec.m, circulant_edges(spec))


def circulant_alpha_bound(spec: CirculantSpec) -> int:
    """Upper bound (g+1) * ceil(m / (g + 1 + floor(r/2))) on alpha(R(m, r, g))."""
    spec.validate()
    return (spec.g + 1) * _ceil_div(spec.m, spec.g + 1 + spec.r // 2)


# --- base graph --------------------------------------------------------------


@dataclass(frozen=True)
class HighLayout:
    n: int
    d: int
    alpha: int
    x_blocks: list[list[int]]
    y_blocks: list[list[int]]
    w: list[int]


def _check_high(n: int, d: int, alpha: int) -> None:
    if not (n <= 2 * d and d < n):
        raise ConstructionError("d out of range", f"need n/2 <= d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise ConstructionError("parity", f"n*d must be even, got n={n}, d={d}")
    if not 2 <= alpha <= n - d:
        raise ConstructionError("alpha out of range", f"need 2 <= alpha <= n-d = {n - d}, got {alpha}")


def base_graph_high(n: int, d: int, alpha: int) -> tuple[Graph, HighLayout]:
    """G1(n, d, alpha): X u Y induces an (n-d)-regular graph of independence number alpha; W edgeless."""
    _check_high(n, d, alpha)
    graph, layout = _base(n, d, alpha)
    return graph, layout


def _base(n: int, d: int, alpha: int) -> tuple[Graph, HighLayout]:
    prof = zykov_profile(n - d, alpha)
    xb = clique_blocks(prof, 0)
    yb = clique_blocks(prof, d)
    w = list(range(n - d, d))
    return make_graph(n, _base_edges(xb, yb)), HighLayout(n, d, alpha, xb, yb, w)


def _base_edges(xb: list[list[int]], yb: list[list[int]]) -> list[tuple[int, int]]:
    edges = []
    for blk in xb + yb:
        edges += [(u, v) for i, u in enumerate(blk) for v in blk[i + 1:]]
    for i, xs in enumerate(xb):
        for j, ys in enumerate(yb):
            if i == j:
                edges += list(zip(xs, ys))
            else:
                edges += [(x, y) for x in xs for y in ys]
    return edges


def _no_duplicates(*edge_lists: list[tuple[int, int]]) -> list[tuple[int, int]]:
    seen: set[tuple[int, int]] = set()
    for lst in edge_lists:
        for u, v in lst:
            e = (min(u, v), max(u, v))
            if e in seen:
                raise AssertionError(f"duplicate edge {e}")
            seen.add(e)
    return sorted(seen)


# --- constructions -----------------------------------------------------------


def dense_condition(n: int, d: int) -> int:
    """Smallest alpha allowed for the dense construction: ceil((2d-n) / (1 + floor((3d-2n)/2)))."""
    return _ceil_div(2 * d - n, 1 + (3 * d - 2 * n) // 2)


def construct_high_dense(n: int, d: int, alpha: int) -> Certificate:
    """Base graph + R(2d-n, 3d-2n) on W + W completely joined to X u Y (requires 3d >= 2n)."""
    _check_high(n, d, alpha)
    if 3 * d < 2 * n:
        raise ConstructionError("d below range", f"dense construction needs d >= 2n/3, got n={n}, d={d}")
    need = dense_condition(n, d)
    if alpha < need:
        raise ConstructionError("condition failed", f"W's circulant needs alpha >= {need}, got {alpha}")
    _, lay = _base(n, d, alpha)
    spec = CirculantSpec(2 * d - n, 3 * d - 2 * n)
    w_edges = circulant_edges(spec, lay.w)
    xy = [v for blk in lay.x_blocks + lay.y_blocks for v in blk]
    cross = [(u, w) for u in xy for w in lay.w]
    edges = _no_duplicates(_base_edges(lay.x_blocks, lay.y_blocks), w_edges, cross)
    return Certificate(
        graph=make_graph(n, edges), n=n, d=d, alpha=alpha, regime="high-dense", case="DENSE",
        zykov_witness=tuple(v for blk in lay.x_blocks for v in blk),
        zykov_target=(n - d, alpha),
        extra={
            "x_blocks": lay.x_blocks, "y_blocks": lay.y_blocks, "w": lay.w,
            "circulant": [spec.m, spec.r, spec.g], "w_alpha_bound": circulant_alpha_bound(spec),
        },
    )


def general_conditions(n: int, d: int, alpha: int) -> tuple[bool, bool]:
    """(circulant exists, circulant alpha bound <= alpha) for the general construction."""
    g = _ceil_div(n - d, alpha)
    half = (2 * d - n) // 2
    exists = 2 * (g + half) <= d - 2
    bounded = (g + 1) * _ceil_div(d, g + 1 + half) <= alpha
    return exists, bounded


def construct_high_general(n: int, d: int, alpha: int) -> Certificate:
    """Base graph + Y completely joined to W + R(d, 2d-n, ceil((n-d)/alpha)) on X u W = ``0..d-1``."""
    _check_high(n, d, alpha)
    exists, bounded = general_conditions(n, d, alpha)
    if not exists:
        raise ConstructionError("condition failed", "ceil((n-d)/alpha) + floor((2d-n)/2) > d/2 - 1")
    if not bounded:
        raise ConstructionError("condition failed", "circulant alpha bound on X u W exceeds alpha")
    _, lay = _base(n, d, alpha)
    spec = CirculantSpec(d, 2 * d - n, _ceil_div(n - d, alpha))
    overlay = circulant_edges(spec)
    yw = [(y, w) for blk in lay.y_blocks for y in blk for w in lay.w]
    edges = _no_duplicates(_base_edges(lay.x_blocks, lay.y_blocks), yw, overlay)
    return Certificate(
        graph=make_graph(n, edges), n=n, d=d, alpha=alpha, regime="high-general", case="GENERAL",
        zykov_witness=tuple(v for blk in lay.y_blocks for v in blk),
        zykov_target=(n - d, alpha),
        extra={
            "x_blocks": lay.x_blocks, "y_blocks": lay.y_blocks, "w": lay.w,
            "circulant": [spec.m, spec.r, spec.g], "xw_alpha_bound": circulant_alpha_bound(spec),
        },
    )


def construct_claim_lb(n: int, d: int) -> Certificate:
    """E_{n-d} joined to R(d, 2d-n): d-regular with an independent set of size n-d (n/2 < d < n)."""
    if not (n < 2 * d and d < n):
        raise ConstructionError("d out of range", f"need n/2 < d < n, got n={n}, d={d}")
    if (n * d) % 2:
        raise ConstructionError("parity", f"n*d must be even, got n={n}, d={d}")
    spec = CirculantSpec(d, 2 * d - n)
    g = join(empty_graph(n - d), build_circulant(spec))
    return Certificate(
        graph=g, n=n, d=d, alpha=n - d, regime="claim", case="CLAIM",
        zykov_witness=tuple(range(n - d)),
        zykov_target=(n - d, n - d),
        extra={"circulant": [spec.m, spec.r, spec.g]},
    )
