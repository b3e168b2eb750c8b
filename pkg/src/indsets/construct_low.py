"""(n, d, alpha)-graphs with d <= n/2 that contain Z(floor(n/2), alpha) as an induced subgraph.

Labeling for even n: X = ``0..n/2-1`` and Y = ``n/2..n-1``.  Each side is a copy
of Z(n/2, alpha) on consecutive index blocks X_1..X_alpha and Y_1..Y_alpha.
With ``a`` the size of the majority clique (``n_a >= n_b``; for equal counts
``a`` is the smaller size) X lists its n_a a-cliques first and Y lists its n_b
b-cliques first, and X_i is completely joined to Y_i.  Only X-Y edges are ever
added afterwards, so Y (and X) stay induced copies of Z(n/2, alpha) and the
pairs X_i u Y_i give an alpha-clique cover.  Y is recorded as the witness.

For odd n the even graph on ``0..n-2`` is modified and vertex ``n-1`` is the apex.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .certificate import Certificate, ConstructionError
from .graph import make_graph
from .matching import BipartiteGraph, peel_matchings
from .zykov import zykov_profile


class LowCaseTag(str, Enum):
    DIVISIBLE = "DIVISIBLE"                        # alpha | n/2
    EQUAL_COUNTS = "EQUAL_COUNTS"                  # n_a = n_b
    BIG_MAJORITY = "BIG_MAJORITY"                  # n_a > n_b, b = a - 1
    SMALL_MAJORITY_GAP2 = "SMALL_MAJORITY_GAP2"    # n_a >= n_b + 2, b = a + 1
    SMALL_MAJORITY_GAP1 = "SMALL_MAJORITY_GAP1"    # n_a = n_b + 1, b = a + 1


@dataclass(frozen=True)
class LowLabels:
    """Case-local clique labels for Z(n/2, alpha)."""

    a: int
    b: int
    n_a: int
    n_b: int

    def x_sizes(self) -> list[int]:
        return [self.a] * self.n_a + [self.b] * self.n_b

    def y_sizes(self) -> list[int]:
        return [self.b] * self.n_b + [self.a] * self.n_a


def _check_even(n: int, alpha: int) -> None:
    if n < 2 or n % 2:
        raise ConstructionError("parity", f"n must be even and >= 2, got {n}")
    if not 2 <= alpha <= n // 2:
        raise ConstructionError("alpha out of range", f"need 2 <= alpha <= n/2, got alpha={alpha}, n={n}")


def low_labels(n: int, alpha: int) -> LowLabels:
    p = zykov_profile(n // 2, alpha)
    if p.large_count == 0:
        return LowLabels(p.small_size, p.small_size, alpha, 0)
    if p.small_count >= p.large_count:
        return LowLabels(p.small_size, p.large_size, p.small_count, p.large_count)
    return LowLabels(p.large_size, p.small_size, p.large_count, p.small_count)


def classify_case(n: int, alpha: int) -> LowCaseTag:
    _check_even(n, alpha)
    lab = low_labels(n, alpha)
    if lab.n_b == 0:
        return LowCaseTag.DIVISIBLE
    if lab.n_a == lab.n_b:
        return LowCaseTag.EQUAL_COUNTS
    if lab.b == lab.a - 1:
        return LowCaseTag.BIG_MAJORITY
    if lab.n_a >= lab.n_b + 2:
        return LowCaseTag.SMALL_MAJORITY_GAP2
    return LowCaseTag.SMALL_MAJORITY_GAP1


def case_degree_range(n: int, alpha: int) -> tuple[int, int]:
    """Exact d range of the single case theorem that applies to (n, alpha)."""
    tag = classify_case(n, alpha)
    lab = low_labels(n, alpha)
    h, a, b = n // 2, lab.a, lab.b
    if tag is LowCaseTag.DIVISIBLE:
        return n // alpha - 1, h + h // alpha - 1
    if tag in (LowCaseTag.EQUAL_COUNTS, LowCaseTag.SMALL_MAJORITY_GAP2):
        return a + b - 1, h + a - 1
    if tag is LowCaseTag.BIG_MAJORITY:
        return a + b, h + a - 2
    return a + b, h + b - 2


def degree_range_low(n: int, alpha: int) -> tuple[int, int]:
    """Combined range floor(n/2a) + ceil(n/2a) <= d <= n/2 + floor(n/2a) - 1, valid for every case."""
    _check_even(n, alpha)
    fl, ce = n // (2 * alpha), -(-n // (2 * alpha))
    return fl + ce, n // 2 + fl - 1


@dataclass(frozen=True)
class _EvenBuild:
    n: int
    d: int
    alpha: int
    tag: LowCaseTag
    x_blocks: list[list[int]]
    y_blocks: list[list[int]]
    g2_edges: list[tuple[int, int]]
    # peeled perfect matchings of G3 making up G4, as (x, y) global-index edge lists
    g4_matchings: list[list[tuple[int, int]]]


def _blocks(sizes: list[int], start: int) -> list[list[int]]:
    out, v = [], start
    for s in sizes:
        out.append(list(range(v, v + s)))
        v += s
    return out


def base_graph_low(n: int, alpha: int):
    """G1(n, alpha): two Z(n/2, alpha) copies with X_i completely joined to Y_i.

    Returns ``(graph, x_blocks, y_blocks)``.
    """
    _check_even(n, alpha)
    lab = low_labels(n, alpha)
    xb = _blocks(lab.x_sizes(), 0)
    yb = _blocks(lab.y_sizes(), n // 2)
    return make_graph(n, _g1_edges(xb, yb)), xb, yb


def _g1_edges(xb: list[list[int]], yb: list[list[int]]) -> list[tuple[int, int]]:
    edges = []
    for blk in xb + yb:
        edges += [(u, v) for i, u in enumerate(blk) for v in blk[i + 1:]]
    for xs, ys in zip(xb, yb):
        edges += [(x, y) for x in xs for y in ys]
    return edges


class _EdgeSet:
    """X-Y edge bookkeeping that refuses duplicates."""

    def __init__(self, edges=()):
        self.s: set[tuple[int, int]] = set()
        for e in edges:
            self.add(*e)

    def add(self, u: int, v: int) -> None:
        e = (min(u, v), max(u, v))
        if e in self.s:
            raise AssertionError(f"duplicate edge {e}")
        self.s.add(e)

    def __contains__(self, e) -> bool:
        u, v = e
        return (min(u, v), max(u, v)) in self.s


def _block_matching(xs: list[int], ys: list[int], avoid: list[_EdgeSet]) -> list[tuple[int, int]]:
    """Perfect matching between equal-size blocks using the smallest cyclic shift that avoids ``avoid``."""
    k = len(xs)
    if len(ys) != k:
        raise AssertionError(f"block sizes differ: {len(xs)} vs {len(ys)}")
    for s in range(k):
        m = [(xs[t], ys[(t + s) % k]) for t in range(k)]
        if not any(e in es for e in m for es in avoid):
            return m
    raise AssertionError("no cyclic-shift matching avoids the existing edges")


def _regularizers(tag: LowCaseTag, lab: LowLabels, xb, yb, g2: _EdgeSet, forb: _EdgeSet) -> None:
    """Add the case's G2 matchings to ``g2`` and forbidden edges F to ``forb`` (1-based clique indices)."""
    alpha, n_a, n_b = lab.n_a + lab.n_b, lab.n_a, lab.n_b
    X = lambda i: xb[i - 1]  # noqa: E731
    Y = lambda i: yb[i - 1]  # noqa: E731

    def g2_match(xs, ys):
        for e in _block_matching(xs, ys, [g2]):
            g2.add(*e)

    def f_match(xs, ys):
        for e in _block_matching(xs, ys, [g2, forb]):
            forb.add(*e)

    if tag is LowCaseTag.DIVISIBLE:
        return
    if tag is LowCaseTag.EQUAL_COUNTS:
        for i in range(1, n_b + 1):
            f_match(X(i + n_a), Y(i))
        return
    if tag is LowCaseTag.BIG_MAJORITY:
        for i in range(1, n_b + 1):
            g2_match(X(i), Y(alpha + 1 - i))
        for j in range(1, n_b + 1):
            g2_match(X(alpha + 1 - j), Y(j))
        for i in range(1, n_a + 1):
            f_match(X(i), Y(n_b + i))
        return
    if tag is LowCaseTag.SMALL_MAJORITY_GAP2:
        for i in range(n_b + 2, alpha - n_b + 1):
            g2_match(X(i), Y(i - 1))
        g2_match(X(n_b + 1), Y(alpha - n_b))
        for i in range(n_a + 1, alpha + 1):
            f_match(X(i), Y(i - n_a))
        return
    # SMALL_MAJORITY_GAP1
    for i in range(1, n_a - 1):
        g2_match(X(i), Y(alpha + 1 - i))
    for j in range(1, n_a - 1):
        g2_match(X(j + n_a + 1), Y(j))
    g2_match(X(n_a - 1), Y(n_a))
    g2_match(X(n_a), Y(n_a + 1))
    # split X_{n_a+1} and Y_{n_a-1} (both of size b = a+1): lowest index is the singleton
    xs_split, ys_split = X(n_a + 1), Y(n_a - 1)
    g2_match(X(n_a), ys_split[1:])
    g2_match(xs_split[1:], Y(n_a))
    g2.add(xs_split[0], ys_split[0])
    for i in range(n_a + 1, alpha + 1):
        f_match(X(i), Y(alpha + 1 - i))


def _g3_degree_and_base(tag: LowCaseTag, n: int, alpha: int, lab: LowLabels) -> tuple[int, int]:
    """(expected regularity of G3, degree of G2)."""
    h, a, b = n // 2, lab.a, lab.b
    if tag is LowCaseTag.DIVISIBLE:
        return h - h // alpha, n // alpha - 1
    if tag is LowCaseTag.EQUAL_COUNTS:
        return h - a - 1, a + b - 1
    if tag is LowCaseTag.BIG_MAJORITY:
        return h - a - 1, 2 * a - 1
    if tag is LowCaseTag.SMALL_MAJORITY_GAP2:
        return h - b, a + b - 1
    return h - a - 2, a + b


def _build_even(n: int, d: int, alpha: int) -> _EvenBuild:
    tag = classify_case(n, alpha)
    lo, hi = case_degree_range(n, alpha)
    if d < lo:
        raise ConstructionError("d below range", f"{tag.value} needs {lo} <= d <= {hi}, got d={d}")
    if d > hi:
        raise ConstructionError("d above range", f"{tag.value} needs {lo} <= d <= {hi}, got d={d}")
    lab = low_labels(n, alpha)
    h = n // 2
    _, xb, yb = base_graph_low(n, alpha)
    g1 = _g1_edges(xb, yb)
    g2 = _EdgeSet(g1)
    forb = _EdgeSet()
    _regularizers(tag, lab, xb, yb, g2, forb)

    g3_deg, base_deg = _g3_degree_and_base(tag, n, alpha, lab)
    deg = [0] * n
    for u, v in g2.s:
        deg[u] += 1
        deg[v] += 1
    if any(x != base_deg for x in deg):
        raise AssertionError(f"G2 is not {base_deg}-regular for (n, alpha) = ({n}, {alpha}), case {tag.value}")

    g3 = BipartiteGraph.from_edges(
        h, h, ((x, y - h) for x in range(h) for y in range(h, n) if (x, y) not in g2 and (x, y) not in forb)
    )
    if g3.regular_degree() != g3_deg:
        raise AssertionError(f"G3 is not {g3_deg}-regular for (n, alpha) = ({n}, {alpha}), case {tag.value}")
    d_extra = d - base_deg
    matchings = peel_matchings(g3, d_extra)
    g4 = [[(x, y + h) for x, y in sorted(m.items())] for m in matchings]
    return _EvenBuild(n, d, alpha, tag, xb, yb, sorted(g2.s), g4)


def construct_even(n: int, d: int, alpha: int) -> Certificate:
    """An (n, d, alpha)-graph, n even, containing Z(n/2, alpha) induced on Y."""
    bld = _build_even(n, d, alpha)
    edges = _EdgeSet(bld.g2_edges)
    for m in bld.g4_matchings:
        for e in m:
            edges.add(*e)
    g = make_graph(n, edges.s)
    return Certificate(
        graph=g, n=n, d=d, alpha=alpha, regime="low-even", case=bld.tag.value,
        zykov_witness=tuple(v for blk in bld.y_blocks for v in blk),
        zykov_target=(n // 2, alpha),
        clique_partition=tuple(tuple(xs + ys) for xs, ys in zip(bld.x_blocks, bld.y_blocks)),
        extra={"x_blocks": bld.x_blocks, "y_blocks": bld.y_blocks, "added_degree": len(bld.g4_matchings)},
    )


def degree_range_odd(n: int, alpha: int) -> tuple[int, int]:
    """2(floor(m/2a) + ceil(m/2a)) <= d <= m/2 + floor(m/2a) - 1 with m = n - 1 (d must also be even)."""
    if n < 3 or n % 2 == 0:
        raise ConstructionError("parity", f"n must be odd and >= 3, got {n}")
    m = n - 1
    if not 2 <= alpha <= m // 2:
        raise ConstructionError("alpha out of range", f"need 2 <= alpha <= (n-1)/2, got alpha={alpha}, n={n}")
    fl, ce = m // (2 * alpha), -(-m // (2 * alpha))
    return 2 * (fl + ce), m // 2 + fl - 1


def construct_odd(n: int, d: int, alpha: int) -> Certificate:
    """An (n, d, alpha)-graph, n odd, d even: the (n-1)-vertex graph plus an apex vertex ``n-1``.

    Removes a matching E of d/2 added X-Y edges that covers every vertex of
    X_1 u Y_1, then joins the apex to the d endpoints of E.
    """
    lo, hi = degree_range_odd(n, alpha)
    if d % 2:
        raise ConstructionError("parity", f"d must be even for odd n, got d={d}")
    if d < lo:
        raise ConstructionError("d below range", f"needs {lo} <= d <= {hi}, got d={d}")
    if d > hi:
        raise ConstructionError("d above range", f"needs {lo} <= d <= {hi}, got d={d}")
    bld = _build_even(n - 1, d, alpha)
    if not bld.g4_matchings:
        raise ConstructionError("no saturating matching", "the added regular subgraph is empty")
    first = bld.g4_matchings[0]
    cover = set(bld.x_blocks[0]) | set(bld.y_blocks[0])
    chosen = [e for e in first if e[0] in cover or e[1] in cover]
    if len(chosen) != len(cover) or len(chosen) > d // 2:
        raise ConstructionError(
            "no saturating matching",
            f"perfect matching gives {len(chosen)} edges on X_1 u Y_1 ({len(cover)} vertices), budget {d // 2}",
        )
    chosen += [e for e in first if e not in chosen][: d // 2 - len(chosen)]
    removed = set(chosen)
    edges = _EdgeSet(bld.g2_edges)
    for m in bld.g4_matchings:
        for e in m:
            if e not in removed:
                edges.add(*e)
    apex = n - 1
    for u, v in chosen:
        edges.add(u, apex)
        edges.add(v, apex)
    g = make_graph(n, edges.s)
    parts = [xs + ys for xs, ys in zip(bld.x_blocks, bld.y_blocks)]
    parts[0] = parts[0] + [apex]
    return Certificate(
        graph=g, n=n, d=d, alpha=alpha, regime="low-odd", case=bld.tag.value,
        zykov_witness=tuple(v for blk in bld.y_blocks for v in blk),
        zykov_target=((n - 1) // 2, alpha),
        clique_partition=tuple(tuple(p) for p in parts),
        extra={
            "x_blocks": bld.x_blocks, "y_blocks": bld.y_blocks,
            "removed_edges": [list(e) for e in sorted(chosen)], "apex": apex,
        },
    )
