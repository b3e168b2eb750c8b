"""Exact independent-set counting.

The fast path is the deletion recursion ``i(G) = i(G - v) + i(G - N[v])`` with a
maximum-degree pivot, connected-component factorisation and a memo keyed on the
bitmask of remaining vertices.  ``brute_force_count`` is an independent
exhaustive oracle used only for cross-checking.
"""

from __future__ import annotations

import sys

import numpy as np

from .graph import Graph

BRUTE_FORCE_CAP = 26
DEFAULT_MEMORY_BUDGET = 1 << 30
# rough per-entry cost of a dict slot holding an int key and an int/list value
_BYTES_PER_MEMO_ENTRY = 200


class _Memo:
    """Bounded memo: once the entry budget is hit the table is cleared and refilled."""

    def __init__(self, memory_budget: int):
        self.max_entries = max(1024, memory_budget // _BYTES_PER_MEMO_ENTRY)
        self.table: dict[int, object] = {}

    def get(self, key: int):
        return self.table.get(key)

    def put(self, key: int, value) -> None:
        if len(self.table) >= self.max_entries:
            self.table.clear()
        self.table[key] = value


def _components(masks: tuple[int, ...], vertices: int) -> list[int]:
    comps = []
    rest = vertices
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _pivot(masks: tuple[int, ...], vertices: int) -> tuple[int, int]:
    """Max-degree vertex inside ``vertices`` (lowest index on ties) and its degree."""
    best_v, best_d = -1, -1
    rest = vertices
    while rest:
        b = rest & -rest
        rest ^= b
        v = b.bit_length() - 1
        d = (masks[v] & vertices).bit_count()
        if d > best_d:
            best_v, best_d = v, d
    return best_v, best_d


def count_independent_sets(g: Graph, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> int:
    """Number of independent sets of ``g``, the empty set included."""
    masks = g.masks
    memo = _Memo(memory_budget)

    def count(vertices: int) -> int:
        if vertices == 0:
            return 1
        hit = memo.get(vertices)
        if hit is not None:
            return hit
        comps = _components(masks, vertices)
        if len(comps) > 1:
            result = 1
            for c in comps:
                result *= count(c)
        else:
            v, deg = _pivot(masks, vertices)
            if deg == 0:
                result = 2
            elif deg == vertices.bit_count() - 1:
                # v dominates its component: every vertex is adjacent to v
                result = count(vertices & ~(1 << v)) + 1
            else:
                result = count(vertices & ~(1 << v)) + count(vertices & ~(masks[v] | (1 << v)))
        memo.put(vertices, result)
        return result

    return _with_recursion_room(g.n, count, (1 << g.n) - 1)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add_shifted(p: list[int], q: list[int]) -> list[int]:
    """p(x) + x * q(x)."""
    out = list(p) + [0] * max(0, len(q) + 1 - len(p))
    for j, b in enumerate(q):
        out[j + 1] += b
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def independence_polynomial(g: Graph, memory_budget: int = DEFAULT_MEMORY_BUDGET) -> tuple[int, ...]:
    """Coefficients ``(i_0, i_1, ..., i_alpha)`` where ``i_t`` counts independent sets of size t."""
    masks = g.masks
    memo = _Memo(memory_budget)

    def poly(vertices: int) -> list[int]:
        if vertices == 0:
            return [1]
        hit = memo.get(vertices)
        if hit is not None:
            return hit
        comps = _components(masks, vertices)
        if len(comps) > 1:
            result = [1]
            for c in comps:
                result = _poly_mul(result, poly(c))
        else:
            v, deg = _pivot(masks, vertices)
            if deg == 0:
                result = [1, 1]
            else:
                result = _poly_add_shifted(
                    poly(vertices & ~(1 << v)),
                    poly(vertices & ~(masks[v] | (1 << v))),
                )
        memo.put(vertices, result)
        return result

    return tuple(_with_recursion_room(g.n, poly, (1 << g.n) - 1))


def independence_number(g: Graph) -> int:
    """Exact alpha(G) by branch and bound.

    Candidates are bounded above by a greedy partition into cliques of G (a
    colouring of the complement); branches that cannot beat the incumbent are cut.
    """
    masks = g.masks
    best = 0

    def clique_cover_order(cand: int) -> list[tuple[int, int]]:
        # Greedy clique partition; returns (vertex, class number) in class order.
        order = []
        rest = cand
        k = 0
        while rest:
            k += 1
            q = rest
            while q:
                b = q & -q
                v = b.bit_length() - 1
                rest &= ~b
                q &= masks[v] & ~b
                order.append((v, k))
        return order

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order = clique_cover_order(cand)
        for v, k in reversed(order):
            if size + k <= best:
                return
            nsize = size + 1
            ncand = cand & ~(masks[v] | (1 << v))
            if ncand:
                expand(nsize, ncand)
            elif nsize > best:
                best = nsize
            cand &= ~(1 << v)

    if g.n:
        _with_recursion_room(g.n, expand, 0, (1 << g.n) - 1)
    return best


def _with_recursion_room(depth: int, fn, *args):
    need = 4 * depth + 200
    old = sys.getrecursionlimit()
    if old < need:
        sys.setrecursionlimit(need)
    try:
        return fn(*args)
    finally:
        if old < need:
            sys.setrecursionlimit(old)


def brute_force_count(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exhaustive subset scan: ``(i(G), polynomial)``.  Independent of the recursion above.

    Builds a flag array over all 2^n subsets by doubling: adding vertex v to a
    subset S of lower vertices keeps it independent iff S avoids N(v).
    """
    n = g.n
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_CAP}, got {n}")
    indep = np.ones(1, dtype=bool)
    size = np.zeros(1, dtype=np.int8)
    for v in range(n):
        lower = g.masks[v] & ((1 << v) - 1)
        subsets = np.arange(1 << v, dtype=np.uint32)
        ok = indep & ((subsets & np.uint32(lower)) == 0)
        indep = np.concatenate([indep, ok])
        size = np.concatenate([size, size + 1])
    poly = np.bincount(size[indep].astype(np.int64), minlength=1)
    coeffs = [int(c) for c in poly]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return int(indep.sum()), tuple(coeffs)
