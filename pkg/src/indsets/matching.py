"""Bipartite perfect matchings (Hopcroft-Karp) and regular-subgraph peeling.

All scans run in ascending vertex order so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class BipartiteGraph:
    """Left vertices ``0..n_left-1``, right vertices ``0..n_right-1``; ``adj[u]`` lists
    the right neighbours of left vertex ``u``."""

    n_left: int
    n_right: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n_left:
            raise ValueError("adjacency length must equal n_left")
        for u, nbrs in enumerate(self.adj):
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"duplicate edge at left vertex {u}")
            if any(not 0 <= v < self.n_right for v in nbrs):
                raise ValueError(f"right endpoint out of range at left vertex {u}")

    @classmethod
    def from_edges(cls, n_left: int, n_right: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        adj: list[set[int]] = [set() for _ in range(n_left)]
        for u, v in edges:
            if not (0 <= u < n_left and 0 <= v < n_right):
                raise ValueError(f"edge {(u, v)} out of range")
            adj[u].add(v)
        return cls(n_left, n_right, tuple(tuple(sorted(a)) for a in adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n_left) for v in self.adj[u]]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj)

    def left_degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def right_degrees(self) -> list[int]:
        deg = [0] * self.n_right
        for a in self.adj:
            for v in a:
                deg[v] += 1
        return deg

    def regular_degree(self) -> int | None:
        """Common degree when every vertex on both sides has it, else None."""
        degs = set(self.left_degrees()) | set(self.right_degrees())
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None


class NoPerfectMatching(ValueError):
    """No perfect matching exists; ``witness`` is a left set whose neighbourhood is smaller."""

    def __init__(self, witness: frozenset[int], neighbourhood: frozenset[int]):
        self.witness = witness
        self.neighbourhood = neighbourhood
        super().__init__(
            f"Hall violation: {len(witness)} left vertices {sorted(witness)} "
            f"see only {len(neighbourhood)} right vertices {sorted(neighbourhood)}"
        )


_INF = float("inf")


def maximum_matching(b: BipartiteGraph) -> dict[int, int]:
    """Hopcroft-Karp maximum matching as a left -> right dict."""
    match_l: list[int] = [-1] * b.n_left
    match_r: list[int] = [-1] * b.n_right
    dist: list[float] = [_INF] * b.n_left

    def bfs() -> bool:
        q: deque[int] = deque()
        for u in range(b.n_left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = _INF
        found = False
        while q:
            u = q.popleft()
            for v in b.adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; lexicographic neighbour order
        stack = [(root, 0)]
        path: list[tuple[int, int]] = []
        while stack:
            u, i = stack[-1]
            nbrs = b.adj[u]
            advanced = False
            while i < len(nbrs):
                v = nbrs[i]
                i += 1
                w = match_r[v]
                if w == -1:
                    path.append((u, v))
                    for pu, pv in path:
                        match_l[pu] = pv
                        match_r[pv] = pu
                    return True
                if dist[w] == dist[u] + 1:
                    stack[-1] = (u, i)
                    path.append((u, v))
                    stack.append((w, 0))
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in range(b.n_left):
            if match_l[u] == -1:
                dfs(u)
    return {u: v for u, v in enumerate(match_l) if v != -1}


def hall_witness(b: BipartiteGraph, matching: dict[int, int]) -> tuple[frozenset[int], frozenset[int]]:
    """Left vertices reachable by alternating paths from unmatched left vertices, and their neighbourhood.

    For a maximum matching that misses some left vertex, the left set is strictly
    larger than its neighbourhood (Konig-Hall).
    """
    match_r = {v: u for u, v in matching.items()}
    seen_l = {u for u in range(b.n_left) if u not in matching}
    seen_r: set[int] = set()
    q = deque(sorted(seen_l))
    while q:
        u = q.popleft()
        for v in b.adj[u]:
            if v not in seen_r:
                seen_r.add(v)
                w = match_r.get(v)
                if w is not None and w not in seen_l:
                    seen_l.add(w)
                    q.append(w)
    return frozenset(seen_l), frozenset(seen_r)


def perfect_matching(b: BipartiteGraph) -> dict[int, int]:
    """A perfect matching (left -> right); raises NoPerfectMatching with a Hall witness otherwise."""
    m = maximum_matching(b)
    if len(m) == b.n_left == b.n_right:
        return m
    if len(m) < b.n_left:
        raise NoPerfectMatching(*hall_witness(b, m))
    # left side saturated but right side larger: witness on the swapped graph
    swapped = BipartiteGraph.from_edges(b.n_right, b.n_left, ((v, u) for u, v in b.edges()))
    raise NoPerfectMatching(*hall_witness(swapped, {v: u for u, v in m.items()}))


def remove_matching(b: BipartiteGraph, matching: dict[int, int]) -> BipartiteGraph:
    return BipartiteGraph(
        b.n_left, b.n_right,
        tuple(tuple(v for v in b.adj[u] if matching.get(u) != v) for u in range(b.n_left)),
    )


def peel_matchings(b: BipartiteGraph, count: int) -> list[dict[int, int]]:
    """Remove ``count`` successive perfect matchings from a regular bipartite graph.

    The residual after step i is asserted to be (r - i)-regular.
    """
    r = b.regular_degree()
    if r is None or b.n_left != b.n_right:
        raise ValueError("peeling needs a regular bipartite graph with equal parts")
    if not 0 <= count <= r:
        raise ValueError(f"cannot peel {count} matchings from a {r}-regular graph")
    out = []
    residual = b
    for i in range(count):
        m = perfect_matching(residual)
        out.append(m)
        residual = remove_matching(residual, m)
        got = residual.regular_degree()
        assert got == r - i - 1 or (b.n_left == 0), f"residual not {r - i - 1}-regular after peel {i + 1}"
    return out


def regular_subgraph(b: BipartiteGraph, degree: int) -> BipartiteGraph:
    """A ``degree``-regular spanning subgraph: the union of ``degree`` peeled perfect matchings."""
    matchings = peel_matchings(b, degree)
    return BipartiteGraph.from_edges(
        b.n_left, b.n_right, ((u, v) for m in matchings for u, v in m.items())
    )
