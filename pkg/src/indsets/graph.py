"""Immutable simple graphs on dense integer vertices, plus graph6 I/O.

Vertices are ``0..n-1``.  Every graph carries its adjacency twice: as a tuple of
frozensets (convenient for iteration) and as a tuple of int bitmasks (used by the
counting kernels).  Graphs are never mutated after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, self-loops, bad graph6)."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            m = 0
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "masks", tuple(masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adjacency[v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices from unordered pairs; duplicates are merged."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def empty_graph(n: int) -> Graph:
    return make_graph(n, ())


def complete_graph(n: int) -> Graph:
    return make_graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return make_graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(p: int, q: int) -> Graph:
    return make_graph(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def regular_degree(g: Graph) -> int | None:
    """Common degree if ``g`` is regular, else None.  The empty graph on 0 vertices is 0-regular."""
    if g.n == 0:
        return 0
    d = g.degree(0)
    if all(len(a) == d for a in g.adjacency):
        return d
    return None


def _check_vertex_set(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise GraphError(f"vertex set not contained in [0, {g.n})")
    return vs


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in ascending original order."""
    vs = _check_vertex_set(g, vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u in vs for v in g.adjacency[u] if v in index and u < v]
    return make_graph(len(vs), edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return make_graph(g.n + h.n, g.edges() + [(u + off, v + off) for u, v in h.edges()])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts; ``h`` is relabelled after ``g``."""
    off = g.n
    cross = [(u, off + v) for u in range(g.n) for v in range(h.n)]
    return make_graph(g.n + h.n, g.edges() + [(u + off, v + off) for u, v in h.edges()] + cross)


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    return make_graph(g.n, g.edges() + [tuple(e) for e in edges])


def remove_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    drop = {frozenset(e) for e in edges}
    return make_graph(g.n, [e for e in g.edges() if frozenset(e) not in drop])


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


# --- graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n < 1 << 36:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise GraphError("graph too large for graph6")


def graph6_encode(g: Graph) -> str:
    """graph6 string for ``g`` (no header, no trailing newline)."""
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(c + 63) for c in _encode_size(g.n) + chunks)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise GraphError("graph6 character outside the printable range 63..126")
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} chars, expected {(nbits + 5) // 6}")
    bits = [(c >> s) & 1 for c in body for s in range(5, -1, -1)]
    if any(bits[nbits:]):
        raise GraphError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def edgelist_encode(g: Graph) -> str:
    """Human-readable ``u v`` per line, preceded by an ``n <count>`` line."""
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edgelist_decode(text: str) -> Graph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"bad edge line {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return make_graph(n, edges)
