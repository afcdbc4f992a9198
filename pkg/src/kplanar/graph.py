"""Simple undirected graphs with girth, short-cycle and density queries."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    ``edges`` keeps the insertion order and doubles as the edge-id table;
    ``adjacency`` holds sorted neighbour tuples.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Optional[str], ...] = ()
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            norm.append((u, v))
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(s)) for s in nbrs))
        if self.labels and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels=()) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges), tuple(labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adjacency[u]
        i = _bisect(nb, v)
        return i < len(nb) and nb[i] == v

    def label(self, v: int) -> Optional[str]:
        return self.labels[v] if self.labels else None

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = tuple(self.labels[v] for v in keep) if self.labels else ()
        return Graph.from_edges(len(keep), edges, labels)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def _bisect(seq, x):
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


def girth(g: Graph) -> float:
    """Length of a shortest cycle (``math.inf`` for forests).

    One BFS per root; every non-tree edge (u, w) closes a closed walk of
    length dist(u) + dist(w) + 1 through the root, and the minimum over all
    roots is the girth.
    """
    best = math.inf
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def brute_force_girth(g: Graph) -> float:
    """Girth by exhaustive simple-cycle search; exponential, for small oracles only."""
    best = math.inf
    adj = g.adjacency

    def extend(start, path, on_path):
        nonlocal best
        u = path[-1]
        for w in adj[u]:
            if w == start and len(path) >= 3:
                best = min(best, len(path))
            elif w > start and w not in on_path and len(path) + 1 < best:
                on_path.add(w)
                path.append(w)
                extend(start, path, on_path)
                path.pop()
                on_path.discard(w)

    for s in range(g.n):
        extend(s, [s], {s})
    return best


def has_c3(g: Graph) -> bool:
    """Brute force over edges: does some edge have a common neighbour?"""
    adj = [set(a) for a in g.adjacency]
    return any(adj[u] & adj[v] for u, v in g.edges)


def has_c4(g: Graph) -> bool:
    """True iff two distinct vertices share two common neighbours."""
    return find_c4(g) is not None


def find_c4(g: Graph) -> Optional[tuple[int, int, int, int]]:
    # For each vertex w, every pair of its neighbours (u, v) is a path u-w-v;
    # a second middle vertex for the same pair closes a 4-cycle.
    seen: dict[tuple[int, int], int] = {}
    for w in range(g.n):
        for u, v in combinations(g.adjacency[w], 2):
            other = seen.get((u, v))
            if other is not None:
                return (u, other, v, w)
            seen[(u, v)] = w
    return None


def find_c3(g: Graph) -> Optional[tuple[int, int, int]]:
    adj = [set(a) for a in g.adjacency]
    for u, v in g.edges:
        common = adj[u] & adj[v]
        if common:
            return (u, v, min(common))
    return None


@dataclass(frozen=True)
class DensityReport:
    n: int
    m: int
    m_over_n: Fraction


def density_report(g: Graph) -> DensityReport:
    if g.n < 1:
        raise GraphError("density of the empty graph is undefined")
    return DensityReport(g.n, g.m, Fraction(g.m, g.n))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def is_petersen(g: Graph) -> bool:
    """10 vertices, 15 edges, 3-regular, girth 5: the unique (3,5)-cage."""
    return (
        g.n == 10
        and g.m == 15
        and all(g.degree(v) == 3 for v in range(g.n))
        and girth(g) == 5
    )
