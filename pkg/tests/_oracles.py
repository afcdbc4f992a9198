"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from fractions import Fraction

from kplanar.drawing import DegenerateDrawing, DisconnectedDrawing, DrawnGraph, compute_crossings, planarize
from kplanar.graph import Graph


def _orient(o, a, b) -> int:
    v = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    return (v > 0) - (v < 0)


def _proper(p1, p2, q1, q2) -> bool:
    d1, d2 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    d3, d4 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    return d1 * d2 < 0 and d3 * d4 < 0


def _bbox(path):
    xs = [p[0] for p in path]
    ys = [p[1] for p in path]
    return min(xs), max(xs), min(ys), max(ys)


def cover_crossings(d: DrawnGraph) -> Counter:
    """Crossings per unordered edge pair, counted in the universal cover.

    Every edge path is lifted once; the other edge is tried at every
    horizontal translate k*W that can reach it.  Plane drawings use k = 0.
    """
    paths = [[(p.x, p.y) for p in path] for path in d.paths]
    boxes = [_bbox(p) for p in paths]
    w = d.metric.width if d.metric is not None else None
    out: Counter = Counter()
    for e, f in itertools.combinations(range(len(paths)), 2):
        ax0, ax1, ay0, ay1 = boxes[e]
        bx0, bx1, by0, by1 = boxes[f]
        if ay1 < by0 or by1 < ay0:
            continue
        if w is None:
            shifts = [0]
        else:
            lo = -((bx1 - ax0) // w) - 1
            hi = (ax1 - bx0) // w + 1
            shifts = [k * w for k in range(int(lo), int(hi) + 1)]
        for s in shifts:
            if bx1 + s < ax0 or ax1 < bx0 + s:
                continue
            q = [(x + s, y) for x, y in paths[f]]
            for a, b in zip(paths[e], paths[e][1:]):
                for c, dd in zip(q, q[1:]):
                    if _proper(a, b, c, dd):
                        out[(e, f)] += 1
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_drawing(rng: random.Random, n_max: int = 10, grid: int = 7, p: float = 0.45, accept=None, tries: int = 10000):
    """Rejection sampler for small valid straight-line plane drawings.

    A sample is kept when it is connected, in general position (no
    DegenerateDrawing) and satisfies the optional ``accept`` predicate.
    """
    for _ in range(tries):
        n = rng.randint(3, n_max)
        pts = rng.sample([(x, y) for x in range(grid) for y in range(grid)], n)
        g = random_graph(rng, n, p)
        if g.m == 0 or not g.is_connected():
            continue
        d = DrawnGraph(g, tuple((Fraction(x), Fraction(y)) for x, y in pts), ())
        try:
            compute_crossings(d)
            planarize(d)
        except (DegenerateDrawing, DisconnectedDrawing):
            continue
        if accept is None or accept(d):
            return d
    raise RuntimeError("rejection sampler gave up")


def triangulation(rng: random.Random, n: int, grid: int = 40) -> DrawnGraph:
    """A maximal plane straight-line graph: big outer triangle, greedy inner edges."""
    outer = [(0, 0), (4 * grid, 0), (0, 4 * grid)]
    pts = list(outer)
    while len(pts) < n:
        x, y = rng.randrange(1, 2 * grid), rng.randrange(1, 2 * grid)
        if x + y < 4 * grid - 1 and (x, y) not in pts:
            pts.append((x, y))
    pairs = sorted(itertools.combinations(range(n), 2), key=lambda e: (pts[e[0]][0] - pts[e[1]][0]) ** 2 + (pts[e[0]][1] - pts[e[1]][1]) ** 2)
    chosen = []
    for u, v in pairs:
        if any(_orient(pts[u], pts[v], pts[w]) == 0 and min(pts[u][0], pts[v][0]) <= pts[w][0] <= max(pts[u][0], pts[v][0])
               and min(pts[u][1], pts[v][1]) <= pts[w][1] <= max(pts[u][1], pts[v][1]) for w in range(n) if w not in (u, v)):
            continue
        if any(len({u, v, a, b}) == 4 and _proper(pts[u], pts[v], pts[a], pts[b]) for a, b in chosen):
            continue
        chosen.append((u, v))
    g = Graph.from_edges(n, chosen)
    return DrawnGraph(g, tuple((Fraction(x), Fraction(y)) for x, y in pts), ())


def brute_c4_free(g: Graph) -> bool:
    """No two vertices share two neighbours."""
    seen = set()
    for v in range(g.n):
        for a, b in itertools.combinations(sorted(g.adjacency[v]), 2):
            if (a, b) in seen:
                return False
            seen.add((a, b))
    return True
