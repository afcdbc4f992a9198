"""Polyline drawings: crossings, k-planarity, planarization and face tracing.

A drawing lives either in the plane or on a cylinder of width ``W``
(x-periodic).  On the cylinder every vertex sits in the strip ``[0, W)``
and each edge is a polyline in cover coordinates: it starts at the exact
position of its first endpoint and its last point is a translate
``pos[v] + k*W`` of the second endpoint, chosen so that the final segment
moves less than ``W/2`` horizontally.
"""

from __future__ import annotations

import heapq
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key, reduce
from typing import Iterable, Optional, Sequence

from .geometry import CylinderMetric, Kind, Point, as_rational, classify, format_rational, on_segment, orientation
from .graph import Graph


class DegenerateDrawing(ValueError):
    """The drawing violates general position; ``elements`` names the culprits."""

    def __init__(self, reason: str, elements: Sequence = ()):
        self.reason = reason
        self.elements = tuple(elements)
        super().__init__(f"{reason}: {self.elements}")


class DisconnectedDrawing(ValueError):
    pass


@dataclass(frozen=True)
class DrawnGraph:
    graph: Graph
    positions: tuple[Point, ...]
    bends: tuple[tuple[Point, ...], ...]
    metric: Optional[CylinderMetric] = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        g = self.graph
        if len(self.positions) != g.n:
            raise ValueError("need one position per vertex")
        if not self.bends:
            object.__setattr__(self, "bends", tuple(() for _ in range(g.m)))
        if len(self.bends) != g.m:
            raise ValueError("need one bend list per edge")
        object.__setattr__(self, "positions", tuple(Point.of(*p) for p in self.positions))
        object.__setattr__(self, "bends", tuple(tuple(Point.of(*b) for b in bl) for bl in self.bends))
        if self.metric is not None:
            w = self.metric.width
            for v, p in enumerate(self.positions):
                if not 0 <= p.x < w:
                    raise DegenerateDrawing("vertex outside the fundamental strip", [v])
        keys = [self._canon(p) for p in self.positions]
        if len(set(keys)) != len(keys):
            seen: dict = {}
            for v, k in enumerate(keys):
                if k in seen:
                    raise DegenerateDrawing("coincident vertices", [seen[k], v])
                seen[k] = v

    def _canon(self, p: Point) -> Point:
        return self.metric.canonical(p) if self.metric is not None else p

    @property
    def is_cylinder(self) -> bool:
        return self.metric is not None

    @property
    def paths(self) -> tuple[tuple[Point, ...], ...]:
        cached = self._cache.get("paths")
        if cached is None:
            cached = tuple(self._resolve_path(e) for e in range(self.graph.m))
            self._cache["paths"] = cached
        return cached

    def _resolve_path(self, e: int) -> tuple[Point, ...]:
        u, v = self.graph.edges[e]
        pts = [self.positions[u], *self.bends[e]]
        end = self.positions[v]
        if self.metric is not None:
            w = self.metric.width
            prev = pts[-1].x
            k = round((prev - end.x) / w)
            end = end.shifted(k * w)
            if 2 * abs(end.x - prev) >= w:
                raise DegenerateDrawing("ambiguous seam crossing (segment spans half the cylinder)", [e])
        pts.append(end)
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise DegenerateDrawing("repeated polyline point", [e])
        return tuple(pts)

    def restrict(self, edge_ids: Iterable[int]) -> "DrawnGraph":
        """Same vertices, only the listed edges (ids are renumbered in order)."""
        keep = sorted(set(edge_ids))
        g = Graph.from_edges(self.graph.n, [self.graph.edges[e] for e in keep], self.graph.labels)
        return DrawnGraph(g, self.positions, tuple(self.bends[e] for e in keep), self.metric)


@dataclass(frozen=True, order=True)
class Crossing:
    edge_a: int
    edge_b: int
    point: Point
    # position along each edge: (segment index, parameter in (0, 1)) and the
    # crossing point in that edge's own cover coordinates
    where_a: tuple = field(compare=False, repr=False, default=())
    where_b: tuple = field(compare=False, repr=False, default=())

    def other(self, e: int) -> int:
        return self.edge_b if e == self.edge_a else self.edge_a

    def locate(self, e: int) -> tuple:
        return self.where_a if e == self.edge_a else self.where_b


# --------------------------------------------------------------------------
# crossings


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _scale(d: DrawnGraph) -> int:
    dens = {1}
    for path in d.paths:
        for p in path:
            dens.add(p.x.denominator)
            dens.add(p.y.denominator)
    if d.metric is not None:
        dens.add(d.metric.width.denominator)
    return reduce(_lcm, dens)


def compute_crossings(d: DrawnGraph) -> list[Crossing]:
    """All proper crossings between edges, validated for general position.

    Raises :class:`DegenerateDrawing` for overlaps, touching segments, an
    edge through a vertex, crossings between adjacent edges, self-crossing
    polylines and points where three or more edges meet.
    """
    cached = d._cache.get("crossings")
    if cached is not None:
        return list(cached)
    result = _compute_crossings(d)
    d._cache["crossings"] = tuple(result)
    return list(result)


def _compute_crossings(d: DrawnGraph) -> list[Crossing]:
    g = d.graph
    L = _scale(d)
    W = int(d.metric.width * L) if d.metric is not None else 0
    shifts = (-W, 0, W) if W else (0,)

    ipaths = [[(int(p.x * L), int(p.y * L)) for p in path] for path in d.paths]
    segs: list[tuple[int, int, tuple, tuple]] = []
    for e, path in enumerate(ipaths):
        if W and max(p[0] for p in path) - min(p[0] for p in path) >= W:
            raise DegenerateDrawing("edge wraps around the whole cylinder", [e])
        for i in range(len(path) - 1):
            segs.append((e, i, path[i], path[i + 1]))
        _check_self_intersection(e, path)

    extents = sorted(max(abs(a[0] - b[0]), abs(a[1] - b[1])) for _, _, a, b in segs) or [1]
    cell = max(1, extents[len(extents) // 2])

    def cells(a, b, sx):
        x0, x1 = sorted((a[0] + sx, b[0] + sx))
        y0, y1 = sorted((a[1], b[1]))
        for cx in range(x0 // cell, x1 // cell + 1):
            for cy in range(y0 // cell, y1 // cell + 1):
                yield cx, cy

    buckets: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    for sid, (_, _, a, b) in enumerate(segs):
        for sx in shifts:
            for c in cells(a, b, sx):
                buckets[c].append((sid, sx))

    # vertices lying on foreign segments (or on bends)
    for v, p in enumerate(d.positions):
        ip = (int(p.x * L), int(p.y * L))
        for sx in shifts:
            q = (ip[0] + sx, ip[1])
            for sid, tx in buckets.get((q[0] // cell, q[1] // cell), ()):
                e, i, a, b = segs[sid]
                qa = (q[0] - tx, q[1])
                if orientation(a, b, qa) == 0 and on_segment(qa, a, b):
                    path = ipaths[e]
                    at_end = (i == 0 and qa == a and g.edges[e][0] == v) or (
                        i == len(path) - 2 and qa == b and g.edges[e][1] == v
                    )
                    if not at_end:
                        raise DegenerateDrawing("edge passes through a vertex or bend", [e, v])

    endpoint_sets = [set(uv) for uv in g.edges]
    crossings: list[Crossing] = []
    seen_pairs = set()
    for sid, (e, i, a, b) in enumerate(segs):
        for c in cells(a, b, 0):
            for tid, sx in buckets.get(c, ()):
                f = segs[tid][0]
                if f <= e or (sid, tid, sx) in seen_pairs:
                    continue
                seen_pairs.add((sid, tid, sx))
                _, j, qa, qb = segs[tid]
                q1 = (qa[0] + sx, qa[1])
                q2 = (qb[0] + sx, qb[1])
                r = classify(a, b, q1, q2)
                if r.kind is Kind.NONE:
                    continue
                if r.kind is Kind.OVERLAP:
                    raise DegenerateDrawing("overlapping edges", [e, f])
                if r.kind is Kind.TOUCH:
                    raise DegenerateDrawing("edge touches another edge", [e, f])
                if r.kind is Kind.SHARED_ENDPOINT:
                    x = (int(r.point.x), int(r.point.y))
                    pe, pf = ipaths[e], ipaths[f]
                    ends_e = {pe[0], pe[-1]}
                    ends_f = {(pf[0][0] + sx, pf[0][1]), (pf[-1][0] + sx, pf[-1][1])}
                    if x not in ends_e or x not in ends_f:
                        raise DegenerateDrawing("edges meet at a bend point", [e, f])
                    continue
                if endpoint_sets[e] & endpoint_sets[f]:
                    raise DegenerateDrawing("adjacent edges cross", [e, f])
                px, py = r.point
                local_a = Point(px / L, py / L)
                local_b = Point((px - sx) / L, py / L)
                ta = _param(r.point, a, b)
                tb = _param((px - sx, py), qa, qb)
                crossings.append(
                    Crossing(e, f, d._canon(local_a), (i, ta, local_a), (j, tb, local_b))
                )

    crossings.sort()
    points: dict[Point, Crossing] = {}
    for c in crossings:
        if c.point in points:
            o = points[c.point]
            raise DegenerateDrawing("three or more edges through one point", sorted({o.edge_a, o.edge_b, c.edge_a, c.edge_b}))
        points[c.point] = c
    return crossings


def _param(p, a, b) -> Fraction:
    if a[0] != b[0]:
        return Fraction(p[0] - a[0]) / (b[0] - a[0])
    return Fraction(p[1] - a[1]) / (b[1] - a[1])


def _check_self_intersection(e: int, path) -> None:
    k = len(path) - 1
    for i in range(k):
        for j in range(i + 1, k):
            r = classify(path[i], path[i + 1], path[j], path[j + 1])
            if r.kind is Kind.NONE:
                continue
            if j == i + 1 and r.kind is Kind.SHARED_ENDPOINT:
                continue
            raise DegenerateDrawing("self-intersecting edge polyline", [e])


def edge_crossing_counts(d: DrawnGraph, crossings: Optional[Sequence[Crossing]] = None) -> list[int]:
    crossings = compute_crossings(d) if crossings is None else crossings
    counts = [0] * d.graph.m
    for c in crossings:
        counts[c.edge_a] += 1
        counts[c.edge_b] += 1
    return counts


def local_crossing_number(d: DrawnGraph) -> int:
    """Largest number of crossings on a single edge of the given drawing."""
    return max(edge_crossing_counts(d), default=0)


def greedy_uncross(d: DrawnGraph) -> list[tuple[int, int]]:
    """Remove a most-crossed edge (smallest id on ties) until no crossing is left.

    Returns the removal trace as ``(edge id, crossings at removal)``.
    """
    crossings = compute_crossings(d)
    partners: dict[int, list[int]] = defaultdict(list)
    for c in crossings:
        partners[c.edge_a].append(c.edge_b)
        partners[c.edge_b].append(c.edge_a)
    count = {e: len(p) for e, p in partners.items()}
    heap = [(-k, e) for e, k in count.items()]
    heapq.heapify(heap)
    removed: set[int] = set()
    trace = []
    while heap:
        negk, e = heapq.heappop(heap)
        if e in removed or count[e] != -negk:
            continue
        if count[e] == 0:
            break
        trace.append((e, count[e]))
        removed.add(e)
        for f in partners[e]:
            if f not in removed:
                count[f] -= 1
                heapq.heappush(heap, (-count[f], f))
    return trace


# --------------------------------------------------------------------------
# planarization


@dataclass(frozen=True)
class Piece:
    """An edge of the planarization: a crossing-free stretch of an original edge."""

    edge: int
    tail: int
    head: int
    points: tuple[Point, ...]
    whole: bool  # the original edge has no crossing at all


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[int, ...]
    boundary_walk: tuple[tuple[int, int], ...]  # (V' vertex, piece id) in walk order
    size: int  # |f|: V'-incidences with multiplicity
    original_count: int  # |V(f)|: incidences of original vertices
    segment_count: int
    boundary: bool  # a cap face of a cylinder drawing
    outer: bool  # the unbounded face of a plane drawing

    @property
    def cell_size(self) -> int:
        """Original vertices plus edge segments on the boundary (density-formula size)."""
        return self.original_count + self.segment_count


@dataclass(frozen=True)
class Planarization:
    drawing: DrawnGraph
    crossings: tuple[Crossing, ...]
    pieces: tuple[Piece, ...]
    rotation: tuple[tuple[int, ...], ...]  # ccw dart order around each V' vertex
    faces: tuple[Face, ...]
    dart_face: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.drawing.graph.n

    @property
    def num_vertices(self) -> int:
        return self.n + len(self.crossings)

    @property
    def num_edges(self) -> int:
        return len(self.pieces)

    def is_original(self, node: int) -> bool:
        return node < self.n

    def origin(self, node: int):
        """``"original"`` or the :class:`Crossing` a dummy vertex stands for."""
        return "original" if node < self.n else self.crossings[node - self.n]

    def dart_tail(self, dart: int) -> int:
        p = self.pieces[dart >> 1]
        return p.head if dart & 1 else p.tail

    def dart_head(self, dart: int) -> int:
        p = self.pieces[dart >> 1]
        return p.tail if dart & 1 else p.head

    def degree(self, node: int) -> int:
        return len(self.rotation[node])

    def plane_graph(self) -> Graph:
        """V' as a simple graph (raises if two pieces join the same pair)."""
        return Graph.from_edges(self.num_vertices, [(p.tail, p.head) for p in self.pieces])

    def dual_edges(self) -> list[tuple[int, int, int]]:
        """``(face, face, piece)`` for every piece, one entry per piece."""
        return [(self.dart_face[2 * i], self.dart_face[2 * i + 1], i) for i in range(len(self.pieces))]

    def euler_characteristic(self) -> int:
        return self.num_vertices - self.num_edges + len(self.faces)


def _direction_cmp(u, v) -> int:
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def planarize(d: DrawnGraph) -> Planarization:
    """Replace crossings by degree-4 vertices and trace the faces.

    Faces are traced with the face on the left of every dart, so bounded
    faces of a plane drawing come out counter-clockwise.  A cylinder
    drawing is embedded in the sphere minus two points; the two faces
    that wind around the cylinder are its caps and are flagged
    ``boundary``.
    """
    g = d.graph
    if not g.is_connected():
        raise DisconnectedDrawing("planarization needs a connected drawing")
    crossings = compute_crossings(d)
    n = g.n
    node_of: dict[int, int] = {}

    events: dict[int, list] = defaultdict(list)
    for ci, c in enumerate(crossings):
        for e in (c.edge_a, c.edge_b):
            seg, t, local = c.locate(e)
            events[e].append((seg, t, n + ci, local))

    pieces: list[Piece] = []
    for e, (u, v) in enumerate(g.edges):
        path = d.paths[e]
        evs = sorted(events.get(e, ()), key=lambda x: (x[0], x[1]))
        whole = not evs
        cur, pts = u, [path[0]]
        k = 0
        for i in range(len(path) - 1):
            while k < len(evs) and evs[k][0] == i:
                _, _, node, local = evs[k]
                pts.append(local)
                pieces.append(Piece(e, cur, node, tuple(pts), whole))
                cur, pts = node, [local]
                k += 1
            pts.append(path[i + 1])
        pieces.append(Piece(e, cur, v, tuple(pts), whole))

    num_nodes = n + len(crossings)
    around: list[list[tuple]] = [[] for _ in range(num_nodes)]
    for pid, p in enumerate(pieces):
        a, b = p.points[0], p.points[1]
        around[p.tail].append(((b.x - a.x, b.y - a.y), 2 * pid))
        a, b = p.points[-1], p.points[-2]
        around[p.head].append(((b.x - a.x, b.y - a.y), 2 * pid + 1))
    rotation = []
    position: dict[int, int] = {}
    for node, lst in enumerate(around):
        lst.sort(key=cmp_to_key(lambda s, t: _direction_cmp(s[0], t[0])))
        for (dir1, _), (dir2, d2) in zip(lst, lst[1:]):
            if _direction_cmp(dir1, dir2) == 0:
                raise DegenerateDrawing("two edge pieces leave a vertex in the same direction", [pieces[d2 >> 1].edge])
        darts = tuple(dd for _, dd in lst)
        for i, dd in enumerate(darts):
            position[dd] = i
        rotation.append(darts)

    def head(dart):
        p = pieces[dart >> 1]
        return p.tail if dart & 1 else p.head

    def tail(dart):
        p = pieces[dart >> 1]
        return p.head if dart & 1 else p.tail

    def dart_points(dart):
        pts = pieces[dart >> 1].points
        return pts[::-1] if dart & 1 else pts

    dart_face = [-1] * (2 * len(pieces))
    raw_faces = []
    for start in range(2 * len(pieces)):
        if dart_face[start] != -1:
            continue
        walk = []
        dart = start
        while dart_face[dart] == -1:
            dart_face[dart] = len(raw_faces)
            walk.append(dart)
            node = head(dart)
            rot = rotation[node]
            dart = rot[position[dart ^ 1] - 1]
        if dart != start:
            raise AssertionError("face tracing did not close up")
        raw_faces.append(walk)

    faces = []
    areas = []
    for fi, walk in enumerate(raw_faces):
        if d.metric is not None:
            wind = sum(dart_points(dd)[-1].x - dart_points(dd)[0].x for dd in walk)
            boundary = wind != 0
            area = None
        else:
            boundary = False
            area = Fraction(0)
            for dd in walk:
                pts = dart_points(dd)
                for a, b in zip(pts, pts[1:]):
                    area += a.x * b.y - a.y * b.x
        areas.append(area)
        nodes = [tail(dd) for dd in walk]
        faces.append(
            dict(
                index=fi,
                darts=tuple(walk),
                boundary_walk=tuple((tail(dd), dd >> 1) for dd in walk),
                size=len(walk),
                original_count=sum(1 for x in nodes if x < n),
                segment_count=len(walk),
                boundary=boundary,
                outer=False,
            )
        )
    if d.metric is None and faces:
        outer = min(range(len(faces)), key=lambda i: areas[i])
        faces[outer]["outer"] = True

    plan = Planarization(
        drawing=d,
        crossings=tuple(crossings),
        pieces=tuple(pieces),
        rotation=tuple(rotation),
        faces=tuple(Face(**f) for f in faces),
        dart_face=tuple(dart_face),
    )
    _check_planarization(plan)
    return plan


def _check_planarization(p: Planarization) -> None:
    for node in range(p.n, p.num_vertices):
        if p.degree(node) != 4:
            raise AssertionError(f"dummy vertex {node} has degree {p.degree(node)}")
    if p.euler_characteristic() != 2:
        raise AssertionError(f"Euler characteristic {p.euler_characteristic()} != 2")
    uses = [0] * len(p.pieces)
    for f in p.faces:
        for _, pid in f.boundary_walk:
            uses[pid] += 1
    if any(u != 2 for u in uses):
        raise AssertionError("some planarization edge is not traversed exactly twice")


def biconnectivity_warning(d: DrawnGraph) -> bool:
    """Warn (and return False) when the abstract graph is not biconnected."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(d.graph.n))
    h.add_edges_from(d.graph.edges)
    ok = d.graph.n >= 3 and nx.is_biconnected(h)
    if not ok:
        warnings.warn("drawing is not biconnected; face sizes count incidences with multiplicity", stacklevel=2)
    return ok


# ---------------------------------------------------------------- serialization

class InvalidDrawingFile(ValueError):
    pass


def drawing_to_json(d: DrawnGraph) -> dict:
    """Drawing as a JSON-ready dict; every rational becomes a ``"p/q"`` string."""
    g = d.graph
    vertices = []
    for v, p in enumerate(d.positions):
        row = {"id": v, "x": format_rational(p.x), "y": format_rational(p.y)}
        if g.label(v) is not None:
            row["label"] = g.label(v)
        vertices.append(row)
    edges = [
        {"u": u, "v": v, "bends": [[format_rational(b.x), format_rational(b.y)] for b in d.bends[e]]}
        for e, (u, v) in enumerate(g.edges)
    ]
    metric = None if d.metric is None else {"cylinder_width": format_rational(d.metric.width)}
    return {"metric": metric, "vertices": vertices, "edges": edges}


def drawing_from_json(data) -> DrawnGraph:
    """Inverse of :func:`drawing_to_json`; malformed input raises :class:`InvalidDrawingFile`."""
    try:
        rows = sorted(data["vertices"], key=lambda r: r["id"])
        if [r["id"] for r in rows] != list(range(len(rows))):
            raise InvalidDrawingFile("vertex ids must be 0..n-1")
        positions = [Point(_rat(r["x"]), _rat(r["y"])) for r in rows]
        labels = [r.get("label") for r in rows]
        ends = [(int(e["u"]), int(e["v"])) for e in data["edges"]]
        bends = [tuple(Point(_rat(x), _rat(y)) for x, y in e.get("bends", [])) for e in data["edges"]]
        metric = data.get("metric")
        metric = None if metric is None else CylinderMetric(_rat(metric["cylinder_width"]))
        g = Graph.from_edges(len(rows), ends, labels if any(labels) else ())
        return DrawnGraph(g, tuple(positions), tuple(bends), metric)
    except InvalidDrawingFile:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, DegenerateDrawing):
            raise
        raise InvalidDrawingFile(str(exc)) from exc


def _rat(s) -> Fraction:
    if not isinstance(s, str):
        raise InvalidDrawingFile(f"coordinates must be 'p/q' strings, got {s!r}")
    return Fraction(s)


SVG_COLOURS = {"red": "#c0392b", "black": "#222222", "blue": "#2e61c4"}


def to_svg(d: DrawnGraph, scale: int = 20, size: int = 800) -> str:
    """Fixed ``size`` x ``size`` viewport; coordinates are multiplied by ``scale``.

    Element order is edges by id, then crossings sorted, then vertices by id,
    so equal drawings give byte-identical output.
    """
    pts = [p for path in d.paths for p in path]
    x0 = min(p.x for p in pts)
    y1 = max(p.y for p in pts)
    pad = 10

    def xy(p: Point) -> str:
        return f"{float((p.x - x0) * scale) + pad:.3f},{float((y1 - p.y) * scale) + pad:.3f}"

    g = d.graph
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" data-scale="{scale}">'
    ]
    for e, path in enumerate(d.paths):
        u, v = g.edges[e]
        lab = g.label(u) if g.label(u) == g.label(v) else None
        colour = SVG_COLOURS.get(lab or "", "#777777")
        out.append(f'<polyline data-edge="{e}" fill="none" stroke="{colour}" points="{" ".join(xy(p) for p in path)}"/>')
    try:
        crossings = compute_crossings(d)
    except DegenerateDrawing:
        crossings = []
    for c in crossings:
        p = c.where_a[2]
        x, y = map(float, xy(p).split(","))
        out.append(f'<rect class="crossing" x="{x - 3:.3f}" y="{y - 3:.3f}" width="6" height="6" fill="none" stroke="#000"/>')
    for v, p in enumerate(d.positions):
        colour = SVG_COLOURS.get(g.label(v) or "", "#000000")
        x, y = xy(p).split(",")
        out.append(f'<circle data-vertex="{v}" cx="{x}" cy="{y}" r="3" fill="{colour}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
