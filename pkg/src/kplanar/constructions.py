"""Periodic lower-bound constructions with exact coordinates.

Each generator returns a :class:`~kplanar.drawing.DrawnGraph` and a
:class:`ConstructionCertificate` stating what the drawing is supposed to
satisfy.  The certificate is a claim, not a proof: the verifiers in
:mod:`kplanar.graph` and :mod:`kplanar.drawing` check it independently.

With ``wrap=True`` the pattern is wrapped horizontally around a cylinder,
so only the top and bottom rows carry boundary effects.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .drawing import DrawnGraph
from .geometry import CylinderMetric, Point
from .graph import Graph

FAMILIES = (
    "c4free-1planar",
    "girth5-1planar",
    "c4free-2planar",
    "girth5-2planar",
    "girth5-3planar",
)

TEMPLATE_VERSION = "1"


class InvalidSpec(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    rows: int
    cols: int
    wrap: bool = True


@dataclass(frozen=True)
class ConstructionCertificate:
    family: str
    expected_k: int
    expected_girth_min: Optional[int]
    expects_c3_free: bool
    expects_c4_free: bool
    edge_count: int
    vertex_count: int
    asymptotic_density: Fraction

    @property
    def boundary_deficit(self) -> Fraction:
        """Edges missing relative to ``asymptotic_density * n`` (boundary effect)."""
        return self.asymptotic_density * self.vertex_count - self.edge_count


# family -> (horizontal period in cols, min rows, min cols, k, girth min, c3 free, c4 free, density)
_FAMILY_TABLE = {
    "c4free-1planar": (4, 8, 8, 1, None, False, True, Fraction(12, 5)),
    "girth5-1planar": (2, 3, 6, 1, 5, True, True, Fraction(13, 6)),
    "c4free-2planar": (2, 3, 6, 2, None, False, True, Fraction(5, 2)),
    "girth5-2planar": (2, 3, 6, 2, 5, True, True, Fraction(16, 7)),
    "girth5-3planar": (2, 8, 8, 3, 5, True, True, Fraction(5, 2)),
}


def horizontal_period(family: str) -> int:
    return _FAMILY_TABLE[family][0]


def minimum_size(family: str) -> tuple[int, int]:
    _, r, c, *_ = _FAMILY_TABLE[family]
    return r, c


def validate_spec(spec: ConstructionSpec) -> None:
    if spec.family not in _FAMILY_TABLE:
        raise InvalidSpec(f"unknown family {spec.family!r}; expected one of {', '.join(FAMILIES)}")
    period, min_rows, min_cols = _FAMILY_TABLE[spec.family][:3]
    if spec.rows < min_rows or spec.cols < min_cols:
        raise InvalidSpec(f"{spec.family} needs rows >= {min_rows} and cols >= {min_cols}")
    if spec.wrap and spec.cols % period:
        raise InvalidSpec(f"{spec.family} wraps only when cols is a multiple of {period}")


class _Builder:
    """Collects vertices by exact (canonical) position and deduplicates edges."""

    def __init__(self, width: Optional[Fraction], inside: Callable[[Point], bool] = lambda p: True):
        self.metric = CylinderMetric(width) if width is not None else None
        self.inside = inside
        self.ids: dict[Point, int] = {}
        self.points: list[Point] = []
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []
        self.bends: list[tuple[Point, ...]] = []
        self._shape: dict[tuple[int, int], frozenset] = {}

    def canon(self, p) -> Point:
        p = Point.of(*p)
        return self.metric.canonical(p) if self.metric else p

    def vertex(self, p, label: str) -> Optional[int]:
        p = Point.of(*p)
        if not self.inside(p):
            return None
        c = self.canon(p)
        v = self.ids.get(c)
        if v is None:
            v = self.ids[c] = len(self.points)
            self.points.append(c)
            self.labels.append(label)
        elif self.labels[v] != label:
            raise AssertionError(f"label clash at {c}: {self.labels[v]} vs {label}")
        return v

    def lookup(self, p) -> Optional[int]:
        p = Point.of(*p)
        if not self.inside(p):
            return None
        return self.ids.get(self.canon(p))

    def edge(self, p, q, bends: Iterable = ()) -> None:
        """Edge between the vertices at cover points ``p`` and ``q`` (skipped if either is absent)."""
        u, v = self.lookup(p), self.lookup(q)
        if u is None or v is None:
            return
        p, q = Point.of(*p), Point.of(*q)
        bends = [Point.of(*b) for b in bends]
        if self.metric is not None:
            shift = self.canon(p).x - p.x
            bends = [b.shifted(shift) for b in bends]
            q = q.shifted(shift)
        key = (min(u, v), max(u, v))
        shape = frozenset(self.canon(x) for x in (*bends, q)) | {self.points[u]}
        if key in self._shape:
            if self._shape[key] != shape:
                raise AssertionError(f"two different drawings of edge {key}")
            return
        self._shape[key] = shape
        self.edges.append((u, v))
        self.bends.append(tuple(bends))

    def build(self) -> DrawnGraph:
        g = Graph.from_edges(len(self.points), self.edges, self.labels)
        d = DrawnGraph(g, tuple(self.points), tuple(self.bends), self.metric)
        if self.metric is not None:
            # the resolved end of every path must be the translate we intended
            for e, path in enumerate(d.paths):
                if self.canon(path[-1]) != self.points[self.edges[e][1]]:
                    raise AssertionError("edge end resolved to the wrong vertex")
        return d


def _certificate(spec: ConstructionSpec, d: DrawnGraph) -> ConstructionCertificate:
    _, _, _, k, gmin, c3, c4, dens = _FAMILY_TABLE[spec.family]
    return ConstructionCertificate(spec.family, k, gmin, c3, c4, d.graph.m, d.graph.n, dens)


def _box(cols: int, rows: int, wrap: bool):
    def inside(p: Point) -> bool:
        return 0 <= p.y < rows and (wrap or 0 <= p.x < cols)

    return inside


# --------------------------------------------------------------------------
# C4-free 1-planar: square grid with red centre vertices


def gen_c4free_1planar(spec: ConstructionSpec):
    validate_spec(spec)
    rows, cols = spec.rows, spec.cols
    b = _Builder(Fraction(cols) if spec.wrap else None, _box(cols, rows, spec.wrap))
    half = Fraction(1, 2)
    for j in range(rows):
        for i in range(cols):
            b.vertex((i, j), "black")
    for j in range(rows):
        for i in range(cols):
            if i % 2 and j % 2 and b.lookup((i + 1, j + 1)) is not None and b.lookup((i + 1, j)) is not None:
                b.vertex((i + half, j + half), "red")
    for j in range(rows):
        for i in range(cols):
            if i % 2 and j % 2:
                c = (i + half, j + half)
                for corner in ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)):
                    b.edge(c, corner)
            else:
                # an X in every cell without a red centre
                b.edge((i, j), (i + 1, j + 1))
                b.edge((i + 1, j), (i, j + 1))
            if i % 2:
                # odd columns i = 3 mod 4 repeat the pattern two rows lower
                jj = (j + (2 if i % 4 == 3 else 0)) % 4
                if jj in (1, 2):
                    b.edge((i, j), (i + 1, j))
                elif jj == 3:
                    b.edge((i, j), (i, j + 1))
                    b.edge((i + 1, j), (i + 1, j + 1))
    d = b.build()
    return d, _certificate(spec, d)


# --------------------------------------------------------------------------
# C4-free 2-planar: five chords in every hexagon


_HEX_CORNERS = ((1, 0), (Fraction(1, 2), 1), (Fraction(-1, 2), 1), (-1, 0), (Fraction(-1, 2), -1), (Fraction(1, 2), -1))
_HEX_CHORDS = ((1, 4), (2, 4), (3, 5), (3, 6), (5, 6))


def gen_c4free_2planar(spec: ConstructionSpec):
    validate_spec(spec)
    rows, cols = spec.rows, spec.cols
    b = _Builder(Fraction(3 * cols, 2) if spec.wrap else None)
    centres = [(Fraction(3 * a, 2), a % 2 + 2 * r) for a in range(cols) for r in range(rows)]
    for cx, cy in centres:
        for dx, dy in _HEX_CORNERS:
            b.vertex((cx + dx, cy + dy), "black")
    for cx, cy in centres:
        corner = [(cx + dx, cy + dy) for dx, dy in _HEX_CORNERS]
        for s, t in _HEX_CHORDS:
            b.edge(corner[s - 1], corner[t - 1])
    d = b.build()
    return d, _certificate(spec, d)


# --------------------------------------------------------------------------
# girth-5 3-planar: integer lattice, two colour classes


def gen_girth5_3planar(spec: ConstructionSpec):
    validate_spec(spec)
    rows, cols = spec.rows, spec.cols
    b = _Builder(Fraction(cols) if spec.wrap else None, _box(cols, rows, spec.wrap))

    def red(i, j):
        return (i - j) % 2 == 0

    for j in range(rows):
        for i in range(cols):
            b.vertex((i, j), "red" if red(i, j) else "black")
    for j in range(rows):
        for i in range(cols):
            b.edge((i, j), (i, j + 1))
            if red(i, j):
                b.edge((i, j), (i + 1, j))
            else:
                b.edge((i, j), (i + 2, j + 1))
                b.edge((i, j), (i + 1, j + 3))
    d = b.build()
    return d, _certificate(spec, d)


# --------------------------------------------------------------------------
# girth-5 families: Petersen tiles on a hexagonal grid
#
# A tile is a hexagon with corners _PB[k] (relative to its centre) plus four
# interior vertices: leaves l0, l1, l2 with l_k adjacent to corners k and
# k+3, and a hub z adjacent to all leaves.  Tile colours (b - a) mod 3 for
# the centre a*(9, 6) + b*(0, 12) decide the orientation of the interior
# drawing and which tiles exchange red edges.

_PB = ((6, 0), (3, 6), (-3, 6), (-6, 0), (-3, -6), (3, -6))
_SIDE = ((9, 6), (0, 12), (-9, 6), (-9, -6), (0, -12), (9, -6))  # neighbour across side k (corners k, k+1)
_LEAF = ((0, 4), (2, -2), (0, 0))  # l0, l1, l2 in the unrotated drawing
_HUB = (1, 1)


def _rot(p, times: int):
    """Rotate by 60 degrees ``times`` times in the sheared tile coordinates."""
    x, y = Fraction(p[0]), Fraction(p[1])
    for _ in range(times % 6):
        x, y = x / 2 - 3 * y / 4, x + y / 2
    return x, y


def _tile_colour(a: int, r: int) -> int:
    return (r - a // 2 - a) % 3


def _tile_centre(a: int, r: int) -> tuple[int, int]:
    return 9 * a, 6 * (a % 2) + 12 * r


def _tile_interior(colour: int):
    """Leaf positions (by corner pair) and hub position for a tile of the given colour."""
    turn = 1 if colour == 1 else 0
    leaves = {}
    for k, p in enumerate(_LEAF):
        leaves[(k + turn) % 3] = _rot(p, turn)
    return leaves, _rot(_HUB, turn)


# red edges leave colour-0 tiles: (leaf of the colour-0 tile, side, leaf of the colour-1
# neighbour); leaves are named by the corner pair they attach to
_RED = ((0, 1, 0), (2, 3, 2), (1, 5, 1))


def _add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def _petersen_tiles(spec: ConstructionSpec) -> tuple[_Builder, list]:
    rows, cols = spec.rows, spec.cols
    b = _Builder(Fraction(9 * cols) if spec.wrap else None)
    tiles = [(a, r) for a in range(cols) for r in range(rows)]
    present = set()
    for a, r in tiles:
        c = _tile_centre(a, r)
        present.add(b.canon(c))
        leaves, hub = _tile_interior(_tile_colour(a, r))
        for k in range(6):
            b.vertex(_add(c, _PB[k]), "black")
        for k in range(3):
            b.vertex(_add(c, leaves[k]), "black")
        b.vertex(_add(c, hub), "black")
    for a, r in tiles:
        c = _tile_centre(a, r)
        leaves, hub = _tile_interior(_tile_colour(a, r))
        for k in range(6):
            b.edge(_add(c, _PB[k]), _add(c, _PB[(k + 1) % 6]))
        for k in range(3):
            lk = _add(c, leaves[k])
            b.edge(lk, _add(c, _PB[k]))
            b.edge(lk, _add(c, _PB[k + 3]))
            b.edge(_add(c, hub), lk)
    for a, r in tiles:
        if _tile_colour(a, r) != 0:
            continue
        c = _tile_centre(a, r)
        leaves, _ = _tile_interior(0)
        for mine, side, theirs in _RED:
            nc = _add(c, _SIDE[side])
            if b.canon(nc) not in present:
                continue
            other, _ = _tile_interior(1)
            b.edge(_add(c, leaves[mine]), _add(nc, other[theirs]))
    b._tiles = tiles  # type: ignore[attr-defined]
    b._present = present  # type: ignore[attr-defined]
    return b, tiles


def gen_girth5_1planar(spec: ConstructionSpec):
    validate_spec(spec)
    b, _ = _petersen_tiles(spec)
    d = b.build()
    return d, _certificate(spec, d)


# Blue vertices, three per colour-0 tile (so one per tile on average): (position,
# ((target, bends), ...)), everything relative to the tile centre in cover
# coordinates.  Found by a search over dual-graph routes with at most two
# crossings per new edge, then checked with the drawing verifiers.
_F = Fraction
BLUE_TEMPLATE: tuple = (
    ((-2, -3), (((0, 0), ()), ((0, -8), ()), ((-9, -6), ((-6, -5), (_F(-13, 2), _F(-11, 2)))))),
    ((-4, 3), (((0, 0), ()), ((0, 12), ()), ((-9, 6), ((_F(-15, 2), _F(7, 2)), (_F(-15, 2), 4))))),
    ((4, -1), (((1, 1), ()), ((9, 6), ()), ((_F(23, 2), -5), ()))),
)


def gen_girth5_2planar(spec: ConstructionSpec):
    validate_spec(spec)
    b, tiles = _petersen_tiles(spec)
    for a, r in tiles:
        if _tile_colour(a, r) != 0:
            continue
        c = _tile_centre(a, r)
        for pos, targets in BLUE_TEMPLATE:
            # near the top and bottom rows some targets are missing; skip that blue vertex
            if any(b.lookup(_add(c, q)) is None for q, _ in targets) or not b.inside(Point.of(*_add(c, pos))):
                continue
            bp = _add(c, pos)
            b.vertex(bp, "blue")
            for q, bends in targets:
                b.edge(bp, _add(c, q), [_add(c, x) for x in bends])
    d = b.build()
    return d, _certificate(spec, d)


GENERATORS = {
    "c4free-1planar": gen_c4free_1planar,
    "girth5-1planar": gen_girth5_1planar,
    "c4free-2planar": gen_c4free_2planar,
    "girth5-2planar": gen_girth5_2planar,
    "girth5-3planar": gen_girth5_3planar,
}


def generate(spec: ConstructionSpec):
    if spec.family not in GENERATORS:
        raise InvalidSpec(f"unknown family {spec.family!r}")
    return GENERATORS[spec.family](spec)


ASYMPTOTIC_DENSITY = {family: row[-1] for family, row in _FAMILY_TABLE.items()}

# |m/n - asymptotic density| <= C / rows for wrapped instances; measured once and frozen
BOUNDARY_CONSTANT = {
    "c4free-1planar": Fraction(2),
    "girth5-1planar": Fraction(1),
    "c4free-2planar": Fraction(3),
    "girth5-2planar": Fraction(1),
    "girth5-3planar": Fraction(4),
}
