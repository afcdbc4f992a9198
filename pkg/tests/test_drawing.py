import json
import random
from fractions import Fraction

import pytest

from _oracles import cover_crossings, random_drawing
from kplanar.drawing import (
    DegenerateDrawing,
    DrawnGraph,
    InvalidDrawingFile,
    compute_crossings,
    drawing_from_json,
    drawing_to_json,
    edge_crossing_counts,
    greedy_uncross,
    local_crossing_number,
    planarize,
    to_svg,
)
from kplanar.geometry import CylinderMetric
from kplanar.graph import Graph


def drawing(pos, edges, bends=(), width=None):
    g = Graph.from_edges(len(pos), edges)
    return DrawnGraph(g, tuple(pos), tuple(bends), CylinderMetric(width) if width else None)


K4_CROSSED = drawing([(0, 0), (2, 0), (2, 2), (0, 2)], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


def test_k4_with_one_crossing():
    xs = compute_crossings(K4_CROSSED)
    assert len(xs) == 1
    assert xs[0].point == (1, 1)
    assert local_crossing_number(K4_CROSSED) == 1
    p = planarize(K4_CROSSED)
    assert (p.num_vertices, p.num_edges, len(p.faces)) == (5, 8, 5)
    assert p.euler_characteristic() == 2


def test_plane_drawing_has_no_crossings():
    d = drawing([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (2, 0)])
    assert compute_crossings(d) == []
    assert len(planarize(d).faces) == 2


@pytest.mark.parametrize(
    "pos, edges, reason",
    [
        ([(0, 0), (2, 0), (1, 0), (1, 1)], [(0, 1), (2, 3)], "passes through"),
        ([(0, 0), (2, 0), (1, 0), (3, 0)], [(0, 1), (2, 3)], "passes through"),
        ([(0, 0), (2, 2), (0, 2), (2, 0), (1, 0), (1, 2)], [(0, 1), (2, 3), (4, 5)], "three or more"),
    ],
)
def test_degenerate_inputs_are_rejected(pos, edges, reason):
    with pytest.raises(DegenerateDrawing) as exc:
        compute_crossings(drawing(pos, edges))
    assert reason in exc.value.reason


def test_adjacent_edges_may_not_cross():
    d = drawing([(0, 0), (2, 2), (2, 0)], [(0, 1), (0, 2)], bends=[(), ((1, 3),)])
    with pytest.raises(DegenerateDrawing) as exc:
        compute_crossings(d)
    assert "adjacent" in exc.value.reason


def test_cylinder_seam_crossing():
    # an edge drawn across the seam crosses a vertical edge placed near x = 0
    d = drawing([(9, 0), (1, 2), (0, -1), (0, 3)], [(0, 1), (2, 3)], width=10)
    assert len(compute_crossings(d)) == 1
    assert sum(cover_crossings(d).values()) == 1


def test_greedy_uncross_prefers_most_crossed_then_smallest_id():
    # a long horizontal edge crossed by three verticals
    pos = [(0, 0), (10, 0), (1, -1), (1, 1), (2, -1), (2, 1), (3, -1), (3, 1)]
    d = drawing(pos, [(0, 1), (2, 3), (4, 5), (6, 7)])
    assert greedy_uncross(d) == [(0, 3)]
    d2 = drawing([(0, 0), (2, 2), (0, 2), (2, 0)], [(0, 1), (2, 3)])
    assert greedy_uncross(d2) == [(0, 1)]


def test_random_drawings_charge_sum_and_crossing_oracle():
    rng = random.Random(5)
    for _ in range(40):
        d = random_drawing(rng)
        assert len(compute_crossings(d)) == sum(cover_crossings(d).values())
        p = planarize(d)
        assert p.euler_characteristic() == 2
        assert sum(f.original_count + f.size - 4 for f in p.faces) == 4 * d.graph.n - 8


def test_json_round_trip_is_bit_exact():
    d = drawing([(0, 0), (Fraction(5, 3), 0), (1, 2)], [(0, 1), (1, 2)], bends=[(), ((Fraction(3, 2), Fraction(7, 4)),)])
    data = drawing_to_json(d)
    assert data["vertices"][1]["x"] == "5/3"
    again = drawing_from_json(json.loads(json.dumps(data)))
    assert drawing_to_json(again) == data


def test_bad_json_is_reported():
    with pytest.raises(InvalidDrawingFile):
        drawing_from_json({"metric": None, "vertices": [{"id": 0, "x": 0.5, "y": "0"}], "edges": []})
    with pytest.raises(InvalidDrawingFile):
        drawing_from_json({"vertices": []})


def test_svg_is_deterministic_and_marks_crossings():
    a = to_svg(K4_CROSSED)
    assert a == to_svg(K4_CROSSED)
    assert a.count('class="crossing"') == 1
    assert a.count("<polyline") == 6 and a.count("<circle") == 4


def test_edge_counts_and_restrict():
    assert edge_crossing_counts(K4_CROSSED) == [0, 0, 0, 0, 1, 1]
    sub = K4_CROSSED.restrict([0, 1, 2, 3])
    assert compute_crossings(sub) == []
