import random
from fractions import Fraction as F

import pytest

from _oracles import random_drawing, triangulation
from kplanar import constructions as C
from kplanar.discharging import (
    Infeasible,
    build_ledger,
    charge_sum_check,
    classify_face,
    density_formula_check,
    discharge_feasibility,
)
from kplanar.drawing import DrawnGraph, local_crossing_number, planarize
from kplanar.graph import Graph, girth, has_c4


def k4_crossed():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    return DrawnGraph(g, ((0, 0), (2, 0), (2, 2), (0, 2)), ())


def test_k4_ledger():
    led = build_ledger(planarize(k4_crossed()), F(1, 2))
    assert led.census() == {"type2_triangle": 4, "quad": 1}
    cs = charge_sum_check(led)
    assert cs.passed and cs.lhs == 8
    # the outer face 0-1-2-3 has charge 4 + 4 - 4
    assert max(r.charge for r in led.rows) == 4


def test_face_classes():
    assert classify_face(3, 3, False) == "type1_triangle"
    assert classify_face(3, 2, False) == "type2_triangle"
    assert classify_face(3, 1, False) == "one_vertex_triangle"
    assert classify_face(4, 2, False) == "quad"
    assert classify_face(7, 4, False) == "big"
    assert classify_face(2, 1, False) == "degenerate"
    assert classify_face(9, 9, True) == "boundary"


def test_infeasible_alpha_is_reported():
    d, _ = C.generate(C.ConstructionSpec("c4free-1planar", 8, 8, True))
    with pytest.raises(Infeasible) as exc:
        discharge_feasibility(build_ledger(planarize(d), F(19, 20)))
    assert exc.value.shortfall > 0 and exc.value.unsatisfied


def test_plan_leaves_every_face_nonnegative():
    d, _ = C.generate(C.ConstructionSpec("girth5-1planar", 3, 6, True))
    plan = discharge_feasibility(build_ledger(planarize(d), F(5, 6)))
    assert all(v >= 0 for v in plan.final.values())
    assert all(x > 0 for _, _, x in plan.transfers)


def test_triangle_is_the_small_exception():
    g = Graph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    d = DrawnGraph(g, ((0, 0), (1, 0), (0, 1)), ())
    with pytest.raises(Infeasible):
        discharge_feasibility(build_ledger(planarize(d), F(4, 5)))


def test_density_formula_on_triangulations_is_tight():
    rng = random.Random(3)
    for n in (4, 7, 12, 25):
        d = triangulation(rng, n)
        assert d.graph.m == 3 * n - 6
        rep = density_formula_check(planarize(d), 3)
        assert rep.passed and rep.rhs == 3 * (n - 2)


def test_density_formula_general_t():
    rng = random.Random(4)
    for _ in range(30):
        d = random_drawing(rng)
        p = planarize(d)
        for t in (1, 2, 3, 4):
            assert density_formula_check(p, t).passed


def test_random_c4_free_1_plane_drawings_discharge():
    rng = random.Random(8)
    ok = lambda d: d.graph.n >= 4 and not has_c4(d.graph) and local_crossing_number(d) <= 1
    for _ in range(40):
        d = random_drawing(rng, p=0.6, accept=ok)
        discharge_feasibility(build_ledger(planarize(d), F(4, 5)))


def test_random_girth5_1_plane_drawings_discharge():
    rng = random.Random(9)
    ok = lambda d: girth(d.graph) >= 5 and local_crossing_number(d) <= 1
    for _ in range(40):
        d = random_drawing(rng, p=0.6, accept=ok)
        discharge_feasibility(build_ledger(planarize(d), F(5, 6)))
