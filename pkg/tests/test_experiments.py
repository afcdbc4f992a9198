from fractions import Fraction as F

import numpy as np
import pytest

from kplanar import constructions as C
from kplanar.bounds import mu_list
from kplanar.drawing import DrawnGraph
from kplanar.experiments import (
    AdjacentCrossingPresent,
    InvalidConfig,
    SamplingConfig,
    _bernoulli,
    removal_audit,
    sample_induced,
)
from kplanar.graph import Graph


def k4_crossed():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    return DrawnGraph(g, ((0, 0), (2, 0), (2, 2), (0, 2)), ())


def test_expectations_on_k4():
    rep = sample_induced(k4_crossed(), SamplingConfig(F(1, 2), 2000, 1))
    assert rep.expected_crossings == F(1, 16)
    assert rep.expected_edges == F(6, 4)
    assert rep.expected_vertices == 2


def test_p_one_keeps_everything():
    rep = sample_induced(k4_crossed(), SamplingConfig(F(1), 10, 0))
    assert (rep.mean_vertices, rep.mean_edges, rep.mean_crossings) == (4, 6, 1)


def test_same_seed_same_result_and_chunking():
    d = k4_crossed()
    a = sample_induced(d, SamplingConfig(F(1, 3), 5000, 42), keep_trials=True)
    b = sample_induced(d, SamplingConfig(F(1, 3), 5000, 42), keep_trials=True)
    assert a.to_json() == b.to_json()
    assert np.array_equal(a.per_trial, b.per_trial)
    # a shorter run is a prefix of the longer one
    c = sample_induced(d, SamplingConfig(F(1, 3), 100, 42), keep_trials=True)
    assert np.array_equal(c.per_trial, a.per_trial[:100])
    assert a.per_trial_csv().splitlines()[0] == "trial,vertices,edges,crossings"


def test_exact_bernoulli_frequency():
    bg = np.random.Philox(key=[3, 0])
    draws = _bernoulli(bg, (200000, 1), F(1, 3))
    assert abs(draws.mean() - 1 / 3) < 0.005


@pytest.mark.parametrize("p, trials, seed", [(0, 10, 1), (F(3, 2), 10, 1), (F(1, 2), 0, 1), (F(1, 2), 10, -1)])
def test_bad_configs(p, trials, seed):
    with pytest.raises(InvalidConfig):
        SamplingConfig(p, trials, seed)


def test_adjacent_crossing_is_rejected():
    g = Graph.from_edges(3, [(0, 1), (0, 2)])
    d = DrawnGraph(g, ((0, 0), (2, 2), (2, 0)), ((), ((1, 3),)))
    with pytest.raises(AdjacentCrossingPresent):
        sample_induced(d, SamplingConfig(F(1, 2), 10, 1))


def test_audit_notices_a_graph_outside_the_class():
    # K4 has triangles, so the C3-free planar bound 2n - 4 does not cover it
    rep = removal_audit(k4_crossed(), mu_list("c3free", 1))
    assert rep.trace_total == 1
    assert rep.bound == 6 - (2 * 4 - 4)
    assert not rep.passed


def test_audit_trace_counts_all_crossings():
    d, _ = C.generate(C.ConstructionSpec("c4free-2planar", 3, 6, True))
    rep = removal_audit(d, mu_list("c4free", 2))
    assert rep.trace_total == 72
