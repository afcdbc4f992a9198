from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from kplanar import bounds as B

# (a, b) of the crossing lemma per setting, and the two crossing-number slopes
LEMMA = {"c3free": (3, F(9)), "c4free": (2, F(65, 14)), "girth5": (2, F(61, 15))}
CR_SLOPE = {2: F(10, 3), 3: F(33, 5)}


def lemma_c(a, b):
    return F(4 * a**3) / (27 * b**2)


def test_lemma_inputs_and_coefficients():
    for setting, (a, b) in LEMMA.items():
        assert B.lemma_inputs(setting) == (a, b)
        c, t = B.crossing_lemma_coefficient(F(a), b)
        assert c == lemma_c(a, b)
        assert t == 3 * b / (2 * a)


def test_cube_root_radicands_from_first_principles():
    got = B.cube_root_radicands()
    cases = {"c4free k=2": ("c4free", 2), "girth5 k=2": ("girth5", 2), "c3free k=3": ("c3free", 3), "c4free k=3": ("c4free", 3), "girth5 k=3": ("girth5", 3)}
    for key, (setting, k) in cases.items():
        a, b = LEMMA[setting]
        assert got[key] == CR_SLOPE[k] / lemma_c(a, b)


def test_sqrt_radicands_from_first_principles():
    for setting, r in B.sqrt_k_radicands().items():
        assert r == 1 / (2 * lemma_c(*LEMMA[setting]))


def test_cr_upper_slopes():
    assert B.cr_upper_slope(2) == F(10, 3)
    assert B.cr_upper_slope(3) == F(33, 5)
    assert B.cr_upper(2, 10) == F(10, 3) * 8


def test_root_constant_enclosure_brackets_value():
    r = B.RootConstant(F(190125, 3136), 3)
    lo, hi = r.enclosure(6)
    assert lo < hi and hi - lo <= F(1, 10**6)
    assert lo**3 <= r.radicand <= hi**3
    assert r.compare(F(3929, 1000)) < 0
    assert r.compare(F(3928, 1000)) > 0
    assert str(r) == "cbrt(190125/3136)"


@pytest.mark.parametrize("value, digits, direction, expected", [
    (F(1, 3), 2, "up", "0.34"),
    (F(1, 3), 2, "down", "0.33"),
    (F(2, 3), 2, "nearest", "0.67"),
    (F(5, 2), 1, "up", "2.5"),
    (F(-1, 3), 2, "up", "-0.33"),
])
def test_render_decimal(value, digits, direction, expected):
    assert B.render_decimal(value, digits, direction) == expected


@given(st.fractions(min_value=0, max_value=1000, max_denominator=10**4), st.integers(1, 6))
def test_rendering_is_conservative(q, digits):
    up = F(B.render_decimal(q, digits, "up"))
    down = F(B.render_decimal(q, digits, "down"))
    assert down <= q <= up
    assert up - down <= F(1, 10**digits)


@given(st.integers(2, 10**6), st.integers(2, 3))
def test_root_rendering_is_conservative(x, deg):
    r = B.RootConstant(F(x, 7), deg)
    up = F(B.render_decimal(r, 3, "up"))
    down = F(B.render_decimal(r, 3, "down"))
    assert down**deg <= r.radicand <= up**deg


def test_mu_lists_and_naive_bound():
    mu = B.mu_list("c4free", 2)
    assert [m(14) for m in mu] == [F(15, 7) * 14 - F(30, 7), F(5, 2) * 14 - 5]
    assert B.naive_cr_lower(2, mu, 14, 40) == 2 * 40 - sum(m(14) for m in mu)
    with pytest.raises(B.Unavailable):
        B.mu_list("c4free", 4)


def test_optimal_p():
    assert B.optimal_p(2, F(65, 14), 56, 195) == (1, False)
    assert B.optimal_p(3, 9, 10, 90) == (F(1, 2), False)
    p, too_big = B.optimal_p(3, 9, 10, 20)
    assert p == F(9, 4) and too_big


def test_evaluate_upper_density():
    rep = B.evaluate(B.BoundSpec(2, "c4free", "density_upper"), n=1000)
    lo, hi = rep.bound
    assert lo <= hi < 3929
    assert rep.to_json()["constant"]["radicand"] == "190125/3136"


def test_evaluate_exact_forms():
    rep = B.evaluate(B.BoundSpec(1, "c4free", "density_upper"), n=100)
    assert rep.bound == (F(245), F(245))
    cr = B.evaluate(B.BoundSpec(3, "unrestricted", "cr_upper"), n=10)
    assert cr.constant.value == F(33, 5)


def test_unavailable_cells():
    with pytest.raises(B.Unavailable):
        B.constant_for(B.BoundSpec(2, "c4free", "cr_upper"))
    with pytest.raises(ValueError):
        B.BoundSpec(2, "nonsense", "density_upper")


def test_text_table_mentions_every_reproduced_value():
    text = B.render_text(B.table_report())
    for token in ("3.93n (3.929)", "3.597n", "5.12n (5.113)", "4.933n", "4.516n", "3.19sqrt(k)n (3.182)",
                  "3.016sqrt(k)n", "2.642sqrt(k)n", "10n/3", "33n/5", "0.049", "0.054", "0.071"):
        assert token in text
