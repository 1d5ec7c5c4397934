import random

import numpy as np
import pytest

from coxdiv.cayley import (
    EXCEEDS_BUDGET,
    avoidant_path_length,
    ball,
    divergence_samples,
    fit_power_law,
    group,
    hdiv_estimate,
    normal_form,
    wall_of,
    word_path_walls,
    NormalWord,
)
from coxdiv.graph import edgeless_graph
from coxdiv.racg import gamma_complete_word

from oracles import grid_avoidant_distance, tits_avoidant_distance, tits_hdiv


def grid_point(g, word):
    """Coordinates of a four-cycle group element: (a,c) factor on x, (b,d) on y."""
    grp = group(g)
    letters = [grp.names[i] for i in normal_form(g, word).letters]
    fx = [c for c in letters if c in "ac"]
    fy = [c for c in letters if c in "bd"]
    x = len(fx) * (1 if fx and fx[0] == "a" else -1)
    y = len(fy) * (1 if fy and fy[0] == "b" else -1)
    return x, y


# -- avoidant paths -------------------------------------------------------------------


def test_rho_nonpositive_is_distance(c5):
    grp = group(c5)
    a, b = normal_form(c5, "1 3 5"), normal_form(c5, "2 4 1 3")
    d = grp.distance(a.letters, b.letters)
    assert avoidant_path_length(c5, a, b, rho=0, search_radius=6) == d
    assert avoidant_path_length(c5, a, b, rho=-2.5, search_radius=6) == d


def test_line_disconnects():
    line = edgeless_graph(2, ["a", "c"])
    for R in (4, 6, 10):
        assert avoidant_path_length(line, "acac", "caca", rho=1, search_radius=R) == EXCEEDS_BUDGET


def test_c4_against_grid(c4):
    got = avoidant_path_length(c4, "acac", "caca", rho=3, search_radius=8)
    assert got == grid_avoidant_distance(3, (4, 0), (-4, 0), 8) == 14


def test_c4_grid_many(c4):
    rng = random.Random(3)
    elems = ball(c4, 5).elements()
    for _ in range(40):
        a, b = rng.sample(elems, 2)
        pa, pb = grid_point(c4, a.letters), grid_point(c4, b.letters)
        rho = rng.randint(0, min(abs(pa[0]) + abs(pa[1]), abs(pb[0]) + abs(pb[1])))
        want = grid_avoidant_distance(rho, pa, pb, 7)
        got = avoidant_path_length(c4, a, b, rho=rho, search_radius=7)
        assert got == (EXCEEDS_BUDGET if want is None else want)


def test_grid_coordinates_are_isometric(c4):
    grp = group(c4)
    elems = ball(c4, 4).elements()
    for a in elems[:30]:
        for b in elems[:30]:
            pa, pb = grid_point(c4, a.letters), grid_point(c4, b.letters)
            assert grp.distance(a.letters, b.letters) == abs(pa[0] - pb[0]) + abs(pa[1] - pb[1])


def test_monotone_in_rho(c5):
    grp = group(c5)
    rng = random.Random(9)
    elems = [w for w in ball(c5, 4).elements() if w.length == 4]
    for _ in range(15):
        a, b = rng.sample(elems, 2)
        d = grp.distance(a.letters, b.letters)
        prev = d
        for rho in (0, 1, 2, 3, 4):
            x = avoidant_path_length(c5, a, b, rho=rho, search_radius=6)
            if x == EXCEEDS_BUDGET:
                break
            assert x >= prev >= d
            prev = x


def test_preconditions(c5):
    with pytest.raises(ValueError):
        avoidant_path_length(c5, "1", "3", rho=3, search_radius=4)
    with pytest.raises(ValueError):
        avoidant_path_length(c5, "1 3 1 3", "3", rho=0, search_radius=2)


def test_lad8_against_tits(lad8):
    a = normal_form(lad8, "1 7 1 7")
    b = normal_form(lad8, "7 1 7 1")
    got = avoidant_path_length(lad8, a, b, rho=2, search_radius=4)
    want = tits_avoidant_distance(lad8, a.letters, b.letters, 2, 4)
    assert got == want == 20


# -- divergence samples --------------------------------------------------------------------


def test_samples_c4(c4):
    s = divergence_samples(c4, "a", "c", [1, 2, 3, 4, 5, 6])
    assert s[0].path_length >= 4 and s[0].endpoint_distance == 4
    assert [x.path_length for x in s] == [6 * r for r in range(1, 7)]
    for x in s:
        assert x.k == 2 * x.r and x.rho == x.r and x.path_length >= x.endpoint_distance


def test_samples_line():
    line = edgeless_graph(2, ["a", "c"])
    assert all(x.path_length == EXCEEDS_BUDGET for x in divergence_samples(line, "a", "c", [1, 2, 3, 4]))


def test_samples_lad8_quadratic_growth(lad8):
    lengths = [x.path_length for x in divergence_samples(lad8, "1", "7", [2, 3, 4])]
    assert lengths == [20, 36, 56]
    d1 = np.diff(lengths)
    assert (d1 > 0).all() and np.diff(d1).tolist() == [4]


def test_samples_margin_independent(lad8):
    a = divergence_samples(lad8, "1", "7", [2], search_margin=0)
    b = divergence_samples(lad8, "1", "7", [2], search_margin=4)
    assert a[0].path_length == b[0].path_length


def test_samples_reject_adjacent(c4):
    with pytest.raises(ValueError):
        divergence_samples(c4, "a", "b", [2])
    with pytest.raises(ValueError):
        divergence_samples(c4, "a", "c", [2], delta=0)


# -- power-law fit ---------------------------------------------------------------------------


def test_fit_examples():
    assert fit_power_law([(2, 4), (4, 8), (8, 16)]).slope == pytest.approx(1.0)
    assert fit_power_law([(2, 4), (4, 16), (8, 64)]).slope == pytest.approx(2.0)
    with pytest.raises(ValueError):
        fit_power_law([(2, 4), (4, 8)])
    with pytest.raises(ValueError):
        fit_power_law([(2, 4), (4, 8), (8, EXCEEDS_BUDGET)])


def test_fit_residual():
    f = fit_power_law([(2, 4), (4, 8), (8, 16)])
    assert f.max_residual == pytest.approx(0.0, abs=1e-12) and f.n == 3


# -- HDiv -------------------------------------------------------------------------------------


@pytest.fixture
def c5_walls(c5):
    edges = word_path_walls(c5, gamma_complete_word(c5))
    (ye, ys), (ze, zs) = edges[0], edges[-1]
    return wall_of(c5, NormalWord(ye), ys, 8), wall_of(c5, NormalWord(ze), zs, 8)


def test_hdiv_zero_radius_is_gap(c5, c5_walls):
    y, z = c5_walls
    d = hdiv_estimate(c5, y, z, 0, 8, detail=True)
    assert d["value"] == d["gap"]


def test_hdiv_c4_constant(c4):
    y = wall_of(c4, "", "a", 8)
    z = wall_of(c4, "ac", "a", 8)
    vals = [hdiv_estimate(c4, y, z, r, 8) for r in (0, 1, 2, 3)]
    assert len(set(vals)) == 1


def test_hdiv_c5_increasing(c5, c5_walls):
    y, z = c5_walls
    vals = [hdiv_estimate(c5, y, z, r, 8) for r in (0, 1, 2, 3, 4)]
    assert vals == sorted(vals) and vals[-1] > vals[0]
    assert vals == [3, 4, 9, 22, 58]
    assert hdiv_estimate(c5, y, z, 4, 10) == 58


@pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
def test_hdiv_c5_against_tits(c5, r):
    edges = word_path_walls(c5, gamma_complete_word(c5))
    (ye, ys), (ze, zs) = edges[0], edges[-1]
    y, z = wall_of(c5, NormalWord(ye), ys, 7), wall_of(c5, NormalWord(ze), zs, 7)
    gap, values = tits_hdiv(c5, (ye, ys), (ze, zs), r, 7)
    d = hdiv_estimate(c5, y, z, r, 7, detail=True)
    assert d["gap"] == gap and values == {d["value"]}


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_hdiv_c4_against_tits(c4, r):
    ye, ze = normal_form(c4, "").letters, normal_form(c4, "ac").letters
    y, z = wall_of(c4, NormalWord(ye), 0, 7), wall_of(c4, NormalWord(ze), 0, 7)
    gap, values = tits_hdiv(c4, (ye, 0), (ze, 0), r, 7)
    assert values == {hdiv_estimate(c4, y, z, r, 7)} == {1} and gap == 1


def test_hdiv_rejects_crossing(c4):
    wa = wall_of(c4, "", "a", 6)
    wb = wall_of(c4, "", "b", 6)
    with pytest.raises(ValueError):
        hdiv_estimate(c4, wa, wb, 1, 6)
    with pytest.raises(ValueError):
        hdiv_estimate(c4, wa, wa, 1, 6)


def test_word_path_walls_midpoint(c5):
    w = gamma_complete_word(c5)
    edges = word_path_walls(c5, w)
    assert len(edges) == len(w)
    grp = group(c5)
    assert [grp.names[s] for _, s in edges] == w
    # consecutive edges share an endpoint along the path
    x = grp.inverse(grp.reduce(grp.letters(w[: len(w) // 2])))
    for (e, s), letter in zip(edges, w):
        y = grp.reduce(x + (s,))
        assert e in (x, y) and len(e) == min(len(x), len(y))
        x = y
