import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxdiv.graph import (
    CoxeterGraph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    is_nontrivial_join,
    pair_ladder,
    path_graph,
    reduce_cone_vertices,
)
from coxdiv.racg import (
    ALL_DEGREES,
    UNBOUNDED,
    classify_racg,
    gamma_complete_word,
    is_cfs,
    max_rank_pair,
    rank_table,
    validate_gamma_complete_word,
)

from conftest import graph_from_bits, graphs
from oracles import brute_cfs, brute_rank_levels


# -- CFS -----------------------------------------------------------------------------


def test_cfs_examples(c4, c5, lad8):
    ok, wit = is_cfs(c4)
    assert ok and wit["support"] == ["a", "b", "c", "d"] and len(wit["squares"]) == 1
    assert is_cfs(c5) == (False, None)
    ok, wit = is_cfs(lad8)
    assert ok and len(wit["squares"]) == 11 and len(wit["support"]) == 8


@pytest.mark.parametrize("n", range(0, 6))
def test_cfs_exhaustive_small(n):
    # every labeled graph on n vertices
    for bits in range(1 << (n * (n - 1) // 2)):
        g = graph_from_bits(n, bits)
        assert is_cfs(g)[0] == brute_cfs(g), g


@given(g=graphs(max_n=9))
@settings(max_examples=300, deadline=None)
def test_cfs_matches_brute_force(g):
    assert is_cfs(g)[0] == brute_cfs(g)


@given(g=graphs(min_n=1, max_n=8), seed=st.integers(0, 10**6))
@settings(max_examples=150, deadline=None)
def test_cfs_isomorphism_invariant(g, seed):
    perm = list(g.vertices)
    random.Random(seed).shuffle(perm)
    h = CoxeterGraph(perm, [(u, v) for u, v, _ in g.edge_list()])
    assert is_cfs(h)[0] == is_cfs(g)[0]


# -- Gamma-complete words --------------------------------------------------------------


def test_word_examples(c4, c5):
    assert gamma_complete_word(c5) == ["1", "3", "5", "2", "4"]
    with pytest.raises(ValueError, match="join"):
        gamma_complete_word(c4)
    assert gamma_complete_word(edgeless_graph(2, ["a", "c"])) == ["a", "c"]
    with pytest.raises(ValueError):
        gamma_complete_word(edgeless_graph(1))


def test_validate_examples(c5):
    assert validate_gamma_complete_word(c5, ["1", "3", "5", "2", "4"]).valid
    bad = validate_gamma_complete_word(c5, ["1", "2", "3", "4", "5"])
    assert not bad.valid and bad.index == 1
    missing = validate_gamma_complete_word(c5, ["1", "3", "5", "2"])
    assert not missing.valid and missing.missing == ("4",)
    wrap = validate_gamma_complete_word(c5, ["1", "3", "5", "2", "4", "2"])
    assert not wrap.valid
    assert not validate_gamma_complete_word(c5, ["1", "3", "9"]).valid


@given(g=graphs(min_n=2, max_n=9))
@settings(max_examples=300, deadline=None)
def test_word_valid_on_reduced_nonjoins(g):
    g, _ = reduce_cone_vertices(g)
    if len(g) < 2 or is_nontrivial_join(g)[0]:
        return
    w = gamma_complete_word(g)
    assert validate_gamma_complete_word(g, w).valid
    assert set(w) == set(g.vertices)


# -- rank ----------------------------------------------------------------------------------


def test_rank_c5(c5):
    t = rank_table(c5)
    assert len(t.level(1)) == 5
    assert t.fixpoint and t.max_finite_rank == UNBOUNDED
    assert t.level(2) == t.level(1)


def test_rank_lad8(lad8):
    t = rank_table(lad8)
    assert {frozenset(p) for p in t.level(1)} == {
        frozenset(p) for p in [("1", "7"), ("1", "8"), ("2", "7"), ("2", "8")]}
    assert t.max_finite_rank == 1 and not t.fixpoint
    assert max_rank_pair(lad8).pair == ("1", "7")
    assert max_rank_pair(lad8).rank == 1


def test_rank_c4(c4):
    t = rank_table(c4)
    assert not t.level(1) and t.max_finite_rank == 0
    assert max_rank_pair(c4) is None


def test_vacuous_link_pair():
    # the path a-b-c-d: a's link {b} has no non-adjacent pair
    t = rank_table(path_graph(4, "abcd"), 4)
    assert ("a", "c") in t.level(3)
    p = max_rank_pair(path_graph(4, "abcd"))
    assert p.rank == UNBOUNDED and p.vacuous_link


@given(g=graphs(max_n=8), n_max=st.integers(1, 5))
@settings(max_examples=200, deadline=None)
def test_rank_matches_recursive_definition(g, n_max):
    t = rank_table(g, n_max)
    want = brute_rank_levels(g, n_max)
    for n in range(1, len(t.levels) + 1):
        assert {frozenset(p) for p in t.level(n)} == want[n - 1], n
    if t.fixpoint:
        # a stable nonempty level stays stable under the definition
        k = len(t.levels)
        assert all(want[j] == want[k - 1] for j in range(k - 1, n_max))


@given(g=graphs(max_n=10))
@settings(max_examples=200, deadline=None)
def test_rank_nesting(g):
    t = rank_table(g)
    for a, b in zip(t.levels, t.levels[1:]):
        assert set(b) <= set(a)
    for lvl in t.levels:
        assert all(not g.adjacent(u, v) for u, v in lvl)


# -- classifier ------------------------------------------------------------------------------


def test_classify_triad(c4, c5, lad8):
    r = classify_racg(c4)
    assert r.verdict == "linear" and r.witnesses["join"] == [["a", "c"], ["b", "d"]]
    r = classify_racg(lad8)
    assert r.verdict == "quadratic" and len(r.witnesses["cfs_component"]["support"]) == 8
    assert "join" not in r.witnesses
    r = classify_racg(c5)
    assert r.verdict == "at-least-cubic" and r.rank_lower_bound == ALL_DEGREES


def test_classify_degenerate():
    assert classify_racg(complete_graph(3)).verdict == "finite-group"
    assert classify_racg(edgeless_graph(0)).verdict == "finite-group"
    assert classify_racg(edgeless_graph(1)).verdict == "finite-group"
    assert classify_racg(edgeless_graph(2)).verdict == "infinite-ends"
    r = classify_racg(path_graph(3, "abc"))
    assert r.verdict == "infinite-ends" and list(r.reduction_removed) == ["b"]


def test_classify_cone_removed(c5):
    g = CoxeterGraph(list(c5.vertices) + ["x"],
                     [(u, v) for u, v, _ in c5.edge_list()] + [(v, "x") for v in c5.vertices])
    r = classify_racg(g)
    assert list(r.reduction_removed) == ["x"] and r.verdict == "at-least-cubic"


def test_report_json_key_order(c5):
    d = json.loads(classify_racg(c5).to_json())
    assert list(d) == ["verdict", "rank_lower_bound", "witnesses", "reduction_removed"]


@given(g=graphs(max_n=9))
@settings(max_examples=200, deadline=None)
def test_classify_total_and_consistent(g):
    r = classify_racg(g)
    assert r.verdict in {"finite-group", "infinite-ends", "linear", "quadratic", "at-least-cubic"}
    assert r.witnesses
    if r.verdict == "quadratic":
        assert "cfs_component" in r.witnesses and "join" not in r.witnesses
        levels = rank_table(g).levels
        assert len(levels) < 2 or not levels[1]
    assert classify_racg(g).to_json() == r.to_json()


def test_ladder_family_quadratic():
    assert classify_racg(pair_ladder(3)).verdict == "linear"  # K_{2,4}
    for k in (4, 5, 6):
        assert classify_racg(pair_ladder(k)).verdict == "quadratic"


def test_long_cycles_cubic():
    for n in (5, 6, 7, 9):
        assert classify_racg(cycle_graph(n)).verdict == "at-least-cubic"
