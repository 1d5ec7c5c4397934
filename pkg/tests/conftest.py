from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from coxdiv.graph import CoxeterGraph, cycle_graph, pair_ladder

DATA = Path(__file__).parent / "data"


def graph_from_bits(n: int, bits: int, names=None) -> CoxeterGraph:
    names = names or [str(i) for i in range(n)]
    pairs = list(combinations(range(n), 2))
    return CoxeterGraph(names, [(names[a], names[b]) for k, (a, b) in enumerate(pairs) if bits >> k & 1])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> CoxeterGraph:
    p = rng.random() if p is None else p
    names = [str(i) for i in range(n)]
    return CoxeterGraph(names, [(names[a], names[b]) for a, b in combinations(range(n), 2)
                                if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return graph_from_bits(n, bits)


@st.composite
def labeled_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    names = [chr(ord("a") + i) for i in range(n)]
    edges = []
    for a, b in combinations(names, 2):
        m = draw(st.sampled_from([None, None, 2, 3, 4, 5, 6]))
        if m is not None:
            edges.append((a, b, m))
    return CoxeterGraph(names, edges)


@pytest.fixture
def c4():
    return CoxeterGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def lad8():
    return pair_ladder(4)


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
