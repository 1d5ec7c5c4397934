"""Monte-Carlo sweeps of the CFS property over Erdos-Renyi graphs.

Every sample draws from its own Philox stream keyed by
``(seed, n, p_index, sample_index)``, so results do not depend on the order
or parallelism of sampling.
"""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import CoxeterGraph, is_nontrivial_join
from .racg import is_cfs

__all__ = ["SweepRow", "CSV_COLUMNS", "sample_gnp", "cfs_rate", "threshold_sweep",
           "sweep_trend", "rows_to_csv", "exponent_grid"]

CSV_COLUMNS = ("n", "p", "samples", "cfs_count", "join_count", "fraction", "seed")


def _rng(seed) -> np.random.Generator:
    entropy = list(seed) if isinstance(seed, (tuple, list)) else seed
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def sample_gnp(n: int, p: float, seed) -> CoxeterGraph:
    """G(n, p) on vertices ``0..n-1`` with every edge labeled 2.

    ``seed`` is an int or a tuple of non-negative ints.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    pairs = list(combinations(range(n), 2))
    keep = _rng(seed).random(len(pairs)) < p
    names = [str(i) for i in range(n)]
    return CoxeterGraph(names, [(names[a], names[b]) for (a, b), k in zip(pairs, keep) if k])


@dataclass(frozen=True)
class SweepRow:
    n: int
    p: float
    samples: int
    cfs_count: int
    join_count: int
    fraction: float
    seed: int
    wall_clock: float = 0.0

    def csv_values(self) -> list:
        return [self.n, repr(float(self.p)), self.samples, self.cfs_count, self.join_count,
                repr(float(self.fraction)), self.seed]


def cfs_rate(n: int, p: float, samples: int, seed: int, p_index: int = 0) -> SweepRow:
    """Fraction of ``samples`` draws of G(n, p) that are CFS (no cone reduction)."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    t0 = time.perf_counter()
    cfs = joins = 0
    for i in range(samples):
        g = sample_gnp(n, p, (seed, n, p_index, i))
        cfs += is_cfs(g)[0]
        joins += is_nontrivial_join(g)[0]
    return SweepRow(n, float(p), samples, cfs, joins, cfs / samples, seed,
                    time.perf_counter() - t0)


def exponent_grid(n: int, lo: float, hi: float, count: int) -> list[float]:
    """``p = n**e`` for ``count`` exponents evenly spaced on ``[lo, hi]``."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [float(n ** e) for e in np.linspace(lo, hi, count)]


def threshold_sweep(n: int, p_list: Sequence[float], samples: int, seed: int) -> list[SweepRow]:
    if not len(p_list):
        raise ValueError("p_list is empty")
    return [cfs_rate(n, p, samples, seed, k) for k, p in enumerate(p_list)]


def sweep_trend(rows: Sequence[SweepRow]) -> float:
    """CFS fraction at the largest ``p`` minus the fraction at the smallest."""
    lo = min(rows, key=lambda r: r.p)
    hi = max(rows, key=lambda r: r.p)
    return hi.fraction - lo.fraction


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_values())
    return buf.getvalue()
