"""Timing of the fast algorithm on planted worst-case instances."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .fast import mobius_fast
from .instances import both_ends, long_tail, random_perm
from .perm import Perm, is_monotone


@dataclass
class BenchRow:
    n: int
    k: int
    case: str
    mu: int
    seconds: float


def worst_case(rng: random.Random, n: int, k: int) -> tuple[Perm, Perm]:
    """Non-monotone sigma planted at both ends of a random tau."""
    while True:
        sigma = random_perm(rng, k)
        if k < 3 or not is_monotone(sigma):
            break
    return sigma, both_ends(rng, n, sigma)


def time_pair(sigma: Perm, tau: Perm, repeats: int = 3):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = mobius_fast(sigma, tau)
        best = min(best, time.perf_counter() - t0)
    return res, best


def run(sizes: Sequence[int], seed: int = 0, sigma_len: int = 3,
        kind: str = "worst", repeats: int = 3) -> list[BenchRow]:
    rng = random.Random(seed)
    rows = []
    for n in sizes:
        if kind == "worst":
            sigma, tau = worst_case(rng, n, sigma_len)
        elif kind == "long-tail":
            sigma, tau = long_tail(rng, n, sigma_len)
        else:
            raise ValueError(f"unknown instance kind {kind!r}")
        res, secs = time_pair(sigma, tau, repeats)
        rows.append(BenchRow(n, len(sigma), res.case.value, res.value, secs))
    return rows


def loglog_slope(rows: Sequence[BenchRow]) -> float:
    """Least-squares slope of log(seconds) against log(n); nan with < 2 sizes."""
    if len(rows) < 2:
        return math.nan
    x = np.log([r.n for r in rows])
    y = np.log([r.seconds for r in rows])
    return float(np.polyfit(x, y, 1)[0])


def format_table(rows: Sequence[BenchRow], sep: str = "\t") -> str:
    lines = [sep.join(["n", "k", "case", "mu", "seconds"])]
    for r in rows:
        lines.append(sep.join([str(r.n), str(r.k), r.case, str(r.mu), f"{r.seconds:.6f}"]))
    return "\n".join(lines)
