"""Seeded generators of (sigma, tau) pairs used by crosscheck, bench and tests."""

from __future__ import annotations

import random
from typing import Sequence

from .perm import Perm, occurrences, standardize, tails


def random_perm(rng: random.Random, n: int) -> Perm:
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return tuple(p)


def plant(tau: Sequence[int], sigma: Sequence[int], pos: int) -> Perm:
    """Rearrange the window of ``tau`` starting at 0-based ``pos`` into the order of sigma.

    The window keeps its own set of values, so the result is still a permutation.
    """
    t = list(tau)
    k = len(sigma)
    vals = sorted(t[pos:pos + k])
    t[pos:pos + k] = [vals[v - 1] for v in sigma]
    return tuple(t)


def random_pair(rng: random.Random, max_n: int) -> tuple[Perm, Perm]:
    """Mostly contained pairs (a window of tau), sometimes an unrelated sigma."""
    n = rng.randint(1, max_n)
    tau = random_perm(rng, n)
    k = rng.randint(1, n)
    if rng.random() < 0.2:
        return random_perm(rng, k), tau
    i = rng.randint(0, n - k)
    return standardize(tau[i:i + k]), tau


def both_ends(rng: random.Random, n: int, sigma: Sequence[int]) -> Perm:
    """tau of length n with sigma planted at both ends and still present inside.

    Such pairs have tails (0, 0) and reach the carrier scan, which is the
    worst case for the fast algorithm.
    """
    k = len(sigma)
    if n < 2 * k + 1:
        raise ValueError("need n >= 2|sigma| + 1")
    for _ in range(10_000):
        tau = plant(plant(random_perm(rng, n), sigma, 0), sigma, n - k)
        if occurrences(sigma, standardize(tau[1:-1])):
            return tau
    raise RuntimeError(f"cannot place {sigma} inside a tau of length {n}")


def long_tail(rng: random.Random, n: int, k: int) -> tuple[Perm, Perm]:
    """Pair where sigma occurs at least twice and some tail has length >= 2."""
    if n < 2 * k + 2:
        raise ValueError("need n >= 2k + 2")
    while True:
        sigma = random_perm(rng, k)
        p1 = rng.randint(0, n - 2 * k)
        p2 = rng.randint(p1 + k, n - k)
        tau = plant(plant(random_perm(rng, n), sigma, p1), sigma, p2)
        tp = tails(sigma, tau)
        if len(occurrences(sigma, tau)) >= 2 and max(tp.left, tp.right) >= 2:
            return sigma, tau


def single_occurrence(rng: random.Random, sigma: Sequence[int], left: int, right: int) -> Perm:
    """tau = w1 sigma w2 with |w1| = left, |w2| = right and sigma occurring once."""
    n = left + len(sigma) + right
    for _ in range(100_000):
        tau = plant(random_perm(rng, n), sigma, left)
        if len(occurrences(sigma, tau)) == 1:
            return tau
    raise RuntimeError(f"no single-occurrence tau found for tails ({left}, {right})")
