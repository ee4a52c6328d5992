"""Cross-validation of the fast algorithm against the brute-force oracle."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .fast import CarrierUniquenessError, find_carrier, mobius_fast, screen
from .perm import Perm, format_perm
from .poset import WindowPoset
from .instances import random_pair


@dataclass
class Mismatch:
    sigma: Perm
    tau: Perm
    fast: int
    oracle: int
    detail: str

    def key(self):
        return (len(self.tau), len(self.sigma), self.tau, self.sigma)

    def __str__(self) -> str:
        return (f"sigma={format_perm(self.sigma)} tau={format_perm(self.tau)} "
                f"fast={self.fast} oracle={self.oracle} ({self.detail})")


@dataclass
class Summary:
    pairs: int = 0
    distribution: Counter = field(default_factory=Counter)
    cases: Counter = field(default_factory=Counter)
    mismatches: list[Mismatch] = field(default_factory=list)

    def merge(self, other: "Summary") -> None:
        self.pairs += other.pairs
        self.distribution.update(other.distribution)
        self.cases.update(other.cases)
        self.mismatches.extend(other.mismatches)

    def report(self) -> str:
        dist = ", ".join(f"mu={v}: {self.distribution[v]}" for v in sorted(self.distribution))
        lines = [f"pairs checked: {self.pairs}", f"distribution: {dist}",
                 f"{len(self.mismatches)} mismatches"]
        if self.mismatches:
            lines.append("minimal counterexample: " + str(min(self.mismatches, key=Mismatch.key)))
        return "\n".join(lines)


def check_pair(sigma: Perm, tau: Perm, poset: WindowPoset, summary: Summary,
               verify: bool = False) -> None:
    """Compare every route for one pair and record any disagreement."""
    contained = sigma in poset.down
    if contained:
        up = poset.mobius_from(sigma)
        oracle = up[tau]
        down = poset.mobius_to(sigma)[sigma]
        total = sum(up.values())
    else:
        oracle = down = 0
        total = 0
    res = mobius_fast(sigma, tau, verify=verify)
    traced = mobius_fast(sigma, tau, use_corollary=False, verify=verify).value
    summary.pairs += 1
    summary.distribution[res.value] += 1
    summary.cases[res.case.value] += 1

    def bad(detail):
        summary.mismatches.append(Mismatch(sigma, tau, res.value, oracle, detail))

    if not res.value == oracle == down == traced:
        bad(f"topdown={down} traced={traced}")
    if res.value not in (-1, 0, 1):
        bad("value out of range")
    if contained and sigma != tau and total != 0:
        bad(f"interval sum {total}")
    if contained:
        rep = screen(sigma, tau)
        if rep.excluded_value is not None and rep.excluded_value == oracle:
            bad(f"screen excluded {rep.excluded_value}")
        if rep.forces_zero and oracle != 0:
            bad("screen forced zero")
        if verify and len(tau) - len(sigma) >= 2:
            try:
                find_carrier(sigma, tau, verify=True)
            except CarrierUniquenessError as exc:
                bad(str(exc))


def _check_taus(args) -> Summary:
    taus, verify = args
    summary = Summary()
    for tau in taus:
        poset = WindowPoset(tau)
        for sigma in sorted(poset.down, key=lambda p: (len(p), p)):
            check_pair(sigma, tau, poset, summary, verify)
    return summary


def all_perms(max_n: int) -> Iterator[Perm]:
    for n in range(1, max_n + 1):
        yield from itertools.permutations(range(1, n + 1))


def _chunks(items: Iterable, size: int) -> Iterator[list]:
    it = iter(items)
    while chunk := list(itertools.islice(it, size)):
        yield chunk


def exhaustive(max_n: int, verify: bool = False, jobs: int = 1) -> Summary:
    """Every tau with |tau| <= max_n and every sigma <= tau."""
    work = [(chunk, verify) for chunk in _chunks(all_perms(max_n), 500)]
    summary = Summary()
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            # map preserves submission order, so aggregation is deterministic
            for part in pool.map(_check_taus, work):
                summary.merge(part)
    else:
        for args in work:
            summary.merge(_check_taus(args))
    return summary


def sampled(samples: int, seed: int, max_n: int, verify: bool = False) -> Summary:
    rng = random.Random(seed)
    summary = Summary()
    for _ in range(samples):
        sigma, tau = random_pair(rng, max_n)
        check_pair(sigma, tau, WindowPoset(tau), summary, verify)
    return summary
