"""Brute-force intervals of the consecutive-pattern poset and their Möbius values.

Everything here is computed straight from the definitions and serves as the
ground truth the fast algorithm is checked against.  A permutation z lies
below t exactly when z is the standard form of some contiguous window of t,
so an interval [sigma, tau] is found among the O(n^2) windows of tau.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .perm import InvalidInput, NotContained, Perm, format_perm, standardize, trim

ORACLE_MAX_N = 60


class OracleTooLarge(RuntimeError):
    pass


def sort_key(p: Perm) -> tuple[int, Perm]:
    return (len(p), p)


def covered_by(t: Sequence[int]) -> set[Perm]:
    """The permutations covered by ``t``: drop its first or its last letter."""
    if len(t) < 2:
        raise InvalidInput("a permutation of length 1 covers nothing")
    return {trim(t, True, False), trim(t, False, True)}


class WindowPoset:
    """All patterns below ``tau`` with their down-sets.

    Built once per tau so that many intervals [sigma, tau] can share it.
    """

    def __init__(self, tau: Sequence[int], max_n: int = ORACLE_MAX_N):
        tau = tuple(tau)
        if len(tau) > max_n:
            raise OracleTooLarge(f"|tau| = {len(tau)} exceeds oracle bound {max_n}")
        self.tau = tau
        n = len(tau)
        # window (i, j) covers tau[i:j]
        pattern = {(i, j): standardize(tau[i:j])
                   for i in range(n) for j in range(i + 1, n + 1)}
        self.down: dict[Perm, frozenset[Perm]] = {}
        for (i, j), p in pattern.items():
            if p not in self.down:
                self.down[p] = frozenset(pattern[a, b] for a in range(i, j)
                                         for b in range(a + 1, j + 1))

    def leq(self, a: Perm, b: Perm) -> bool:
        return a in self.down[b]

    def interval(self, sigma: Sequence[int]) -> list[Perm]:
        """Elements of [sigma, tau] sorted by (length, values)."""
        sigma = tuple(sigma)
        if sigma not in self.down:
            raise NotContained(f"{format_perm(sigma)} does not occur in {format_perm(self.tau)}")
        return sorted((z for z, d in self.down.items() if sigma in d), key=sort_key)

    def mobius_from(self, sigma: Sequence[int]) -> dict[Perm, int]:
        """mu(sigma, z) for every z in [sigma, tau], bottom-up."""
        elems = self.interval(sigma)
        mu: dict[Perm, int] = {}
        for z in elems:
            if z == elems[0]:
                mu[z] = 1
            else:
                mu[z] = -sum(m for w, m in mu.items() if w in self.down[z])
        return mu

    def mobius_to(self, sigma: Sequence[int]) -> dict[Perm, int]:
        """mu(z, tau) for every z in [sigma, tau], top-down."""
        elems = self.interval(sigma)
        mu: dict[Perm, int] = {}
        for z in reversed(elems):
            if z == self.tau:
                mu[z] = 1
            else:
                mu[z] = -sum(m for w, m in mu.items() if z in self.down[w])
        return mu


@dataclass
class Interval:
    sigma: Perm
    tau: Perm
    elements: list[Perm]
    _poset: WindowPoset = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.tau) - len(self.sigma)

    def leq(self, a: Perm, b: Perm) -> bool:
        return self._poset.leq(a, b)

    def __contains__(self, z) -> bool:
        return tuple(z) in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass
class HasseDiagram:
    sigma: Perm
    tau: Perm
    nodes: list[Perm]
    edges: list[tuple[Perm, Perm]]

    def to_record(self) -> dict:
        return {
            "sigma": format_perm(self.sigma),
            "tau": format_perm(self.tau),
            "rank": len(self.tau) - len(self.sigma),
            "nodes": [format_perm(z) for z in self.nodes],
            "edges": [[format_perm(u), format_perm(v)] for u, v in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=2)

    def to_dot(self) -> str:
        base = len(self.sigma)
        lines = [f'digraph "interval {format_perm(self.sigma)} {format_perm(self.tau)}" {{',
                 "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
        for z in self.nodes:
            lines.append(f'  "{format_perm(z)}" [label="{format_perm(z)}", rank={len(z) - base}];')
        for u, v in self.edges:
            lines.append(f'  "{format_perm(u)}" -> "{format_perm(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_interval(sigma: Sequence[int], tau: Sequence[int],
                   max_n: int = ORACLE_MAX_N) -> Interval:
    poset = WindowPoset(tau, max_n)
    sigma = tuple(sigma)
    return Interval(sigma, poset.tau, poset.interval(sigma), poset)


def hasse_edges(iv: Interval) -> HasseDiagram:
    members = set(iv.elements)
    edges = []
    for v in iv.elements:
        if len(v) == len(iv.sigma):
            continue
        for u in sorted(covered_by(v) & members, key=sort_key):
            edges.append((u, v))
    edges.sort(key=lambda e: (sort_key(e[0]), sort_key(e[1])))
    return HasseDiagram(iv.sigma, iv.tau, list(iv.elements), edges)


def mobius_oracle(sigma: Sequence[int], tau: Sequence[int], max_n: int = ORACLE_MAX_N) -> int:
    sigma, tau = tuple(sigma), tuple(tau)
    if sigma == tau:
        return 1
    if len(tau) > max_n:
        raise OracleTooLarge(f"|tau| = {len(tau)} exceeds oracle bound {max_n}")
    poset = WindowPoset(tau, max_n)
    if sigma not in poset.down:
        return 0
    return poset.mobius_from(sigma)[tau]


def mobius_oracle_topdown(sigma: Sequence[int], tau: Sequence[int],
                          max_n: int = ORACLE_MAX_N) -> int:
    sigma, tau = tuple(sigma), tuple(tau)
    if sigma == tau:
        return 1
    if len(tau) > max_n:
        raise OracleTooLarge(f"|tau| = {len(tau)} exceeds oracle bound {max_n}")
    poset = WindowPoset(tau, max_n)
    if sigma not in poset.down:
        return 0
    return poset.mobius_to(sigma)[sigma]
