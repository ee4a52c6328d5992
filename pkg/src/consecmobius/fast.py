"""Fast Möbius function of consecutive-pattern intervals.

The dispatcher resolves [sigma, tau] by occurrence count, rank, tails and
whether sigma sits in the interior of tau.  What is left is decided by the
carrier element: the unique bifix pattern kappa of tau with
sigma <= kappa < ptau, taup and kappa not below ptp.  No carrier means the
value is 0; otherwise mu(sigma, tau) = mu(sigma, kappa) and the search repeats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .perm import (InvalidInput, NotContained, Perm, TailProfile, contains,
                   format_perm, is_monotone, is_monotone_alternating,
                   occurrences, parse_perm, standardize)


class Case(str, enum.Enum):
    NOT_CONTAINED = "not-contained"
    EQUAL = "equal"
    SMALL_RANK = "small-rank"
    ONE_OCCURRENCE = "one-occurrence"
    INTERIOR_ABSENT = "interior-absent"
    LONG_TAIL = "long-tail"
    NO_CARRIER = "no-carrier"
    VIA_SOCLE = "via-socle"


class CarrierUniquenessError(AssertionError):
    pass


@dataclass(frozen=True)
class MobiusResult:
    sigma: Perm
    tau: Perm
    value: int
    case: Case
    carrier_chain: tuple[Perm, ...] = ()

    @property
    def socle(self) -> Optional[Perm]:
        return self.carrier_chain[-1] if self.carrier_chain else None

    def to_record(self) -> dict:
        return {
            "sigma": format_perm(self.sigma),
            "tau": format_perm(self.tau),
            "mu": self.value,
            "case": self.case.value,
            "carrier_chain": [format_perm(k) for k in self.carrier_chain],
            "socle": format_perm(self.socle) if self.socle else None,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "MobiusResult":
        return cls(parse_perm(rec["sigma"]), parse_perm(rec["tau"]), int(rec["mu"]),
                   Case(rec["case"]), tuple(parse_perm(k) for k in rec["carrier_chain"]))


@dataclass(frozen=True)
class CarrierSearchReport:
    prefix_chain: tuple[Perm, ...]
    suffix_chain: tuple[Perm, ...]
    carrier: Optional[Perm]


@dataclass(frozen=True)
class ScreenReport:
    tails: TailProfile
    tail_sum: Optional[int]
    excluded_value: Optional[int] = None
    forces_zero: bool = False
    omega: Optional[Perm] = None
    alpha: Optional[Perm] = None
    beta: Optional[Perm] = None
    reasons: tuple[str, ...] = field(default=(), compare=False)

    def to_record(self) -> dict:
        fmt = lambda p: format_perm(p) if p else None  # noqa: E731
        return {
            "tails": [self.tails.left, self.tails.right],
            "tail_sum": self.tail_sum,
            "excluded_value": self.excluded_value,
            "forces_zero": self.forces_zero,
            "omega": fmt(self.omega),
            "alpha": fmt(self.alpha),
            "beta": fmt(self.beta),
            "reasons": list(self.reasons),
        }


def mobius_small_rank(sigma: Sequence[int], tau: Sequence[int]) -> int:
    """mu for rank <= 2; at rank 2 sigma must occur at least twice in tau."""
    r = len(tau) - len(sigma)
    if r < 0 or r > 2:
        raise InvalidInput(f"rank {r} outside 0..2")
    if r == 0:
        return 1
    if r == 1:
        return -1
    return 0 if is_monotone(tau) else 1


def mobius_one_occurrence(tp: TailProfile) -> int:
    if (tp.left, tp.right) in {(0, 0), (1, 1)}:
        return 1
    if (tp.left, tp.right) in {(0, 1), (1, 0)}:
        return -1
    return 0


class _Affixes:
    """Prefix/suffix bifix tests on one tau, via argsort of the two ends."""

    def __init__(self, tau: Sequence[int]):
        self.arr = np.asarray(tau)
        self.n = len(tau)

    def is_bifix(self, k: int) -> bool:
        a = self.arr
        return np.array_equal(np.argsort(a[:k]), np.argsort(a[self.n - k:]))

    def prefix(self, k: int) -> Perm:
        return standardize(self.arr[:k].tolist())

    def suffix(self, k: int) -> Perm:
        return standardize(self.arr[self.n - k:].tolist())


def _chain(sigma: Perm, ptp: Perm, pattern, hi: int) -> tuple[Perm, ...]:
    # Members are pattern(L) for L in (lo, hi] where both "sigma <= pattern(L)"
    # and "pattern(L) not <= ptp" are upward closed in L, so binary search lo.
    def ok(L):
        p = pattern(L)
        return contains(sigma, p) and not contains(p, ptp)

    if hi < len(sigma) or not ok(hi):
        return ()
    lo, top = len(sigma) - 1, hi  # ok(lo) false by convention, ok(top) true
    while top - lo > 1:
        mid = (lo + top) // 2
        if ok(mid):
            top = mid
        else:
            lo = mid
    return tuple(pattern(L) for L in range(top, hi + 1))


def find_carrier(sigma: Sequence[int], tau: Sequence[int], *, verify: bool = False,
                 chains: bool = False) -> CarrierSearchReport:
    """Search the carrier element of [sigma, tau] by descending prefix length.

    ``verify`` keeps scanning after the first acceptance and raises
    CarrierUniquenessError on a second one.  ``chains`` also reports the
    prefix/suffix chains Cp and pC (ascending length).
    """
    sigma, tau = tuple(sigma), tuple(tau)
    k, n = len(sigma), len(tau)
    if n - k < 2 or not contains(sigma, tau):
        raise InvalidInput("carrier search needs sigma <= tau with rank >= 2")
    aff = _Affixes(tau)
    ptp = standardize(tau[1:-1])
    carrier = None
    for L in range(n - 2, k - 1, -1):
        if not aff.is_bifix(L):
            continue
        cand = aff.prefix(L)
        if not contains(sigma, cand):
            continue
        if (cand == ptp) if L == n - 2 else contains(cand, ptp):
            continue
        if carrier is not None:
            raise CarrierUniquenessError(
                f"two carriers {format_perm(carrier)} and {format_perm(cand)} "
                f"in [{format_perm(sigma)}, {format_perm(tau)}]")
        carrier = cand
        if not verify:
            break
    prefix_chain = suffix_chain = ()
    if chains:
        prefix_chain = _chain(sigma, ptp, aff.prefix, n - 2)
        suffix_chain = _chain(sigma, ptp, aff.suffix, n - 2)
    return CarrierSearchReport(prefix_chain, suffix_chain, carrier)


def _dispatch(sigma: Perm, tau: Perm, use_corollary: bool, verify: bool):
    """One level of the case analysis: (value, case, carrier) with value None
    when the answer is mu(sigma, carrier)."""
    occ = occurrences(sigma, tau)
    if not occ:
        return 0, Case.NOT_CONTAINED, None
    if sigma == tau:
        return 1, Case.EQUAL, None
    k, n = len(sigma), len(tau)
    tp = TailProfile(occ[0] - 1, n - (occ[-1] + k - 1))
    # one occurrence first: the rank-2 rule assumes both end deletions contain sigma
    if len(occ) == 1:
        return mobius_one_occurrence(tp), Case.ONE_OCCURRENCE, None
    if n - k <= 2:
        return mobius_small_rank(sigma, tau), Case.SMALL_RANK, None
    if use_corollary and (tp.left >= 2 or tp.right >= 2):
        return 0, Case.LONG_TAIL, None
    if not contains(sigma, standardize(tau[1:-1])):
        # sigma sits only at the two ends, so sigma is itself the carrier
        return 1, Case.INTERIOR_ABSENT, sigma
    carrier = find_carrier(sigma, tau, verify=verify).carrier
    if carrier is None:
        return 0, Case.NO_CARRIER, None
    return None, Case.VIA_SOCLE, carrier


def mobius_fast(sigma: Sequence[int], tau: Sequence[int], *, use_corollary: bool = True,
                verify: bool = False) -> MobiusResult:
    """Möbius function mu(sigma, tau) with the case that decided it.

    With ``use_corollary=False`` intervals with a long tail are resolved
    through the carrier recursion instead of being short-circuited to 0,
    which exposes their carrier chain.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    chain: list[Perm] = []
    top_case = None
    cur = tau
    while True:
        value, case, carrier = _dispatch(sigma, cur, use_corollary, verify)
        if top_case is None:
            top_case = case
        if carrier is not None:
            chain.append(carrier)
        if value is not None:
            return MobiusResult(sigma, tau, value, top_case, tuple(chain))
        cur = carrier


def socle_chain(sigma: Sequence[int], tau: Sequence[int]) -> list[Perm]:
    """Successive carriers of [sigma, tau], [sigma, kappa1], ... ending at the socle."""
    return list(mobius_fast(sigma, tau, use_corollary=False).carrier_chain)


def _bifix_lengths(tau: Perm, lo: int, hi: int) -> dict[int, Perm]:
    aff = _Affixes(tau)
    return {L: aff.prefix(L) for L in range(max(lo, 1), min(hi, len(tau)) + 1)
            if aff.is_bifix(L)}


def screen(sigma: Sequence[int], tau: Sequence[int]) -> ScreenReport:
    """Necessary conditions on mu(sigma, tau) for tails of length at most 1.

    Only diagnostic: it may exclude one value or force 0, never decides mu.
    The bifix propositions are applied when sigma occurs at least twice and
    the rank is at least 3.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    occ = occurrences(sigma, tau)
    if not occ:
        raise NotContained(f"{format_perm(sigma)} does not occur in {format_perm(tau)}")
    k, n = len(sigma), len(tau)
    tp = TailProfile(occ[0] - 1, n - (occ[-1] + k - 1))
    if tp.left >= 2 or tp.right >= 2:
        return ScreenReport(tp, None, forces_zero=True, reasons=("long tail",))
    x = tp.total
    if len(occ) < 2 or n - k < 3:
        return ScreenReport(tp, x)

    bifix = _bifix_lengths(tau, k, k + 2)
    # with one tail, the side opposite the tail carries sigma; read the
    # "suffix" conditions on that side
    sigma_right = x != 1 or tp.left == 1

    def near_end(p: Perm, L: int) -> Perm:
        return standardize(p[len(p) - L:] if sigma_right else p[:L])

    reasons = []
    excluded = None
    sign = (-1) ** (x + 1)
    if x == 0 and not (k + 1 in bifix and is_monotone(bifix[k + 1])):
        excluded = sign
        reasons.append("no monotone bifix of length |sigma|+1")
    elif x == 1 and not (k + 2 in bifix and is_monotone(near_end(bifix[k + 2], k + 1))):
        excluded = sign
        reasons.append("no bifix of length |sigma|+2 with monotone end of length |sigma|+1")
    elif x == 2:
        excluded = sign
        reasons.append("two tails of length 1")
    end = standardize(tau[n - (k + x):] if sigma_right else tau[:k + x])
    if excluded is None and not is_monotone(end):
        excluded = sign
        reasons.append("non-monotone end segment of length |sigma|+x")

    forces_zero = False
    if x == 0:
        chain = socle_chain(sigma, tau)
        sigma_is_socle = bool(chain) and chain[-1] == sigma
        if not sigma_is_socle and not (
                (k + 1 in bifix and is_monotone(bifix[k + 1]))
                or (k + 2 in bifix and is_monotone_alternating(bifix[k + 2]))):
            forces_zero = True
            reasons.append("no monotone or monotone alternating short bifix")
    elif x == 1:
        if k + 1 not in bifix and not (
                k + 2 in bifix and is_monotone(near_end(bifix[k + 2], k + 1))):
            forces_zero = True
            reasons.append("no bifix of length |sigma|+1 or suitable |sigma|+2")
    elif k + 2 not in bifix:
        forces_zero = True
        reasons.append("no bifix of length |sigma|+2")

    omega = alpha = beta = None
    containing = [L for L in sorted(bifix, reverse=True) if contains(sigma, bifix[L])]
    if containing:
        L = containing[0]
        omega = bifix[L]
        w_occ = occurrences(omega, tau)
        if len(w_occ) >= 2:
            alpha = standardize(tau[:w_occ[1] + L - 1])
            beta = standardize(tau[w_occ[-2] - 1:])
            if alpha != beta:
                forces_zero = True
                reasons.append("alpha differs from beta")
    return ScreenReport(tp, x, excluded, forces_zero, omega, alpha, beta, tuple(reasons))
