"""Permutations in one-line notation and consecutive-pattern primitives.

Permutations are plain tuples of ints over ``1..n``.  Positions reported to
callers are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

Perm = tuple[int, ...]

# below this many window comparisons the pure-Python scan beats numpy
_SMALL_SCAN = 256


class InvalidInput(ValueError):
    pass


class NotContained(ValueError):
    """Raised when a pattern is required to occur in a permutation but does not."""


@dataclass(frozen=True)
class TailProfile:
    left: int
    right: int

    @property
    def total(self) -> int:
        return self.left + self.right


def standardize(s: Iterable[int]) -> Perm:
    """Return the permutation of 1..len(s) order isomorphic to ``s``."""
    s = tuple(s)
    if not s:
        raise InvalidInput("cannot standardize an empty sequence")
    if len(set(s)) != len(s):
        raise InvalidInput(f"entries are not distinct: {s}")
    out = [0] * len(s)
    for rank, i in enumerate(sorted(range(len(s)), key=s.__getitem__), 1):
        out[i] = rank
    return tuple(out)


def is_perm(s: Sequence[int]) -> bool:
    return len(s) > 0 and sorted(s) == list(range(1, len(s) + 1))


def as_perm(s: Iterable[int]) -> Perm:
    p = tuple(int(v) for v in s)
    if not is_perm(p):
        raise InvalidInput(f"not a permutation of 1..{len(p)}: {p}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse ``"231"`` (only when n <= 9) or ``"2,5,7,1,4,8,9,3,6,10"``."""
    text = text.strip()
    if not text:
        raise InvalidInput("empty permutation")
    try:
        if "," in text:
            values = [int(tok) for tok in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise InvalidInput(f"cannot parse permutation {text!r}") from None
    if "," not in text and len(values) > 9:
        raise InvalidInput("compact digit form only allowed for n <= 9; use commas")
    return as_perm(values)


def format_perm(p: Sequence[int]) -> str:
    return ",".join(map(str, p))


def _value_order(p: Sequence[int]) -> list[int]:
    # positions of p listed by increasing value
    order = [0] * len(p)
    for i, v in enumerate(p):
        order[v - 1] = i
    return order


def occurrences(p: Sequence[int], t: Sequence[int]) -> list[int]:
    """1-based start positions of every consecutive occurrence of ``p`` in ``t``.

    A window ``w`` matches when ``w[o0] < w[o1] < ... `` where ``o`` lists the
    positions of ``p`` by increasing value, so each window costs k-1 comparisons.
    """
    k, n = len(p), len(t)
    if k > n:
        return []
    if k == 1:
        return list(range(1, n + 1))
    order = _value_order(p)
    if k * (n - k + 1) <= _SMALL_SCAN:
        pairs = list(zip(order, order[1:]))
        return [i + 1 for i in range(n - k + 1)
                if all(t[i + a] < t[i + b] for a, b in pairs)]
    windows = np.lib.stride_tricks.sliding_window_view(np.asarray(t), k)[:, order]
    hits = np.all(windows[:, 1:] > windows[:, :-1], axis=1)
    return (np.flatnonzero(hits) + 1).tolist()


def contains(p: Sequence[int], t: Sequence[int]) -> bool:
    return bool(occurrences(p, t))


def tails(p: Sequence[int], t: Sequence[int]) -> TailProfile:
    occ = occurrences(p, t)
    if not occ:
        raise NotContained(f"{format_perm(p)} does not occur in {format_perm(t)}")
    return TailProfile(occ[0] - 1, len(t) - (occ[-1] + len(p) - 1))


def _check_length(t: Sequence[int], k: int) -> None:
    if not 1 <= k <= len(t):
        raise InvalidInput(f"length {k} out of range 1..{len(t)}")


def affix_pattern(t: Sequence[int], k: int, side: str) -> Perm:
    """Prefix (``side='left'``) or suffix (``'right'``) pattern of length k."""
    _check_length(t, k)
    if side == "left":
        return standardize(t[:k])
    if side == "right":
        return standardize(t[len(t) - k:])
    raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")


def is_bifix(t: Sequence[int], k: int) -> bool:
    return affix_pattern(t, k, "left") == affix_pattern(t, k, "right")


def trim(t: Sequence[int], drop_first: bool, drop_last: bool) -> Perm:
    start = 1 if drop_first else 0
    stop = len(t) - 1 if drop_last else len(t)
    if stop <= start:
        raise InvalidInput("trimming would leave an empty permutation")
    return standardize(t[start:stop])


def is_monotone(t: Sequence[int]) -> bool:
    n = len(t)
    return tuple(t) == tuple(range(1, n + 1)) or tuple(t) == tuple(range(n, 0, -1))


def _monotone_seq(s: Sequence[int]) -> bool:
    return (all(a < b for a, b in zip(s, s[1:]))
            or all(a > b for a, b in zip(s, s[1:])))


def is_alternating(t: Sequence[int]) -> bool:
    """Up-down or down-up, either starting direction accepted."""
    ups = [a < b for a, b in zip(t, t[1:])]
    return all(u != v for u, v in zip(ups, ups[1:]))


def is_monotone_alternating(t: Sequence[int]) -> bool:
    return is_alternating(t) and _monotone_seq(t[0::2]) and _monotone_seq(t[1::2])
