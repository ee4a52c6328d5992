"""Möbius function of intervals in the consecutive-pattern poset of permutations."""

from .fast import (Case, CarrierSearchReport, MobiusResult, ScreenReport, find_carrier,
                   mobius_fast, mobius_one_occurrence, mobius_small_rank, screen, socle_chain)
from .perm import (InvalidInput, NotContained, TailProfile, affix_pattern, format_perm,
                   is_bifix, is_monotone, is_monotone_alternating, occurrences, parse_perm,
                   standardize, tails, trim)
from .poset import (ORACLE_MAX_N, HasseDiagram, Interval, OracleTooLarge, build_interval,
                    covered_by, hasse_edges, mobius_oracle, mobius_oracle_topdown)

__version__ = "0.1.0"
