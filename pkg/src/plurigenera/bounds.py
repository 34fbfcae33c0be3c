"""Birationality bounds for pluricanonical maps of 3-folds of general type.

Given m0 (P_m >= 1 for all m >= m0), m1 (P_{m1} >= 2), the dimension d of the
image of the map defined by the chosen sub-system, and n_gamma, each branch
certifies birationality of phi_m for all m at or above a bound. Several
statements can apply to one query; the certified bound is the smallest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

DIMENSIONS = (1, 2, 3, "unknown")


@dataclass(frozen=True)
class BoundQuery:
    m0: int
    m1: int
    d: Union[int, str] = "unknown"
    n_gamma: int = 2

    def __post_init__(self) -> None:
        if self.m0 < 2:
            raise ValueError(f"m0 must be >= 2, got {self.m0}")
        if self.m1 < 1:
            raise ValueError(f"m1 must be >= 1, got {self.m1}")
        if self.d not in DIMENSIONS:
            raise ValueError(f"d must be one of 1, 2, 3, 'unknown'; got {self.d!r}")
        if self.n_gamma < 2:
            raise ValueError(f"n_gamma must be >= 2, got {self.n_gamma}")


@dataclass(frozen=True)
class BoundCandidate:
    label: str
    value: int
    refined: bool  # holds only past an m1 threshold


def bound_candidates(q: BoundQuery) -> list[BoundCandidate]:
    """Every bound certified for the query's branch."""
    m0, m1 = q.m0, q.m1
    general = max(m0 + 4 * m1 + 2, 5 * m1 + 4)
    out: list[BoundCandidate] = []
    if q.d == "unknown":
        out.append(BoundCandidate("any d", general, False))
    elif q.d == 3:
        out.append(BoundCandidate("d=3", max(m0 + m1, 3 * m1 + 2), False))
        if m1 >= 11:
            out.append(BoundCandidate("d=3, m1>=11", max(m0 + m1, 3 * m1 - 2), True))
    elif q.d == 2:
        out.append(BoundCandidate("d=2", max(m0 + 2 * m1, 4 * m1 + 2), False))
        if m1 >= 18:
            out.append(BoundCandidate("d=2, m1>=18", max(m0 + 2 * m1, 4 * m1 - 9), True))
    else:
        out.append(BoundCandidate("d=1", general, False))
        if m1 >= 14:
            out.append(BoundCandidate("d=1, m1>=14", max(m0 + 4 * m1 + 2, 5 * m1 - 2), True))
        if q.n_gamma >= 3:
            out.append(BoundCandidate("d=1, n_gamma>=3", max(m0 + 2 * m1 + 2, 3 * m1 + 4), False))
    return out


def birationality_bound(q: BoundQuery, refine: bool = True) -> int:
    """Smallest certified bound; ``refine=False`` ignores the m1-threshold variants."""
    values = [c.value for c in bound_candidates(q) if refine or not c.refined]
    return min(values)


def parse_dimension(text: str) -> Union[int, str]:
    if text == "unknown":
        return "unknown"
    try:
        d: Optional[int] = int(text)
    except ValueError:
        d = None
    if d not in (1, 2, 3):
        raise ValueError(f"d must be 1, 2, 3 or unknown; got {text!r}")
    return d
