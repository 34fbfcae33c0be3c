"""Basket data model for terminal quotient singularities and the local
correction term of the plurigenus formula.

All fractional quantities use :class:`fractions.Fraction`, which is always
stored reduced with a positive denominator.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Union

Rational = Fraction

__all__ = [
    "Rational",
    "QuotientSingularity",
    "Basket",
    "BasketSpecError",
    "mod_inverse",
    "canonicalize",
    "canonical_singularities",
    "local_correction",
    "basket_correction",
    "miyaoka_sum",
    "format_rational",
    "parse_rational",
]


class BasketSpecError(ValueError):
    """Raised for a malformed basket string such as ``3*2/1,2*5/3``."""


def format_rational(x: Union[Fraction, int]) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def mod_inverse(a: int, r: int) -> int:
    """Return b with 0 < b < r and a*b = 1 (mod r)."""
    if r < 2:
        raise ValueError(f"modulus must be >= 2, got {r}")
    if not 0 < a < r:
        raise ValueError(f"weight {a} out of range (0, {r})")
    if gcd(a, r) != 1:
        raise ValueError(f"{a} is not coprime to {r}")
    return pow(a, -1, r)


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    """Singularity of type 1/r(a, -a, 1).

    Always holds the canonical weight ``a >= r - a``; use :func:`canonicalize`
    to build one from an arbitrary weight.
    """

    r: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"index must be >= 2 (r=1 is a smooth point), got {self.r}")
        if not 0 < self.a < self.r or gcd(self.a, self.r) != 1:
            raise ValueError(f"invalid weight {self.a} for index {self.r}")
        if self.a < self.r - self.a:
            raise ValueError(f"weight {self.a} is not canonical for index {self.r}")
        if (self.a * self.b) % self.r != 1 % self.r or not 0 < self.b < self.r:
            raise ValueError(f"b={self.b} is not the inverse of {self.a} mod {self.r}")

    def __str__(self) -> str:
        return f"1/{self.r}({self.a},-{self.a},1)"

    @property
    def spec(self) -> str:
        return f"{self.r}/{self.a}"


def canonicalize(r: int, a: int) -> QuotientSingularity:
    if r < 2:
        raise ValueError(f"index must be >= 2, got {r}")
    if not 0 < a < r:
        raise ValueError(f"weight {a} out of range (0, {r})")
    if gcd(a, r) != 1:
        raise ValueError(f"weight {a} is not coprime to index {r}")
    a = max(a, r - a)
    return QuotientSingularity(r, a, mod_inverse(a, r))


def canonical_singularities(r: int) -> list[QuotientSingularity]:
    """All canonical types of index r, by descending weight."""
    if r == 2:
        return [canonicalize(2, 1)]
    return [canonicalize(r, a) for a in range(r - 1, r // 2, -1) if gcd(a, r) == 1]


@dataclass(frozen=True)
class Basket:
    """Multiset of singularities, entries sorted by (r, a)."""

    entries: tuple[tuple[QuotientSingularity, int], ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for q, mult in self.entries:
            if mult < 1:
                raise ValueError(f"multiplicity of {q} must be >= 1, got {mult}")
            if q in seen:
                raise ValueError(f"duplicate entry {q}")
            seen.add(q)
        if list(self.entries) != sorted(self.entries, key=lambda e: (e[0].r, e[0].a)):
            raise ValueError("basket entries must be sorted by (r, a)")

    @classmethod
    def of(cls, items: Iterable[tuple[QuotientSingularity, int]]) -> "Basket":
        """Merge repeated singularities and sort."""
        counts: Counter[QuotientSingularity] = Counter()
        for q, mult in items:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult}")
            counts[q] += mult
        return cls(tuple((q, counts[q]) for q in sorted(counts) if counts[q] > 0))

    @classmethod
    def from_singularities(cls, qs: Iterable[QuotientSingularity]) -> "Basket":
        return cls.of((q, 1) for q in qs)

    @classmethod
    def parse(cls, text: str) -> "Basket":
        """Parse ``mult*r/a`` items separated by commas, e.g. ``3*2/1,2*5/3``.

        A bare ``r/a`` means multiplicity 1. The empty string is the empty basket.
        """
        items = []
        if text.strip():
            for raw in text.split(","):
                item = raw.strip()
                m = re.fullmatch(r"(?:(\d+)\s*\*\s*)?(\d+)\s*/\s*(\d+)", item)
                if not m:
                    raise BasketSpecError(f"bad basket item {item!r}: expected mult*r/a")
                mult = int(m.group(1)) if m.group(1) is not None else 1
                try:
                    q = canonicalize(int(m.group(2)), int(m.group(3)))
                except ValueError as exc:
                    raise BasketSpecError(f"bad basket item {item!r}: {exc}") from None
                if mult < 1:
                    raise BasketSpecError(f"bad basket item {item!r}: multiplicity must be >= 1")
                items.append((q, mult))
        return cls.of(items)

    @property
    def spec(self) -> str:
        return ",".join(f"{mult}*{q.r}/{q.a}" for q, mult in self.entries)

    def __iter__(self) -> Iterator[tuple[QuotientSingularity, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "(empty)"
        return ", ".join(f"{mult} x {q}" for q, mult in self.entries)

    @property
    def size(self) -> int:
        return sum(mult for _, mult in self.entries)

    @property
    def max_index(self) -> int:
        return max((q.r for q, _ in self.entries), default=1)


def local_correction(q: QuotientSingularity, m: int) -> Fraction:
    """l(Q, m) = sum_{j=1}^{m-1} x_j (r - x_j) / (2r), x_j = (b j) mod r."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    r, b = q.r, q.b
    # one full period of j contributes the same integer numerator; skip whole periods
    full, rest = divmod(m - 1, r)
    period = sum(j * (r - j) for j in range(1, r))
    total = full * period
    for j in range(1, rest + 1):
        x = (b * j) % r
        total += x * (r - x)
    return Fraction(total, 2 * r)


def basket_correction(basket: Basket, m: int) -> Fraction:
    """l(m): multiplicity-weighted sum of :func:`local_correction`."""
    return sum((mult * local_correction(q, m) for q, mult in basket), Fraction(0))


def miyaoka_sum(basket: Basket) -> Fraction:
    """Sum over the basket of (r^2 - 1)/r, the left side of the Miyaoka-Reid inequality."""
    return sum((mult * Fraction(q.r * q.r - 1, q.r) for q, mult in basket), Fraction(0))
