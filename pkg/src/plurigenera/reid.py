"""Reid's plurigenus formula and the linear functionals built from it.

For a minimal 3-fold of general type with basket B,

    P_m = m(m-1)(2m-1)/12 * K^3 - (2m-1) * chi + l(m),    m >= 2.

The grouped sums of Delta_n = n^2 l(2) + l(n) - l(n+1) are the quantities
pinned down by vanishing plurigenera; the F and G transforms turn them into
the per-singularity integer vectors searched over in :mod:`plurigenera.search`.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .basket import (
    Basket,
    QuotientSingularity,
    basket_correction,
    canonical_singularities,
    format_rational,
    local_correction,
)

# Delta_n index groups making up each coordinate of nabla and lambda
NABLA_GROUPS: tuple[range, ...] = (range(2, 3), range(3, 6), range(6, 9), range(9, 18))
LAMBDA_GROUPS: tuple[range, ...] = (range(2, 3), range(3, 5), range(5, 15))

# row-vector-on-the-left convention: v' = v @ F
F_MATRIX: tuple[tuple[int, ...], ...] = (
    (1, -11, 0, -4),
    (0, 1, -3, -11),
    (0, 0, 1, -7),
    (0, 0, 0, 1),
)
G_MATRIX: tuple[tuple[int, ...], ...] = (
    (1, -5, -5),
    (0, 1, -40),
    (0, 0, 1),
)

TABLE_HEADER = ("no", "r", "a", "n1", "n2", "n3", "n4", "l1", "l2", "l3")


@dataclass(frozen=True)
class GeometrySpec:
    k3: Fraction
    chi: int
    basket: Basket = field(default_factory=Basket)


def k3_coefficient(m: int) -> Fraction:
    return Fraction(m * (m - 1) * (2 * m - 1), 12)


def plurigenus(spec: GeometrySpec, m: int) -> Fraction:
    if m < 2:
        raise ValueError(f"plurigenus formula holds for m >= 2, got m={m}")
    return (
        k3_coefficient(m) * Fraction(spec.k3)
        - (2 * m - 1) * spec.chi
        + basket_correction(spec.basket, m)
    )


def solve_k3(basket: Basket, chi: int, m: int, pm: Fraction) -> Fraction:
    """The K^3 for which the formula yields P_m = pm."""
    if m < 2:
        raise ValueError(f"plurigenus formula holds for m >= 2, got m={m}")
    return (Fraction(pm) + (2 * m - 1) * chi - basket_correction(basket, m)) / k3_coefficient(m)


def delta(q: QuotientSingularity, n: int) -> Fraction:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return n * n * local_correction(q, 2) + local_correction(q, n) - local_correction(q, n + 1)


def _grouped_deltas(q: QuotientSingularity, groups: Sequence[range]) -> tuple[Fraction, ...]:
    return tuple(sum((delta(q, n) for n in g), Fraction(0)) for g in groups)


def nabla_vector(q: QuotientSingularity) -> tuple[Fraction, ...]:
    """(D2, D3+D4+D5, D6+D7+D8, D9+...+D17) for one singularity."""
    return _grouped_deltas(q, NABLA_GROUPS)


def lambda_vector(q: QuotientSingularity) -> tuple[Fraction, ...]:
    """(D2, D3+D4, D5+...+D14) for one singularity."""
    return _grouped_deltas(q, LAMBDA_GROUPS)


def _row_times(vec: Sequence[Fraction], matrix: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    if len(vec) != len(matrix):
        raise ValueError(f"expected a vector of length {len(matrix)}, got {len(vec)}")
    return tuple(
        sum((Fraction(vec[i]) * matrix[i][j] for i in range(len(vec))), Fraction(0))
        for j in range(len(matrix[0]))
    )


def apply_F(nabla: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return _row_times(nabla, F_MATRIX)


def apply_G(lam: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return _row_times(lam, G_MATRIX)


@dataclass(frozen=True)
class LinearCombination:
    """sum of coefficient * P_m over ``terms``, expanded through the formula."""

    terms: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        for m, _ in self.terms:
            if m < 2:
                raise ValueError(f"plurigenus index must be >= 2, got {m}")

    @classmethod
    def of(cls, terms: Mapping[int, int | Fraction]) -> "LinearCombination":
        return cls(tuple((m, Fraction(c)) for m, c in sorted(terms.items(), reverse=True)))

    @property
    def k3_coefficient(self) -> Fraction:
        return sum((c * k3_coefficient(m) for m, c in self.terms), Fraction(0))

    @property
    def chi_coefficient(self) -> Fraction:
        return sum((-c * (2 * m - 1) for m, c in self.terms), Fraction(0))

    @property
    def l_terms(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for m, c in self.terms:
            out[m] = out.get(m, Fraction(0)) + c
        return {m: c for m, c in sorted(out.items()) if c != 0}

    def __str__(self) -> str:
        parts = []
        for m, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else format_rational(mag)
            parts.append(f"{sign} {coef}P{m}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def evaluate(self, spec: GeometrySpec) -> Fraction:
        return sum((c * plurigenus(spec, m) for m, c in self.terms), Fraction(0))


@dataclass(frozen=True)
class IdentityExpansion:
    """k3_coefficient * K^3 + constant + sum(l_terms[m] * l(m))."""

    k3_coefficient: Fraction
    constant: Fraction
    l_terms: dict[int, Fraction]

    @property
    def correction_description(self) -> str:
        if not self.l_terms:
            return "0"
        parts = []
        for m, c in self.l_terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else format_rational(mag)
            parts.append(f"{sign} {coef}l({m})")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def evaluate(self, k3: Fraction, basket: Basket) -> Fraction:
        return (
            self.k3_coefficient * Fraction(k3)
            + self.constant
            + sum((c * basket_correction(basket, m) for m, c in self.l_terms.items()), Fraction(0))
        )


def verify_identity(comb: LinearCombination, chi: int) -> IdentityExpansion:
    return IdentityExpansion(comb.k3_coefficient, comb.chi_coefficient * chi, comb.l_terms)


def negated_delta_sum(ns: Sequence[int]) -> dict[int, Fraction]:
    """-(sum of Delta_n for n in ns) written as coefficients of l(m)."""
    out: dict[int, Fraction] = {}
    for n in ns:
        for m, c in ((2, -n * n), (n, -1), (n + 1, 1)):
            out[m] = out.get(m, Fraction(0)) + c
    return {m: c for m, c in sorted(out.items()) if c != 0}


@dataclass(frozen=True)
class BasketRow:
    singularity: QuotientSingularity
    nabla_prime: tuple[int, int, int, int]
    lambda_prime: Optional[tuple[int, int, int]]

    def __post_init__(self) -> None:
        if self.nabla_prime[0] < 1:
            raise ValueError(f"first nabla' coordinate must be >= 1 for {self.singularity}")
        if self.lambda_prime is not None and self.lambda_prime[0] < 1:
            raise ValueError(f"first lambda' coordinate must be >= 1 for {self.singularity}")

    def vector(self, family: str) -> tuple[int, ...]:
        if family == "nabla":
            return self.nabla_prime
        if family == "lambda":
            if self.lambda_prime is None:
                raise ValueError(f"row {self.singularity} has no lambda' values")
            return self.lambda_prime
        raise ValueError(f"unknown vector family {family!r}")


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not integral: {x}")
    return x.numerator


def build_row(q: QuotientSingularity) -> BasketRow:
    nab = apply_F(nabla_vector(q))
    lam = apply_G(lambda_vector(q))
    return BasketRow(
        q,
        tuple(_as_int(x, f"nabla' of {q}") for x in nab),  # type: ignore[arg-type]
        tuple(_as_int(x, f"lambda' of {q}") for x in lam),  # type: ignore[arg-type]
    )


def build_table(r_max: int) -> list[BasketRow]:
    """One row per canonical singularity with 2 <= r <= r_max, by (r, descending a)."""
    if r_max < 2:
        raise ValueError(f"r_max must be >= 2, got {r_max}")
    return [build_row(q) for r in range(2, r_max + 1) for q in canonical_singularities(r)]


def table_records(rows: Sequence[BasketRow]) -> list[dict[str, int]]:
    out = []
    for no, row in enumerate(rows, start=1):
        rec = {"no": no, "r": row.singularity.r, "a": row.singularity.a}
        rec.update(zip(("n1", "n2", "n3", "n4"), row.nabla_prime))
        lam = row.lambda_prime or (None, None, None)
        rec.update(zip(("l1", "l2", "l3"), lam))
        out.append(rec)
    return out


def table_to_csv(rows: Sequence[BasketRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for rec in table_records(rows):
        writer.writerow(["" if rec[k] is None else rec[k] for k in TABLE_HEADER])
    return buf.getvalue()


def table_to_json(rows: Sequence[BasketRow]) -> str:
    return json.dumps(table_records(rows), indent=1) + "\n"
