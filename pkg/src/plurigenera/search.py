"""Exhaustive search for multisets of table rows summing to a target vector.

Every candidate row has first coordinate >= 1, so the total multiplicity of a
solution is at most the first target coordinate and the search terminates.
The other coordinates can be negative; pruning on them uses per-suffix
bounds on the ratio ``row[i] / row[0]`` (a linear bound in the residual first
coordinate), which is sound whatever their signs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .basket import Basket, QuotientSingularity, basket_correction, format_rational, miyaoka_sum
from .reid import BasketRow, apply_F, apply_G, build_table, lambda_vector, nabla_vector, solve_k3

FAMILIES = ("nabla", "lambda")


@dataclass(frozen=True)
class SearchProblem:
    rows: tuple[BasketRow, ...]
    family: str
    target: tuple[int, ...]
    r_max: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        arity = 4 if self.family == "nabla" else 3
        if len(self.target) != arity:
            raise ValueError(f"{self.family} target needs {arity} coordinates, got {len(self.target)}")
        if any(not isinstance(t, int) for t in self.target):
            raise TypeError("target coordinates must be integers")
        for row in self.candidates:
            if row.vector(self.family)[0] < 1:
                raise ValueError(f"row {row.singularity} has first coordinate < 1")

    @classmethod
    def from_table(cls, family: str, target: Sequence[int], r_max: int) -> "SearchProblem":
        return cls(tuple(build_table(r_max)), family, tuple(int(t) for t in target), r_max)

    @property
    def candidates(self) -> list[BasketRow]:
        """Rows with r <= r_max in canonical (r, a) order."""
        rows = [row for row in self.rows if row.singularity.r <= self.r_max]
        return sorted(rows, key=lambda row: (row.singularity.r, row.singularity.a))


@dataclass(frozen=True)
class SolutionMultiset:
    entries: tuple[tuple[QuotientSingularity, int], ...]
    sum_check: tuple[int, ...]

    @property
    def basket(self) -> Basket:
        return Basket(self.entries)

    @property
    def key(self) -> tuple[tuple[int, int, int], ...]:
        return tuple((q.r, q.a, mult) for q, mult in self.entries)

    def __str__(self) -> str:
        return str(self.basket)


def _suffix_ratio_bounds(vectors: Sequence[tuple[int, ...]]):
    """lo[j][i], hi[j][i]: min/max of v[i]/v[0] over rows j.., as Fractions (None if empty)."""
    n = len(vectors)
    dim = len(vectors[0]) if vectors else 0
    lo: list[list[Optional[Fraction]]] = [[None] * dim for _ in range(n + 1)]
    hi: list[list[Optional[Fraction]]] = [[None] * dim for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        v = vectors[j]
        for i in range(1, dim):
            ratio = Fraction(v[i], v[0])
            below, above = lo[j + 1][i], hi[j + 1][i]
            lo[j][i] = ratio if below is None or ratio < below else below
            hi[j][i] = ratio if above is None or ratio > above else above
    return lo, hi


def enumerate_solutions(problem: SearchProblem) -> list[SolutionMultiset]:
    """All multisets of candidate rows whose vectors sum exactly to the target."""
    rows = problem.candidates
    vectors = [row.vector(problem.family) for row in rows]
    target = problem.target
    n, dim = len(vectors), len(target)
    lo, hi = _suffix_ratio_bounds(vectors)
    # integer form of the ratio bounds: res[i]*den >= num*res[0]
    lo_int = [[(f.numerator, f.denominator) if f is not None else None for f in lv] for lv in lo]
    hi_int = [[(f.numerator, f.denominator) if f is not None else None for f in hv] for hv in hi]

    def feasible(j: int, res: list[int]) -> bool:
        r0 = res[0]
        if r0 == 0:
            return not any(res)
        if j >= n:
            return False
        lj, hj = lo_int[j], hi_int[j]
        for i in range(1, dim):
            num, den = lj[i]
            if res[i] * den < num * r0:
                return False
            num, den = hj[i]
            if res[i] * den > num * r0:
                return False
        return True

    found: list[list[tuple[int, int]]] = []
    chosen: list[tuple[int, int]] = []

    def descend(start: int, res: list[int]) -> None:
        if res[0] == 0:
            if not any(res):
                found.append(list(chosen))
            return
        for j in range(start, n):
            v = vectors[j]
            cur = res
            for mult in range(1, res[0] // v[0] + 1):
                cur = [x - y for x, y in zip(cur, v)]
                if feasible(j + 1, cur):
                    chosen.append((j, mult))
                    descend(j + 1, cur)
                    chosen.pop()

    if feasible(0, list(target)):
        descend(0, list(target))

    solutions = [
        SolutionMultiset(
            tuple((rows[j].singularity, mult) for j, mult in picks),
            tuple(target),
        )
        for picks in found
    ]
    solutions.sort(key=lambda s: s.key)
    return solutions


def resum(basket: Basket, family: str) -> tuple[Fraction, ...]:
    """Re-evaluate the transformed vector of a basket from first principles."""
    transform, vector = (apply_F, nabla_vector) if family == "nabla" else (apply_G, lambda_vector)
    dim = 4 if family == "nabla" else 3
    total = [Fraction(0)] * dim
    for q, mult in basket:
        for i, x in enumerate(transform(vector(q))):
            total[i] += mult * x
    return tuple(total)


@dataclass(frozen=True)
class AnnotatedSolution:
    solution: SolutionMultiset
    l2: Fraction
    k3: Fraction
    miyaoka: Fraction
    chi: int

    @property
    def k3_positive(self) -> bool:
        return self.k3 > 0

    @property
    def miyaoka_pass(self) -> bool:
        return self.miyaoka >= 24 * self.chi

    @property
    def eliminated(self) -> bool:
        return not (self.k3_positive and self.miyaoka_pass)

    @property
    def reason(self) -> str:
        if self.k3 == 0:
            return "K^3 = 0"
        if self.k3 < 0:
            return "K^3 < 0"
        if not self.miyaoka_pass:
            return "Miyaoka-Reid inequality fails"
        return "viable"

    def to_dict(self) -> dict:
        return {
            "entries": [
                {"r": q.r, "a": q.a, "multiplicity": mult} for q, mult in self.solution.entries
            ],
            "basket": self.solution.basket.spec,
            "sum": list(self.solution.sum_check),
            "l2": format_rational(self.l2),
            "k3": format_rational(self.k3),
            "miyaoka_sum": format_rational(self.miyaoka),
            "k3_positive": self.k3_positive,
            "miyaoka_pass": self.miyaoka_pass,
            "eliminated": self.eliminated,
            "reason": self.reason,
        }


def annotate(solution: SolutionMultiset, chi: int = 1) -> AnnotatedSolution:
    """Attach l(2), K^3 solved from P_2 = 0, and the Miyaoka-Reid sum."""
    basket = solution.basket
    return AnnotatedSolution(
        solution,
        basket_correction(basket, 2),
        solve_k3(basket, chi, 2, Fraction(0)),
        miyaoka_sum(basket),
        chi,
    )


def enumerate_with_filters(problem: SearchProblem, chi: int = 1) -> list[AnnotatedSolution]:
    if chi < 1:
        raise ValueError(f"chi must be >= 1, got {chi}")
    return [annotate(s, chi) for s in enumerate_solutions(problem)]


def solutions_to_json(problem: SearchProblem, annotated: Iterable[AnnotatedSolution]) -> str:
    payload = {
        "family": problem.family,
        "target": list(problem.target),
        "r_max": problem.r_max,
        "solutions": [a.to_dict() for a in annotated],
    }
    return json.dumps(payload, indent=1) + "\n"
