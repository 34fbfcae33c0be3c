"""One-shot reproduction of every published computation.

Each check produces a :class:`CaseReport`. A report's verdict is ``match``
when the recomputed result agrees with the published one; otherwise it is
``discrepancy`` and both values are kept. Nothing here aborts on a mismatch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence

from . import published
from .basket import Basket, canonical_singularities, canonicalize, format_rational, local_correction
from .bounds import BoundQuery, bound_candidates, birationality_bound
from .reid import (
    GeometrySpec,
    LinearCombination,
    apply_F,
    apply_G,
    build_table,
    k3_coefficient,
    negated_delta_sum,
    plurigenus,
    solve_k3,
    verify_identity,
)
from .search import SearchProblem, annotate, enumerate_solutions, resum

CHI = 1
MATCH = "match"
DISCREPANCY = "discrepancy"


@dataclass
class CaseReport:
    label: str
    expected: Any
    computed: Any
    verdict: str
    target: Optional[tuple[int, ...]] = None
    annotations: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict == MATCH

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "verdict": self.verdict,
            "target": list(self.target) if self.target is not None else None,
            "expected": self.expected,
            "computed": self.computed,
            "annotations": self.annotations,
            "notes": self.notes,
        }


def _verdict(ok: bool) -> str:
    return MATCH if ok else DISCREPANCY


def check_table(r_max: int = 27) -> CaseReport:
    rows = build_table(r_max)
    mismatches = []
    notes = []
    for (no, r, w1, w2, nabla, lam), row in zip(published.PRINTED_TABLE, rows):
        q = row.singularity
        problems = []
        if (r, w1, w2) != (q.r, q.a, -q.a):
            problems.append(f"label 1/{r}({w1},{w2},1) vs computed {q}")
        if tuple(nabla) != row.nabla_prime:
            problems.append(f"nabla' {tuple(nabla)} vs computed {row.nabla_prime}")
        if no <= published.LAMBDA_ROWS_PRINTED and tuple(lam) != row.lambda_prime:
            problems.append(f"lambda' {lam} vs computed {row.lambda_prime}")
        if not problems:
            continue
        if no in published.KNOWN_TABLE_SLIPS:
            notes.append(f"row {no}: {'; '.join(problems)} (known slip: {published.KNOWN_TABLE_SLIPS[no]})")
        else:
            mismatches.append(f"row {no}: {'; '.join(problems)}")
    if len(rows) != len(published.PRINTED_TABLE):
        mismatches.append(f"row count {len(rows)} vs printed {len(published.PRINTED_TABLE)}")
    return CaseReport(
        "Table",
        expected={"rows": len(published.PRINTED_TABLE)},
        computed={"rows": len(rows), "unexplained_mismatches": mismatches},
        verdict=_verdict(not mismatches),
        notes=notes,
    )


def _identity_report(label: str, identities) -> CaseReport:
    expected, computed, ok = [], [], True
    for comb_terms, constant, deltas in identities:
        comb = LinearCombination.of(comb_terms)
        exp = verify_identity(comb, CHI)
        rhs_matches = exp.l_terms == negated_delta_sum(deltas)
        expected.append({"combination": str(comb), "k3_coefficient": "0", "constant": str(constant)})
        computed.append(
            {
                "combination": str(comb),
                "k3_coefficient": format_rational(exp.k3_coefficient),
                "constant": format_rational(exp.constant),
                "correction": exp.correction_description,
                "correction_is_negated_delta_sum": rhs_matches,
            }
        )
        ok &= exp.k3_coefficient == 0 and exp.constant == constant and rhs_matches
    return CaseReport(label, expected, computed, _verdict(ok))


def check_identities() -> list[CaseReport]:
    return [
        _identity_report("Identities-Step1", published.STEP1_IDENTITIES),
        _identity_report("Identities-Thm14", published.THM14_IDENTITIES),
    ]


def derive_target(family: str, plurigenera: dict[int, int], chi: int = CHI) -> tuple[Fraction, ...]:
    """Untransformed grouped Delta sums forced by the assumed plurigenera."""
    identities = published.STEP1_IDENTITIES if family == "nabla" else published.THM14_IDENTITIES
    out = []
    for comb_terms, _, _ in identities:
        comb = LinearCombination.of(comb_terms)
        constant = verify_identity(comb, chi).constant
        # comb(P) = constant - sum(Delta) on the given basket
        value = sum((c * plurigenera[m] for m, c in comb.terms), Fraction(0))
        out.append(constant - value)
    return tuple(out)


def check_search_case(case) -> CaseReport:
    label, family, r_max, assumed, printed_target, expected_labels = case
    raw = derive_target(family, assumed)
    transformed = apply_F(raw) if family == "nabla" else apply_G(raw)
    notes = [
        f"assumed plurigenera {', '.join(f'P{m}={v}' for m, v in sorted(assumed.items()))}",
        f"untransformed target {tuple(format_rational(x) for x in raw)}",
    ]
    target_ok = transformed == tuple(Fraction(t) for t in printed_target)
    if not target_ok:
        notes.append(f"transformed target {tuple(map(format_rational, transformed))} differs from printed")

    problem = SearchProblem.from_table(family, printed_target, r_max)
    solutions = enumerate_solutions(problem)
    computed = {s.basket.spec for s in solutions}
    expected = {
        Basket.parse(published.SOLUTIONS[lab][0]).spec: lab for lab in expected_labels
    }
    sound = all(resum(s.basket, family) == tuple(map(Fraction, printed_target)) for s in solutions)
    if not sound:
        notes.append("a computed solution does not re-sum to the target")
    if not expected_labels and computed:
        notes.append("published list is empty by omission, but the search found solutions")

    annotations = []
    for s in solutions:
        annotated = annotate(s, CHI)
        ann = annotated.to_dict()
        lab = expected.get(s.basket.spec)
        ann["case"] = lab
        if lab is not None:
            note = published.SOLUTIONS[lab][1]
            ann["published_l2_note"] = note
            if note is not None:
                agrees = annotated.l2 == 3 if note == "=3" else annotated.l2 > 3
                ann["published_l2_note_agrees"] = agrees
                if not agrees:
                    notes.append(f"case ({lab}): published note l(2){note} but computed l(2)={ann['l2']}")
        annotations.append(ann)

    return CaseReport(
        label,
        expected=sorted(f"({lab}) {spec}" for spec, lab in expected.items()),
        computed=sorted(f"({expected.get(spec, '?')}) {spec}" for spec in computed),
        verdict=_verdict(target_ok and sound and computed == set(expected)),
        target=tuple(printed_target),
        annotations=annotations,
        notes=notes,
    )


def check_case_viii_sequence() -> CaseReport:
    basket = Basket.parse(published.SOLUTIONS["viii"][0])
    k3 = solve_k3(basket, CHI, 2, Fraction(0))
    spec = GeometrySpec(k3, CHI, basket)
    seq = tuple(plurigenus(spec, m) for m in range(2, 22))
    return CaseReport(
        "Step3-viii-plurigenera",
        expected=[str(x) for x in published.CASE_VIII_PLURIGENERA],
        computed=[format_rational(x) for x in seq],
        verdict=_verdict(seq == tuple(map(Fraction, published.CASE_VIII_PLURIGENERA))),
        notes=[f"K^3 = {format_rational(k3)} solved from P2 = 0"],
    )


@dataclass(frozen=True)
class BoundCheck:
    part: str
    claim: str
    value: Fraction
    holds: bool

    def to_dict(self) -> dict:
        return {"part": self.part, "claim": self.claim, "value": format_rational(self.value), "holds": self.holds}


def check_index_bounds() -> list[BoundCheck]:
    """Numeric facts behind excluding large indices."""
    checks = []

    total = sum((Fraction(j * (37 - j), 74) for j in range(1, 18)), Fraction(0))
    same_as_l = total == local_correction(canonicalize(37, 1), 18)
    checks.append(BoundCheck("a", "sum_{j=1}^{17} j(37-j)/74 > 52", total, total > 52 and same_as_l))

    values = [local_correction(q, 18) for r in range(28, 37) for q in canonical_singularities(r)]
    low = min(values)
    checks.append(BoundCheck("b", "l(Q,18) > 37 for every Q with 28 <= r <= 36", low, low > 37))

    l29 = local_correction(canonicalize(29, 1), 15)
    checks.append(BoundCheck("c", "l(1/29(1,-1,1),15) >= 35", l29, l29 >= 35))

    # P15 > -29 + l(Q,15); P15 >= 1 follows once the right side is >= 0
    values = [local_correction(q, 15) for r in range(26, 29) for q in canonical_singularities(r)]
    low = min(values) - 29
    checks.append(BoundCheck("d", "-29 + l(Q,15) >= 0 for every Q with 26 <= r <= 28", low, low >= 0))
    return checks


def check_step4_monotonicity(baskets: Iterable[Basket], ms: Sequence[int] = range(12, 31)) -> list[str]:
    """Failures of P_{m+2} - P_m - P_2 >= -1 + q K^3 (q the K^3 coefficient), with K^3 from P_2 = 0."""
    failures = []
    for basket in baskets:
        k3 = solve_k3(basket, CHI, 2, Fraction(0))
        spec = GeometrySpec(k3, CHI, basket)
        for m in ms:
            q = k3_coefficient(m + 2) - k3_coefficient(m) - k3_coefficient(2)
            lhs = plurigenus(spec, m + 2) - plurigenus(spec, m) - plurigenus(spec, 2)
            if q <= 0 or lhs < -1 + q * k3:
                failures.append(f"{basket.spec} m={m}")
    return failures


def check_bounds() -> CaseReport:
    expected, computed, ok = [], [], True
    for m0, m1, d, n_gamma, value, refine in published.PRINTED_BOUNDS:
        q = BoundQuery(m0, m1, d, n_gamma)
        got = birationality_bound(q, refine=refine)
        expected.append({"m0": m0, "m1": m1, "d": d, "n_gamma": n_gamma, "bound": value})
        computed.append(
            {
                "m0": m0,
                "m1": m1,
                "d": d,
                "n_gamma": n_gamma,
                "bound": got,
                "best_certified": birationality_bound(q),
                "candidates": {c.label: c.value for c in bound_candidates(q)},
            }
        )
        ok &= got == value
    return CaseReport("Bounds", expected, computed, _verdict(ok))


def reproduce_all() -> list[CaseReport]:
    reports = [check_table()]
    reports.extend(check_identities())
    reports.extend(check_search_case(case) for case in published.SEARCH_CASES)
    reports.append(check_case_viii_sequence())

    checks = check_index_bounds()
    reports.append(
        CaseReport(
            "IndexBounds",
            expected=[c.claim for c in checks],
            computed=[c.to_dict() for c in checks],
            verdict=_verdict(all(c.holds for c in checks)),
        )
    )

    baskets = [Basket.parse(spec) for spec, _ in published.SOLUTIONS.values()]
    failures = check_step4_monotonicity(baskets)
    reports.append(
        CaseReport(
            "Step4-monotonicity",
            expected="P_{m+2} - P_m - P_2 >= -1 + q K^3 for 12 <= m <= 30",
            computed={"baskets": len(baskets), "failures": failures},
            verdict=_verdict(not failures),
        )
    )
    reports.append(check_bounds())
    return reports


def summary_line(reports: Sequence[CaseReport]) -> str:
    bad = [r.label for r in reports if not r.ok]
    if bad:
        return f"{len(reports) - len(bad)}/{len(reports)} checks match; discrepancies: {', '.join(bad)}"
    return f"{len(reports)}/{len(reports)} checks match"


def render_text(reports: Sequence[CaseReport]) -> str:
    lines = []
    for rep in reports:
        head = f"[{rep.verdict}] {rep.label}"
        if rep.target is not None:
            head += f"  target={rep.target}"
        lines.append(head)
        if isinstance(rep.expected, list) and isinstance(rep.computed, list) and rep.target is not None:
            lines.append(f"    expected: {rep.expected or '(none)'}")
            lines.append(f"    computed: {rep.computed or '(none)'}")
            for ann in rep.annotations:
                lines.append(
                    f"    ({ann['case'] or '?'}) l(2)={ann['l2']} K^3={ann['k3']} "
                    f"miyaoka={ann['miyaoka_sum']} -> {ann['reason']}"
                )
        else:
            lines.append(f"    expected: {json.dumps(rep.expected)}")
            lines.append(f"    computed: {json.dumps(rep.computed)}")
        for note in rep.notes:
            lines.append(f"    note: {note}")
    lines.append(summary_line(reports))
    return "\n".join(lines) + "\n"


def render_json(reports: Sequence[CaseReport]) -> str:
    payload = {
        "verdict": MATCH if all(r.ok for r in reports) else DISCREPANCY,
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(payload, indent=1) + "\n"
