#!/usr/bin/env python3
"""Time each published search and report solution counts."""

from __future__ import annotations

import time

from plurigenera import published
from plurigenera.reid import build_table
from plurigenera.search import SearchProblem, enumerate_solutions


def main() -> None:
    t0 = time.perf_counter()
    table = tuple(build_table(27))
    print(f"table (r <= 27): {len(table)} rows in {time.perf_counter() - t0:.3f} s")
    for label, family, r_max, _, target, expected in published.SEARCH_CASES:
        t0 = time.perf_counter()
        sols = enumerate_solutions(SearchProblem(table, family, target, r_max))
        dt = time.perf_counter() - t0
        print(f"{label:<8} {family:<6} {str(target):<18} {len(sols)} solution(s) (expected {len(expected)})  {dt:.3f} s")


if __name__ == "__main__":
    main()
