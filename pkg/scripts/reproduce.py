#!/usr/bin/env python3
"""Run every reproduction check and write text + JSON reports.

    python scripts/reproduce.py --outdir results
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from plurigenera.verify import render_json, render_text, reproduce_all, summary_line


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = reproduce_all()
    elapsed = time.perf_counter() - t0

    args.outdir.mkdir(parents=True, exist_ok=True)
    (args.outdir / "report.txt").write_text(render_text(reports), encoding="utf-8")
    (args.outdir / "report.json").write_text(render_json(reports), encoding="utf-8")
    print(f"{summary_line(reports)} ({elapsed:.2f} s) -> {args.outdir}/report.{{txt,json}}")
    return 0 if all(r.ok for r in reports) else 2


if __name__ == "__main__":
    sys.exit(main())
