"""Run the uniform and mixed-degree search grids and write one certificate per case.

    python scripts/run_grid.py --out certificates/
"""
import argparse
import json
import sys
from pathlib import Path

from polyekr.search import TheoremViolation, verify_theorem1, verify_theorem4

UNIFORM = [(2, 2, 1), (2, 3, 1), (2, 3, 2), (2, 4, 2), (2, 4, 3), (2, 5, 3), (3, 2, 1), (3, 3, 2)]
MIXED = [(2, (2, 3), 1), (2, (3, 4), 2), (3, (2, 3), 1)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("certificates"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--no-meta", action="store_true", help="omit timings, for diffable output")
    args = ap.parse_args(argv)
    args.out.mkdir(parents=True, exist_ok=True)

    jobs = [(f"uniform_q{q}_n{n}_l{ell}.json", verify_theorem1, (q, n, ell)) for q, n, ell in UNIFORM]
    jobs += [(f"mixed_q{q}_D{'-'.join(map(str, ds))}_l{ell}.json", verify_theorem4, (q, ds, ell))
             for q, ds, ell in MIXED]
    failed = 0
    for name, fn, params in jobs:
        try:
            report = fn(*params, workers=args.workers)
        except TheoremViolation as exc:
            report, failed = exc.report, failed + 1
        doc = report.to_json(include_meta=not args.no_meta)
        (args.out / name).write_text(json.dumps(doc, sort_keys=True, indent=1) + "\n")
        print(f"{name:32s} max={report.max_size_found:<4d} bound={report.predicted_bound:<4d} "
              f"families={report.maximum_family_count:<4d} {report.classifications}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
