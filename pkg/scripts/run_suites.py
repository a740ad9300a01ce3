"""Run every property suite at its acceptance budget and write SuiteReport JSON.

    python3 scripts/run_suites.py --seed 2024 --out results/
"""
import argparse
import sys
import time
from pathlib import Path

from hyperdyn import harness, io


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--out", default="results")
    ap.add_argument("--scale", type=float, default=1.0, help="multiply every budget")
    ap.add_argument("--suite", action="append", help="restrict to these suites")
    args = ap.parse_args()

    budgets = dict(harness.ACCEPTANCE_BUDGETS)
    budgets.setdefault("period_iteration", 200)
    budgets.setdefault("chromatic_oracle", 100)
    names = args.suite or list(budgets)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failed = 0
    for name in names:
        budget = max(1, round(budgets.get(name, 100) * args.scale))
        t = time.perf_counter()
        rep = harness.run_suite(name, budget, args.seed)
        dt = time.perf_counter() - t
        (out / f"{name}.json").write_text(io.dumps(rep.to_dict()))
        failed += rep.failed
        stats = ", ".join(f"{k}={v}" for k, v in sorted(rep.stats.items()))
        print(f"{name:20s} {rep.passed:4d}/{rep.instances:<4d} {dt:6.1f}s  {stats}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
