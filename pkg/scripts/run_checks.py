"""Run the structural check suites and print one line per suite."""

import argparse
import sys

from flagcohom.checks import SUITES, run_suite


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    a = p.parse_args()
    results = run_suite(a.suite)
    for r in results:
        print(f"{r.name:<28} {'PASS' if r.passed else 'FAIL'}  {r.cases} cases  {r.elapsed:.2f}s")
        for f in r.failures[:5]:
            print(f"    {f}")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
