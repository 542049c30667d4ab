"""Run every identity-check suite on every preset and print a summary table.

    python3 scripts/run_checks.py [--q 2,3] [--count 10] [--seed 0]

Exit status is 1 if any suite reports a failure.
"""
import argparse
import time

from hallq.hallengine.checks import check_brace_log, check_middle_log
from hallq.hallengine.suites import SUITES, run_suite
from hallq.quiverrep.quiver import parse_quiver

PRESETS = ["A2:1>2", "A3:1>2,2>3", "C1", "C2", "K", "A~21"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", default="2,3")
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip", default="oracle", help="comma-separated suites to leave out")
    args = ap.parse_args()
    qs = tuple(int(x) for x in args.q.split(","))
    skip = set(args.skip.split(",")) if args.skip else set()

    print(f"{'suite':<14}{'preset':<14}{'inst':>6}{'vac':>6}{'skip':>6}{'fail':>6}{'secs':>8}")
    failed = 0
    for name in SUITES:
        if name in skip:
            continue
        for qn in PRESETS:
            t0 = time.perf_counter()
            rep = run_suite(name, parse_quiver(qn), qs, args.seed, args.count)
            dt = time.perf_counter() - t0
            failed += len(rep.failures)
            print(f"{name:<14}{qn:<14}{rep.instances:>6}{rep.vacuous:>6}{rep.skipped:>6}"
                  f"{len(rep.failures):>6}{dt:>8.1f}")
    for rep in (check_middle_log(), check_brace_log()):
        failed += len(rep.failures)
        print(f"{rep.name:<28}{rep.instances:>6}{'':>6}{'':>6}{len(rep.failures):>6}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
