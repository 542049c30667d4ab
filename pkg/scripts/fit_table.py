"""Fit every FIT_SUITE triple on q = 2,3,5,7,11, validate at 13, print a table.

    python3 scripts/fit_table.py [--budget N]
"""
import argparse
import time

from hallq.genericfit import fit_and_validate
from hallq.hallengine.regression import FIT_SUITE
from hallq.objspec import parse_objspec
from hallq.quiverrep.quiver import parse_quiver


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=10**7)
    args = ap.parse_args()
    mismatches = 0
    for qn, rows in FIT_SUITE.items():
        Q = parse_quiver(qn)
        for (x, y, l), stored in rows:
            t0 = time.perf_counter()
            X, Y, L = (parse_objspec(Q, s) for s in (x, y, l))
            f, fit, hold, rep = fit_and_validate(X, Y, L, budget=args.budget)
            ok = rep.passed and bool(hold.points) and str(f) == stored
            mismatches += not ok
            skipped = ",".join(str(q) for q, _ in fit.skipped + hold.skipped) or "-"
            print(f"{qn:<12} {x} | {y} | {l}")
            print(f"{'':<12} {str(f):<28} {'ok' if ok else 'MISMATCH':<9} "
                  f"skipped={skipped} {time.perf_counter() - t0:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
