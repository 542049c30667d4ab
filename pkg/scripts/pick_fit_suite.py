"""Draw the fit-and-validate triples stored as FIT_SUITE in regression.py.

Keeps non-split triples whose cheaper counting route has dimension <= 5
(so q = 13 stays within budget), five per preset, and prints each with its
fitted function.  Paste the printed rows into FIT_SUITE to refreeze.
"""
import random
import time

from hallq.finfield import field_of_order
from hallq.genericfit import fit_and_validate
from hallq.hallengine import suites
from hallq.hallengine.suites import _dh
from hallq.quiverrep.quiver import parse_quiver

PRESETS = ["A2:1>2", "A3:1>2,2>3", "C1", "C2", "K", "A~21"]


def main():
    F2 = field_of_order(2)
    for qn in PRESETS:
        Q = parse_quiver(qn)
        rng = random.Random("fit:" + qn)
        got = []
        tries = 0
        while len(got) < 5 and tries < 2000:
            tries += 1
            t = suites.gen_triple(Q, rng, F2, 10**6)
            if t is None:
                continue
            X, Y, L = t
            if min(_dh(Y, L, F2), _dh(L, X, F2)) > 5 or L == X + Y:
                continue
            row = tuple(map(str, t))
            if row in [g[0] for g in got]:
                continue
            t0 = time.time()
            f, fit, hold, rep = fit_and_validate(X, Y, L)
            constant_one = f.num == (1,) and f.den == (1,)
            if f.num == (0,) or (constant_one and rng.random() < 0.8):
                continue
            got.append((row, str(f), rep.passed, round(time.time() - t0, 1)))
        for row, f, ok, secs in got:
            print(f"({row[0]!r}, {row[1]!r}, {row[2]!r}),  # {f} {'ok' if ok else 'FAILED'} {secs}s")


if __name__ == "__main__":
    main()
