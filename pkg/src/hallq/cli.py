"""Command-line interface: catalogue, hall, fit and check.

Exit codes: 0 ok, 2 bad input, 3 budget exceeded, 4 object outside the
catalogue, 5 no fit or failed validation, 6 failed check suite.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import BudgetExceeded, HallqError, NoFit, NotInCatalogue, ParseError
from .finfield import field_of_order
from .objspec import parse_objspec
from .quiverrep.catalogue import catalogue, label_class, label_dims
from .quiverrep.quiver import parse_quiver

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_CATALOGUE, EXIT_FIT, EXIT_CHECK = 0, 2, 3, 4, 5, 6


class Output:
    """Buffers "KEY: value" lines, or a JSON record with --records."""

    def __init__(self, records: bool):
        self.records = records
        self.lines: list = []
        self.data: dict = {}

    def kv(self, key, value):
        self.lines.append(f"{key}: {value}")
        self._store(key.lower(), value)

    def raw(self, line):
        self.lines.append(line)
        self.data.setdefault("lines", []).append(line)

    def put(self, key, value):
        self._store(key.lower(), value)

    def _store(self, key, value):
        if isinstance(value, Fraction):
            value = str(value)
        if key in self.data:
            if not isinstance(self.data[key], list):
                self.data[key] = [self.data[key]]
            self.data[key].append(value)
        else:
            self.data[key] = value

    def emit(self, stream=None):
        stream = stream or sys.stdout
        if self.records:
            stream.write(json.dumps(self.data, sort_keys=True, default=str) + "\n")
        else:
            for line in self.lines:
                stream.write(line + "\n")
        stream.flush()


def _budget(args):
    if args.budget is not None:
        return args.budget
    raw = os.environ.get("HALLQ_BUDGET")
    if raw:
        try:
            return int(float(raw))
        except ValueError:
            raise ParseError(f"HALLQ_BUDGET must be a number, got {raw!r}")
    return 10**7


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _objects(args):
    Q = parse_quiver(args.quiver)
    return Q, parse_objspec(Q, args.X), parse_objspec(Q, args.Y), parse_objspec(Q, args.L)


# -- subcommands ----------------------------------------------------------------

def cmd_catalogue(args, out):
    Q = parse_quiver(args.quiver)
    labels = catalogue(Q, args.dim_bound)
    out.kv("QUIVER", Q.name)
    out.kv("DIM_BOUND", args.dim_bound)
    out.kv("COUNT", len(labels))
    for lab in labels:
        dims = ",".join(str(d) for d in label_dims(Q, lab))
        cls = ",".join(c for c in "PRI" if c in label_class(Q, lab))
        out.kv("LABEL", f"{lab} dims=({dims}) class={cls}")
    return EXIT_OK


def cmd_hall(args, out):
    from .hallengine.hall import derived_hall

    Q, X, Y, L = _objects(args)
    F = field_of_order(args.q)
    res = derived_hall(X, Y, L, F, _budget(args))
    out.kv("QUIVER", Q.name)
    out.kv("Q", F.q)
    out.kv("X", X)
    out.kv("Y", Y)
    out.kv("L", L)
    out.kv("AUT_X", res.aut_x)
    out.kv("AUT_Y", res.aut_y)
    for k in sorted(res.braces):
        out.kv(f"BRACE_{k}", res.braces[k])
    out.kv("COUNT_A", "skipped" if res.count_a is None else res.count_a)
    out.kv("ROUTE_A", "skipped" if res.route_a is None else res.route_a)
    out.kv("COUNT_B", "skipped" if res.count_b is None else res.count_b)
    out.kv("ROUTE_B", "skipped" if res.route_b is None else res.route_b)
    out.kv("CROSS_CHECK", "yes" if res.cross_checked else res.note)
    out.raw(f"F = {res.value}")
    out.put("F", res.value)
    return EXIT_OK


def cmd_fit(args, out):
    from .genericfit import fit_rational, sweep, validate

    Q, X, Y, L = _objects(args)
    if set(args.fit_primes) & set(args.holdout):
        raise ParseError("holdout fields must differ from the fit fields")
    budget = _budget(args)
    out.kv("QUIVER", Q.name)
    out.kv("X", X)
    out.kv("Y", Y)
    out.kv("L", L)
    fit = sweep(X, Y, L, args.fit_primes, budget)
    for p in fit.points:
        out.kv("SAMPLE", f"q={p.q} F={p.value}")
    for q, why in fit.skipped:
        out.kv("SKIPPED", f"q={q} {why}")
    try:
        f = fit_rational(fit.points, args.deg_bound)
    except NoFit as exc:
        out.kv("FIT", f"none ({exc})")
        out.raw("NOFIT")
        return EXIT_FIT
    hold = sweep(X, Y, L, args.holdout, budget)
    for q, why in hold.skipped:
        out.kv("SKIPPED", f"q={q} {why}")
    rep = validate(f, hold.points)
    for p in hold.points:
        out.kv("RESIDUAL", f"q={p.q} {p.value - f(p.q) if _finite(f, p.q) else 'pole'}")
    ok = rep.passed and bool(hold.points)
    out.put("fit", str(f))
    out.put("validated", ok)
    out.raw(f"{f}  {'VALIDATED' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FIT


def _finite(f, q):
    try:
        f(q)
        return True
    except ZeroDivisionError:
        return False


def cmd_check(args, out):
    from .hallengine.checks import check_brace_log, check_middle_log
    from .hallengine.suites import SUITES, run_suite

    Q = parse_quiver(args.quiver)
    if args.suite not in SUITES + ("all",):
        raise ParseError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all")
    rep = run_suite(args.suite, Q, tuple(args.q), args.seed, args.count, _budget(args))
    if args.suite in ("all", "selfext"):
        rep.merge(check_middle_log())
    rep.merge(check_brace_log())
    out.kv("SUITE", args.suite)
    out.kv("QUIVER", Q.name)
    out.kv("FIELDS", ",".join(map(str, args.q)))
    out.kv("SEED", args.seed)
    for line in rep.lines:
        out.raw(line)
    out.kv("INSTANCES", rep.instances)
    out.kv("VACUOUS", rep.vacuous)
    out.kv("SKIPPED", rep.skipped)
    out.kv("FAILURES", len(rep.failures))
    for w in rep.failures:
        out.kv("WITNESS", json.dumps(w, sort_keys=True, default=str))
    out.raw("PASS" if rep.passed else "FAIL")
    out.put("passed", rep.passed)
    return EXIT_OK if rep.passed else EXIT_CHECK


# -- parser -------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="hallq", description="Derived Hall numbers over finite fields.")
    ap.add_argument("--records", action="store_true", help="emit one JSON record instead of text lines")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalogue", help="list indecomposable labels")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim-bound", type=int, default=4)
    p.set_defaults(func=cmd_catalogue)

    def objs(p):
        p.add_argument("--quiver", required=True)
        p.add_argument("--X", required=True)
        p.add_argument("--Y", required=True)
        p.add_argument("--L", required=True)
        p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("hall", help="one derived Hall number")
    objs(p)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_hall)

    p = sub.add_parser("fit", help="sweep fields, fit a rational function, validate on holdout")
    objs(p)
    p.add_argument("--fit-primes", type=_int_list, default=[2, 3, 5, 7, 11])
    p.add_argument("--holdout", type=_int_list, default=[13])
    p.add_argument("--deg-bound", type=int, default=8)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("check", help="run an identity-check suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--quiver", required=True)
    p.add_argument("--q", type=_int_list, default=[2, 3])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = Output(getattr(args, "records", False))
    try:
        code = args.func(args, out)
    except BudgetExceeded as exc:
        print(f"ERROR: budget exceeded: {exc}", file=sys.stderr)
        print(f"COST: {exc.cost}", file=sys.stderr)
        return EXIT_BUDGET
    except NotInCatalogue as exc:
        print(f"ERROR: outside catalogue: {exc}", file=sys.stderr)
        return EXIT_CATALOGUE
    except NoFit as exc:
        print(f"ERROR: no fit: {exc}", file=sys.stderr)
        return EXIT_FIT
    except HallqError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
