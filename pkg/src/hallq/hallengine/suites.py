"""Named check suites: seeded random instances plus frozen regression instances.

Every suite is deterministic given (preset, fields, seed, count).  Random
instances are drawn from small catalogue labels and filtered so that each
enumeration stays cheap; the regression lists are fixed ObjSpec strings.
"""
from __future__ import annotations

import random
from itertools import combinations_with_replacement

from ..derived import DObj, dhom_dim
from ..errors import BudgetExceeded, NotInCatalogue
from ..finfield import field_of_order
from ..objspec import parse_objspec
from ..quiverrep.catalogue import catalogue, label_class, label_dims
from ..quiverrep.quiver import parse_quiver
from .checks import (CheckReport, check_associativity, check_middle_log, check_oracle,
                     check_reduction, check_rotation, check_self_extension,
                     check_shift_formula, check_split_formula,
                     check_support_independence, module_objects)
from .embed import embed_dobj
from .hall import derived_hall, middle_terms
from .regression import REGRESSION

SUITES = ("routes", "oracle", "split", "rotation", "reduction", "associativity",
          "shift", "support", "selfext")

# small labels keep every enumeration in the thousands
_POOL_CAP = {"A": 3, "C": 3, "K": 2, "A~21": 2}
_MAX_DIM = 6


def _pool(Q):
    cap = _POOL_CAP.get(Q.family, 2)
    if Q.family == "C" and Q.n == 2:
        cap = 2
    return catalogue(Q, cap)


def _dh(A: DObj, B: DObj, F) -> int:
    if A.preset.family == "C":
        A, B = embed_dobj(A), embed_dobj(B)
    return dhom_dim(A, B, F)


def random_object(Q, rng, max_terms=2, shifts=(0,), classes=None) -> DObj:
    pool = [lab for lab in _pool(Q) if classes is None or label_class(Q, lab) & classes]
    k = rng.randint(1, max_terms)
    items = [(rng.choice(pool), rng.choice(shifts)) for _ in range(k)]
    return DObj.make(Q, items)


def _mids(X, Y, F, budget):
    try:
        return sorted(middle_terms(X, Y, F, budget), key=str)
    except (NotInCatalogue, BudgetExceeded):
        return None


def _cheap(F, *pairs):
    return all(_dh(a, b, F) <= _MAX_DIM for a, b in pairs)


# -- generators ---------------------------------------------------------------
# Each returns a tuple of DObj arguments or None when the draw is rejected.

def gen_triple(Q, rng, F, budget, max_dhom=8):
    X = random_object(Q, rng, 2, (-1, 0, 1))
    Y = random_object(Q, rng, 2, (-1, 0, 1))
    if _dh(X.shift(-1), Y, F) > _MAX_DIM:
        return None
    mids = _mids(X, Y, F, budget)
    if not mids:
        return None
    L = rng.choice(mids) if rng.random() < 0.85 else random_object(Q, rng, 2, (-1, 0, 1))
    if _dh(Y, L, F) > max_dhom or _dh(L, X, F) > max_dhom:
        return None
    return X, Y, L


def gen_pair(Q, rng, F, budget):
    X = random_object(Q, rng, 2, (-1, 0, 1))
    Y = random_object(Q, rng, 2, (-1, 0, 1))
    if not _cheap(F, (Y, X + Y), (X + Y, X), (X.shift(-1), Y)):
        return None
    return X, Y


def gen_reduction(Q, rng, F, budget):
    L2 = random_object(Q, rng, 1, (-1, 0, 1))
    if rng.random() < 0.5:
        N = random_object(Q, rng, 1, (-1, 0, 1))
        Mp = random_object(Q, rng, 1, (-1, 0, 1))
        if _dh(N, L2, F) != 0:
            return None
        mids = _mids(Mp, N, F, budget)
        M = Mp + L2
    else:
        M = random_object(Q, rng, 1, (-1, 0, 1))
        Np = random_object(Q, rng, 1, (-1, 0, 1))
        if _dh(L2, M, F) != 0:
            return None
        mids = _mids(M, Np, F, budget)
        N = Np + L2
    if not mids:
        return None
    L1 = rng.choice(mids)
    L = L1 + L2
    if not _cheap(F, (N, L), (L, M)):
        return None
    return M, N, L1, L2


def gen_quadruple(Q, rng, F, budget):
    X, Y, Z = (random_object(Q, rng, 1, (-1, 0, 1)) for _ in range(3))
    if not _cheap(F, (X.shift(-1), Y), (Y.shift(-1), Z)):
        return None
    mids = _mids(X, Y, F, budget)
    if not mids:
        return None
    W = rng.choice(mids)
    if _dh(W.shift(-1), Z, F) > _MAX_DIM:
        return None
    ends = _mids(W, Z, F, budget)
    if not ends:
        return None
    L = rng.choice(ends)
    right = _mids(Y, Z, F, budget)
    if right is None:
        return None
    for U in right:
        if not _cheap(F, (U, L), (L, X), (X.shift(-1), U)):
            return None
    for W2 in mids:
        if not _cheap(F, (Z, L), (L, W2), (W2.shift(-1), Z)):
            return None
    return X, Y, Z, L


def _add_dims(a, b, sign=1):
    return tuple(x + sign * y for x, y in zip(a, b))


def _dimvec(A):
    Q = A.preset
    out = (0,) * Q.n
    for lab in A.component(0):
        out = _add_dims(out, label_dims(Q, lab))
    return out


def gen_shift(Q, rng, F, budget):
    if Q.family != "C":
        return None
    X1 = random_object(Q, rng, 1)
    L1 = random_object(Q, rng, 1)
    U0 = DObj.zero(Q) if rng.random() < 0.3 else random_object(Q, rng, 1)
    dy = _add_dims(_add_dims(_dimvec(X1), _dimvec(U0)), _dimvec(L1), -1)
    if any(v < 0 for v in dy) or not any(dy):
        return None
    ys = module_objects(Q, dy)
    if not ys:
        return None
    Y = rng.choice(ys)
    if not _cheap(F, (X1, Y), (Y, U0 + L1.shift(1)), (U0 + L1.shift(1), X1.shift(1))):
        return None
    return X1, Y, U0, L1


def gen_support(Q, rng, F, budget):
    if rng.random() < 0.5:
        X1 = random_object(Q, rng, 1, (0,), {"P", "R"})
        X2 = random_object(Q, rng, 1, (0,), {"R", "I"})
        if rng.random() < 0.3:
            X2 = X2 + random_object(Q, rng, 1, (1,))
    else:
        X1 = random_object(Q, rng, 1, (0,), {"P", "R"}).shift(1)
        X2 = random_object(Q, rng, 1, (1,), {"R", "I"})
        if rng.random() < 0.3:
            X1 = X1 + random_object(Q, rng, 1, (0,))
    Y = random_object(Q, rng, 1, (0, 1))
    if not _cheap(F, (X2.shift(-1), Y)):
        return None
    us = _mids(X2, Y, F, budget)
    if not us:
        return None
    U = rng.choice(us)
    if _dh(X1.shift(-1), U, F) > _MAX_DIM:
        return None
    ls = _mids(X1, U, F, budget)
    if not ls:
        return None
    return X1, X2, Y, rng.choice(ls)


def module_triples(Q, max_dim_l):
    """All (X, Y, L) module triples with total dim L <= max_dim_l and matching classes."""
    objs = {}
    for total in range(0, max_dim_l + 1):
        for dims in _dim_vectors(Q.n, total):
            objs[dims] = _modules_with_dims(Q, dims)
    out = []
    for dl, Ls in objs.items():
        for dy in objs:
            dx = _add_dims(dl, dy, -1)
            if dx not in objs:
                continue
            for L in Ls:
                for Y in objs[dy]:
                    for X in objs[dx]:
                        out.append((X, Y, L))
    return out


def _dim_vectors(n, total):
    for c in combinations_with_replacement(range(n), total):
        yield tuple(c.count(i) for i in range(n))


def _modules_with_dims(Q, dims):
    if Q.family == "C":
        return module_objects(Q, dims)
    labels = [lab for lab in catalogue(Q, sum(dims)) if all(a <= b for a, b in zip(label_dims(Q, lab), dims))]
    out = []

    def rec(start, rest, chosen):
        if not any(rest):
            out.append(DObj.module(Q, chosen))
            return
        for k in range(start, len(labels)):
            d = label_dims(Q, labels[k])
            if all(a <= b for a, b in zip(d, rest)):
                rec(k, _add_dims(rest, d, -1), chosen + [labels[k]])

    rec(0, dims, [])
    return out


# -- runners ------------------------------------------------------------------

def _run_one(name, args, F, budget):
    if name == "routes":
        X, Y, L = args
        res = derived_hall(X, Y, L, F, budget)
        rep = CheckReport("routes")
        rep.record(res.agree and res.cross_checked, f"q={F.q} {X} | {Y} | {L}",
                   {"route_a": res.route_a, "route_b": res.route_b, "note": res.note},
                   vacuous=(res.value == 0))
        return rep
    if name == "oracle":
        return check_oracle(*args, F, budget)
    if name == "split":
        return check_split_formula(*args, F, budget)
    if name == "rotation":
        return check_rotation(*args, F, budget)
    if name == "reduction":
        return check_reduction(*args, F, budget)
    if name == "associativity":
        return check_associativity(*args, F, budget)
    if name == "shift":
        return check_shift_formula(*args, F, budget)
    if name == "selfext":
        return check_self_extension(*args, F, budget)
    raise ValueError(name)


_GENERATORS = {
    "routes": gen_triple,
    "split": gen_pair,
    "rotation": lambda Q, rng, F, b: gen_triple(Q, rng, F, b, _MAX_DIM),
    "reduction": gen_reduction,
    "associativity": gen_quadruple,
    "shift": gen_shift,
    "selfext": gen_pair,
}


def _safe(report_name, fn, label):
    try:
        return fn()
    except NotInCatalogue as exc:
        rep = CheckReport(report_name)
        rep.record(True, f"{label} (outside catalogue: {exc})", skipped=True)
        return rep
    except BudgetExceeded as exc:
        rep = CheckReport(report_name)
        rep.record(True, f"{label} (budget: {exc})", skipped=True)
        return rep


def regression_instances(name, Q):
    rows = REGRESSION.get(name, {}).get(Q.name, [])
    return [tuple(parse_objspec(Q, s) for s in row) for row in rows]


def run_suite(name: str, Q, qs=(2, 3), seed: int = 0, count: int = 20, budget=None,
              regression=True) -> CheckReport:
    """Run one named suite (or "all") on preset Q over every q in qs."""
    if isinstance(Q, str):
        Q = parse_quiver(Q)
    if name == "all":
        total = CheckReport("all")
        for sub in SUITES:
            total.merge(run_suite(sub, Q, qs, seed, count, budget, regression))
        total.merge(check_middle_log())
        return total
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    report = CheckReport(name)
    if name == "shift" and Q.family != "C":
        report.record(True, f"{Q.name}: the shift formula concerns cyclic presets only", skipped=True)
        return report
    if name == "support":
        return _run_support(Q, qs, seed, count, budget, regression)
    for q in qs:
        F = field_of_order(q)
        if regression:
            for args in regression_instances(name, Q):
                label = f"q={q} " + " | ".join(map(str, args))
                report.merge(_safe(name, lambda: _run_one(name, args, F, budget), label))
        if name == "oracle":
            for args in module_triples(Q, 5 if Q.family in ("A", "C") and Q.n <= 2 else 3):
                label = f"q={q} " + " | ".join(map(str, args))
                report.merge(_safe(name, lambda: _run_one(name, args, F, budget), label))
            continue
        gen = _GENERATORS[name]
        rng = random.Random(f"{seed}:{name}:{Q.name}:{q}")
        done = 0
        attempts = 0
        while done < count and attempts < 200 * max(count, 1):
            attempts += 1
            try:
                args = gen(Q, rng, F, budget)
            except (NotInCatalogue, BudgetExceeded):
                args = None
            if args is None:
                continue
            label = f"q={q} " + " | ".join(map(str, args))
            rep = _safe(name, lambda: _run_one(name, args, F, budget), label)
            report.merge(rep)
            done += rep.nonvacuous > 0
    return report


def _run_support(Q, qs, seed, count, budget, regression):
    report = CheckReport("support")
    if regression:
        for args in regression_instances("support", Q):
            report.merge(check_support_independence(*args, qs=qs, budget=budget))
    F = field_of_order(min(qs))
    rng = random.Random(f"{seed}:support:{Q.name}")
    done = attempts = 0
    while done < count and attempts < 200 * max(count, 1):
        attempts += 1
        try:
            args = gen_support(Q, rng, F, budget)
        except (NotInCatalogue, BudgetExceeded):
            args = None
        if args is None:
            continue
        label = " | ".join(map(str, args))
        rep = _safe("support", lambda: check_support_independence(*args, qs=qs, budget=budget), label)
        report.merge(rep)
        done += rep.nonvacuous > 0
    return report
