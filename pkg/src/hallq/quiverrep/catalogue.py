"""Field-independent labels for indecomposable representations and their realizations.

Label strings per family:

* A_n:   ``I[i,j]`` interval module on vertices i..j.
* C_m:   ``C(t,l)`` uniserial nilpotent module with top at t and length l.
* K:     ``P<n>`` (dims n, n+1), ``I<n>`` (dims n+1, n), ``R0(n)``, ``R1(n)``, ``Rinf(n)``.
* A~21:  ``P<v>.<r>`` = tau^-r P(v), ``I<v>.<r>`` = tau^r I(v), rank-2 tube modules
         ``T2a(l)``/``T2b(l)``, and the rank-1 tubes ``T1(l)`` (gamma nilpotent) and
         ``H(l)`` (gamma - beta.alpha nilpotent).
"""
from __future__ import annotations

import re
from functools import lru_cache

import numpy as np

from ..errors import BadLabel, BudgetExceeded
from ..finfield import FiniteField, field_make, vector_block
from .quiver import QuiverPreset, dim_leq
from .rep import Rep, hom_basis

_RE_A = re.compile(r"^I\[(\d+),(\d+)\]$")
_RE_C = re.compile(r"^C\((\d+),(\d+)\)$")
_RE_KP = re.compile(r"^([PI])(\d+)$")
_RE_KR = re.compile(r"^R(0|1|inf)\((\d+)\)$")
_RE_TP = re.compile(r"^([PI])([123])\.(\d+)$")
_RE_T2 = re.compile(r"^T2([ab])\((\d+)\)$")
_RE_T1 = re.compile(r"^(T1|H)\((\d+)\)$")


def parse_label(Q: QuiverPreset, label: str):
    """Validate a label and return (canonical string, structured tag)."""
    s = label.replace(" ", "")
    fam = Q.family
    if fam == "A":
        m = _RE_A.match(s)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            if 1 <= i <= j <= Q.n:
                return f"I[{i},{j}]", ("I", i, j)
    elif fam == "C":
        m = _RE_C.match(s)
        if m:
            t, l = int(m.group(1)), int(m.group(2))
            if 1 <= t <= Q.n and l >= 1:
                return f"C({t},{l})", ("C", t, l)
    elif fam == "K":
        m = _RE_KP.match(s)
        if m:
            return f"{m.group(1)}{int(m.group(2))}", (m.group(1), int(m.group(2)))
        m = _RE_KR.match(s)
        if m and int(m.group(2)) >= 1:
            return f"R{m.group(1)}({int(m.group(2))})", ("R" + m.group(1), int(m.group(2)))
    elif fam == "A~21":
        m = _RE_TP.match(s)
        if m:
            return f"{m.group(1)}{m.group(2)}.{int(m.group(3))}", (m.group(1), int(m.group(2)), int(m.group(3)))
        m = _RE_T2.match(s)
        if m and int(m.group(2)) >= 1:
            return f"T2{m.group(1)}({int(m.group(2))})", ("T2" + m.group(1), int(m.group(2)))
        m = _RE_T1.match(s)
        if m and int(m.group(2)) >= 1:
            return f"{m.group(1)}({int(m.group(2))})", (m.group(1), int(m.group(2)))
    raise BadLabel(f"{label!r} is not a label for {Q.name}")


def canon_label(Q, label):
    return parse_label(Q, label)[0]


_KIND_ORDER = {"P": 0, "R0": 1, "R1": 2, "Rinf": 3, "T1": 1, "H": 2, "T2a": 3, "T2b": 4, "I": 5}


@lru_cache(maxsize=None)
def label_key(Q, label):
    """Total order on labels: preprojective < regular < preinjective, then parameters."""
    _, tag = parse_label(Q, label)
    if Q.family in ("A", "C"):
        return (0,) + tag[1:]
    kind = tag[0]
    rest = tag[1:]
    if Q.family == "A~21" and kind in ("P", "I"):
        rest = (rest[1], rest[0])  # orbit index first
    return (_KIND_ORDER[kind],) + rest


def label_class(Q, label):
    """Set of P/R/I tags. Dynkin modules are both preprojective and preinjective."""
    _, tag = parse_label(Q, label)
    if Q.family == "A":
        return frozenset({"P", "I"})
    if Q.family == "C":
        return frozenset({"R"})
    kind = tag[0]
    if kind == "P":
        return frozenset({"P"})
    if kind == "I":
        return frozenset({"I"})
    return frozenset({"R"})


# -- A~21 combinatorics ----------------------------------------------------

# clockwise letters: (from, to, arrow index, forward?)
_AT_STEP = {0: (1, 0, True), 1: (2, 1, True), 2: (0, 2, False)}
_AT_PROJ = {1: (1, 1, 2), 2: (0, 1, 1), 3: (0, 0, 1)}
_AT_INJ = {1: (1, 0, 0), 2: (1, 1, 0), 3: (2, 1, 1)}


def _coxeter(Q):
    n = Q.n
    E = np.eye(n, dtype=object)
    for s, t in Q.arrows:
        E[s, t] -= 1
    from sympy import Matrix
    Em = Matrix(E.tolist())
    phi = -Em.inv() * Em.T
    return phi, phi.inv()


@lru_cache(maxsize=None)
def _tau_orbit_dims(Q, kind, v, r):
    from sympy import Matrix
    phi, phi_inv = _coxeter(Q)
    base = _AT_PROJ if kind == "P" else _AT_INJ
    x = Matrix(base[v])
    step = phi_inv if kind == "P" else phi
    for _ in range(r):
        x = step * x
    return tuple(int(c) for c in x)


def _string_vertices(start, length):
    """Vertices (0-based) visited by the clockwise walk with `length` letters."""
    vs = [start]
    for _ in range(length):
        vs.append(_AT_STEP[vs[-1]][0])
    return vs


def _string_dims(start, length):
    d = [0, 0, 0]
    for v in _string_vertices(start, length):
        d[v] += 1
    return tuple(d)


def _string_rep(Q, F, start, length):
    vs = _string_vertices(start, length)
    dims = [0, 0, 0]
    local = []
    for v in vs:
        local.append(dims[v])
        dims[v] += 1
    mats = [np.zeros((dims[t], dims[s]), dtype=np.int64) for s, t in Q.arrows]
    for k in range(length):
        v = vs[k]
        _, arrow, forward = _AT_STEP[v]
        if forward:
            mats[arrow][local[k + 1], local[k]] = 1
        else:
            mats[arrow][local[k], local[k + 1]] = 1
    return Rep(Q, F, dims, mats)


def _find_string(dims):
    n = sum(dims)
    for start in range(3):
        if _string_dims(start, n - 1) == tuple(dims):
            return start, n - 1
    return None


def _t2_string(kind, l):
    # E_a = [2] has one basis vector, E_b = [3 gamma^-1 1] has two
    start = 1 if kind == "T2a" else 2
    first_a = kind == "T2a"
    count = 0
    for k in range(l):
        is_a = (k % 2 == 0) == first_a
        count += 1 if is_a else 2
    return start, count - 1


# -- realization -----------------------------------------------------------

def _jordan(n, lam, F):
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        m[i, i] = lam
        if i + 1 < n:
            m[i + 1, i] = 1
    return m


_REAL_CACHE: dict = {}


def realize(Q: QuiverPreset, label: str, F: FiniteField) -> Rep:
    """The canonical representative of a labelled indecomposable over F."""
    canon, tag = parse_label(Q, label)
    key = (Q.name, canon, F.p, F.r)
    hit = _REAL_CACHE.get(key)
    if hit is not None:
        return hit
    rep = _realize(Q, tag, F)
    _REAL_CACHE[key] = rep
    return rep


def _realize(Q, tag, F):
    fam = Q.family
    if fam == "A":
        _, i, j = tag
        dims = [1 if i - 1 <= v <= j - 1 else 0 for v in range(Q.n)]
        mats = [np.ones((dims[t], dims[s]), dtype=np.int64) for s, t in Q.arrows]
        return Rep(Q, F, dims, mats)
    if fam == "C":
        _, t, l = tag
        m = Q.n
        where = [(t - 1 + k) % m for k in range(l)]
        dims = [0] * m
        local = []
        for v in where:
            local.append(dims[v])
            dims[v] += 1
        mats = [np.zeros((dims[b], dims[a]), dtype=np.int64) for a, b in Q.arrows]
        for k in range(l - 1):
            v = where[k]
            arrow = Q.arrows_from(v)[0]
            mats[arrow][local[k + 1], local[k]] = 1
        return Rep(Q, F, dims, mats)
    if fam == "K":
        kind, n = tag
        I = np.eye(n, dtype=np.int64)
        if kind == "P":
            z = np.zeros((1, n), dtype=np.int64)
            return Rep(Q, F, (n, n + 1), [np.vstack([I, z]), np.vstack([z, I])])
        if kind == "I":
            z = np.zeros((n, 1), dtype=np.int64)
            return Rep(Q, F, (n + 1, n), [np.hstack([I, z]), np.hstack([z, I])])
        if kind == "R0":
            return Rep(Q, F, (n, n), [I, _jordan(n, 0, F)])
        if kind == "R1":
            return Rep(Q, F, (n, n), [I, _jordan(n, 1, F)])
        return Rep(Q, F, (n, n), [_jordan(n, 0, F), I])
    # A~21
    kind = tag[0]
    if kind in ("P", "I"):
        _, v, r = tag
        dims = _tau_orbit_dims(Q, kind, v, r)
        found = _find_string(dims) if min(dims) >= 0 and sum(dims) > 0 else None
        if found is None:
            raise BadLabel(f"no string module with dimension vector {dims}")
        return _string_rep(Q, F, *found)
    if kind in ("T2a", "T2b"):
        return _string_rep(Q, F, *_t2_string(kind, tag[1]))
    n = tag[1]
    if kind == "T1":
        return _string_rep(Q, F, 0, 3 * n - 1)
    I = np.eye(n, dtype=np.int64)
    return Rep(Q, F, (n, n, n), [I, I, _jordan(n, 1, F)])


@lru_cache(maxsize=None)
def label_dims(Q, label):
    return realize(Q, label, field_make(2)).dims


# -- enumeration -------------------------------------------------------------

def _family_labels(Q, bound):
    """All labels whose total dimension is at most `bound`."""
    fam = Q.family
    out = []
    if fam == "A":
        out = [f"I[{i},{j}]" for i in range(1, Q.n + 1) for j in range(i, Q.n + 1)
               if j - i + 1 <= bound]
    elif fam == "C":
        out = [f"C({t},{l})" for t in range(1, Q.n + 1) for l in range(1, bound + 1)]
    elif fam == "K":
        for n in range(0, bound + 1):
            if 2 * n + 1 <= bound:
                out += [f"P{n}", f"I{n}"]
            if n >= 1 and 2 * n <= bound:
                out += [f"R0({n})", f"R1({n})", f"Rinf({n})"]
    else:
        for kind in ("P", "I"):
            for v in (1, 2, 3):
                r = 0
                while True:
                    d = _tau_orbit_dims(Q, kind, v, r)
                    if sum(d) > bound:
                        break
                    out.append(f"{kind}{v}.{r}")
                    r += 1
        for l in range(1, bound + 1):
            if 3 * l <= bound:
                out += [f"T1({l})", f"H({l})"]
            for kind in ("T2a", "T2b"):
                s, length = _t2_string(kind, l)
                if length + 1 <= bound:
                    out.append(f"{kind}({l})")
    return out


def catalogue(Q: QuiverPreset, dim_bound: int = 8):
    labels = [lab for lab in _family_labels(Q, dim_bound) if sum(label_dims(Q, lab)) <= dim_bound]
    return sorted(labels, key=lambda lab: label_key(Q, lab))


@lru_cache(maxsize=None)
def labels_upto(Q, dims):
    """Labels whose dimension vector is componentwise at most `dims`."""
    dims = tuple(dims)
    return tuple(lab for lab in catalogue(Q, sum(dims)) if dim_leq(label_dims(Q, lab), dims))


def certify_indecomposable(M: Rep, budget: int = 2**20) -> bool:
    """True iff End(M) has no idempotents besides 0 and 1 (exhaustive)."""
    F = M.F
    hs = hom_basis(M, M)
    d = hs.dim
    if d == 0:
        return False
    if F.q**d > budget:
        raise BudgetExceeded(F.q**d, budget, "End idempotent search")
    ident = np.concatenate([np.eye(n, dtype=np.int64).ravel() for n in M.dims])
    count = 0
    for c in vector_block(F, d):
        e = hs.combine(c)
        sq = tuple(F.matmul(x, x) for x in e)
        if all(np.array_equal(a, b) for a, b in zip(sq, e)):
            flat = np.concatenate([x.ravel() for x in e])
            if np.any(flat != 0) and np.any(flat != ident):
                return False
            count += 1
    return count == 2
