"""Krull-Schmidt decomposition into catalogued labels.

The multiplicity of an indecomposable C in M equals the rank of the pairing
Hom(C, M) x Hom(M, C) -> End(C) -> End(C)/rad = k.  Every catalogued label has
residue field k, so the residue map is a linear functional on End(C); we solve
for it once per label.  Pivot rows of the pairing give explicit split
monomorphisms, which assemble into an isomorphism that is checked vertexwise.
"""
from __future__ import annotations

from collections import Counter

import numpy as np

from ..errors import BudgetExceeded, CertificationFailed, NotInCatalogue
from ..finfield import gl_order, mat_solve
from .catalogue import label_key, labels_upto, realize
from .quiver import dim_leq
from .rep import Rep, aut_order_brute, hom_basis

_RESIDUE: dict = {}
_DECOMP: dict = {}


def residue_functional(C: Rep):
    """Per-vertex matrices ell_i with pi(phi) = sum_i <ell_i, phi_i> on End(C)."""
    hit = _RESIDUE.get(C.key)
    if hit is not None:
        return hit
    F = C.F
    hs = hom_basis(C, C)
    v = min((i for i in range(C.Q.n) if C.dims[i]), key=lambda i: C.dims[i])
    n = C.dims[v]
    lam = []
    for phi in hs.basis:
        block = phi[v]
        for t in range(F.q):
            shifted = F.sub(block, F.mul(np.eye(n, dtype=np.int64), t))
            if F.rank(shifted) < n:
                lam.append(t)
                break
        else:
            raise CertificationFailed("endomorphism without eigenvalue in k; label is not split")
    sol = mat_solve(F, hs.flat).solve(np.array(lam, dtype=np.int64))
    if sol is None:
        raise CertificationFailed("residue map is not linear on End")
    ell = []
    for i in range(C.Q.n):
        o = hs.offsets[i]
        ell.append(sol[o:o + C.dims[i] ** 2].reshape(C.dims[i], C.dims[i]))
    _RESIDUE[C.key] = ell
    return ell


def pairing_matrix(C: Rep, M: Rep):
    """B[a, b] = residue(v_b o u_a) for bases u of Hom(C, M) and v of Hom(M, C)."""
    F = C.F
    hu = hom_basis(C, M)
    hv = hom_basis(M, C)
    du, dv = hu.dim, hv.dim
    if du == 0 or dv == 0:
        return np.zeros((du, dv), dtype=np.int64), hu
    ell = residue_functional(C)
    W = []
    for i in range(C.Q.n):
        c, m = C.dims[i], M.dims[i]
        if c == 0 or m == 0:
            continue
        o = hv.offsets[i]
        V = hv.flat[:, o:o + c * m].reshape(dv, c, m)
        Vt = np.transpose(V, (0, 2, 1))
        if F.prime:
            Wi = np.matmul(Vt, ell[i]) % F.p
        else:
            Wi = np.stack([F.matmul(x, ell[i]) for x in Vt])
        W.append(Wi.reshape(dv, m * c))
    Uparts = []
    for i in range(C.Q.n):
        c, m = C.dims[i], M.dims[i]
        if c == 0 or m == 0:
            continue
        o = hu.offsets[i]
        Uparts.append(hu.flat[:, o:o + m * c])
    U = np.hstack(Uparts)
    Wm = np.hstack(W)
    return F.matmul(U, Wm.T), hu


def multiplicity(C: Rep, M: Rep, with_witness=False):
    F = C.F
    if not dim_leq(C.dims, M.dims):
        return (0, []) if with_witness else 0
    B, hu = pairing_matrix(C, M)
    if B.size == 0:
        return (0, []) if with_witness else 0
    if not with_witness:
        return F.rank(B)
    _, rows = F.rref(B.T)
    return len(rows), [hu.unflatten(hu.flat[a]) for a in rows]


def _certify(M, maps):
    """Check that the summand inclusions add up to an isomorphism."""
    F = M.F
    for i in range(M.Q.n):
        if M.dims[i] == 0:
            continue
        cols = [u[i] for u in maps if u[i].shape[1]]
        if not cols:
            return False
        U = np.hstack(cols)
        if U.shape[0] != U.shape[1] or not F.is_invertible(U):
            return False
    return True


def decompose(M: Rep, candidates=None, certify=True):
    """Multiset of labels (sorted list) whose realizations sum to M up to isomorphism."""
    key = (M.key, tuple(candidates) if candidates is not None else None)
    hit = _DECOMP.get(key)
    if hit is not None:
        return list(hit)
    if M.is_zero():
        return []
    Q = M.Q
    labels = labels_upto(Q, M.dims) if candidates is None else candidates
    labels = sorted(labels, key=lambda lab: label_key(Q, lab))
    remaining = list(M.dims)
    found = []
    maps = []
    for lab in labels:
        if not any(remaining):
            break
        C = realize(Q, lab, M.F)
        if not dim_leq(C.dims, remaining):
            continue
        m, wit = multiplicity(C, M, with_witness=True)
        if m:
            found += [lab] * m
            maps += wit
            remaining = [r - m * c for r, c in zip(remaining, C.dims)]
    if any(remaining):
        raise NotInCatalogue(
            f"summands {found} leave dimension vector {tuple(remaining)} unexplained in {M!r}")
    if certify and not _certify(M, maps):
        raise CertificationFailed(f"no isomorphism assembled for {M!r}")
    _DECOMP[key] = tuple(found)
    return found


def is_iso_to_labels(M: Rep, labels) -> bool:
    """Whether M is isomorphic to the direct sum of the given labels."""
    Q = M.Q
    counts = Counter(labels)
    total = [0] * Q.n
    reals = {}
    for lab, m in counts.items():
        C = realize(Q, lab, M.F)
        reals[lab] = C
        total = [t + m * c for t, c in zip(total, C.dims)]
    if tuple(total) != M.dims:
        return False
    for lab, m in counts.items():
        if multiplicity(reals[lab], M) != m:
            return False
    return True


def end_dim_labels(Q, labels, F):
    counts = Counter(labels)
    total = 0
    for a, ma in counts.items():
        A = realize(Q, a, F)
        for b, mb in counts.items():
            total += ma * mb * hom_basis(A, realize(Q, b, F)).dim
    return total


def aut_order_labels(Q, labels, F) -> int:
    """|Aut| of a catalogued direct sum: prod |GL_m(q)| * q^(dim End - sum m^2)."""
    counts = Counter(labels)
    out = 1
    for m in counts.values():
        out *= gl_order(m, F.q)
    rad = end_dim_labels(Q, labels, F) - sum(m * m for m in counts.values())
    return out * F.q**rad


def aut_order_module(M: Rep, method="formula", budget=None) -> int:
    if method == "brute":
        return aut_order_brute(M, budget)
    labels = decompose(M)
    return aut_order_labels(M.Q, labels, M.F)
