"""Classical Hall numbers by brute-force submodule enumeration.

Used only as an independent check on the derived counting engine.
"""
from __future__ import annotations

import itertools

import numpy as np

from ..config import DEFAULT
from ..errors import BudgetExceeded
from ..finfield import FiniteField
from .decompose import decompose, is_iso_to_labels
from .rep import Rep, quotient, subrep


def gaussian_binomial(n, k, q):
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspaces(F: FiniteField, n: int, k: int):
    """All k-dimensional subspaces of F^n, each as an n x k matrix of basis columns."""
    if k == 0:
        yield np.zeros((n, 0), dtype=np.int64)
        return
    for piv in itertools.combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(piv[r] + 1, n) if c not in piv]
        for vals in itertools.product(range(F.q), repeat=len(free)):
            R = np.zeros((k, n), dtype=np.int64)
            for r, c in enumerate(piv):
                R[r, c] = 1
            for (r, c), v in zip(free, vals):
                R[r, c] = v
            yield R.T.copy()


def _stable(L: Rep, U):
    F = L.F
    for k, (s, t) in enumerate(L.Q.arrows):
        if U[s].shape[1] == 0:
            continue
        img = F.matmul(L.mats[k], U[s])
        if F.rank(np.hstack([U[t], img])) != U[t].shape[1]:
            return False
    return True


def submodule_hall_oracle(X: Rep, Y: Rep, L: Rep, budget=None) -> int:
    """Number of subrepresentations U of L with U ~ Y and L/U ~ X."""
    F = L.F
    budget = DEFAULT.enum_budget if budget is None else budget
    if tuple(a + b for a, b in zip(X.dims, Y.dims)) != L.dims:
        return 0
    cost = 1
    for n, k in zip(L.dims, Y.dims):
        cost *= gaussian_binomial(n, k, F.q)
    if cost > budget:
        raise BudgetExceeded(cost, budget, "subspace enumeration")
    x_labels = decompose(X)
    y_labels = decompose(Y)
    count = 0
    spaces = [list(subspaces(F, n, k)) for n, k in zip(L.dims, Y.dims)]
    for U in itertools.product(*spaces):
        if not _stable(L, U):
            continue
        sub, _ = subrep(L, U)
        if not is_iso_to_labels(sub, y_labels):
            continue
        quo, _ = quotient(L, U)
        if is_iso_to_labels(quo, x_labels):
            count += 1
    return count
