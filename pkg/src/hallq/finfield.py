"""Exact arithmetic and linear algebra over small finite fields GF(p^r).

Elements are encoded as integers 0..q-1: the element sum(c_i x^i) is stored as
sum(c_i p^i).  Matrices are numpy int64 arrays holding encoded elements.
Prime fields use plain modular arithmetic; extension fields use log/antilog
tables for multiplication and digitwise addition.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import DEFAULT
from .errors import BudgetExceeded, NonPrime, TooLarge


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomials over GF(p), coefficient lists low -> high ------------------

def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _poly_trim(a)
    m = _poly_trim(m)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _poly_trim(a)
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _monic_polys(p, deg):
    """Monic polynomials of degree `deg`, lexicographically increasing."""
    for low in range(p**deg):
        coeffs = [(low // p**i) % p for i in range(deg)]
        yield coeffs + [1]


def is_irreducible(poly, p) -> bool:
    """Exhaustive factor search; intended for degree <= 4."""
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def least_irreducible(p, r):
    if r == 1:
        return (0, 1)
    for f in _monic_polys(p, r):
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


# -- the field ---------------------------------------------------------------

class FiniteField:
    """GF(p^r) with the lexicographically least monic irreducible modulus.

    Instances are immutable; use :func:`field_make` to obtain them.
    """

    def __init__(self, p: int, r: int = 1):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = least_irreducible(p, r)
        self.prime = r == 1
        q = self.q
        if self.prime:
            inv = np.zeros(p, dtype=np.int64)
            for x in range(1, p):
                inv[x] = pow(x, p - 2, p)
            self._inv = inv
        else:
            self._pw = np.array([p**i for i in range(r)], dtype=np.int64)
            exp = np.zeros(q - 1, dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            gen = self._find_generator()
            cur = [1]
            for k in range(q - 1):
                e = self._encode(cur)
                exp[k] = e
                log[e] = k
                cur = _poly_mod(_poly_mul(cur, gen, p), self.modulus, p)
            self._exp = exp
            self._log = log
            inv = np.zeros(q, dtype=np.int64)
            inv[1:] = exp[(-log[1:]) % (q - 1)]
            self._inv = inv

    def _encode(self, coeffs):
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def _decode(self, e):
        return [(e // self.p**i) % self.p for i in range(self.r)]

    def _find_generator(self):
        p, q = self.p, self.q
        for e in range(2, q):
            g = _poly_trim(self._decode(e))
            cur = [1]
            order = 0
            while True:
                cur = _poly_mod(_poly_mul(cur, g, p), self.modulus, p)
                order += 1
                if cur == [1]:
                    break
            if order == q - 1:
                return g
        return [1]  # q == 2 handled by prime path; unreachable for r > 1

    # equality is structural: (p, r) determines the field completely
    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self):
        return hash(("GF", self.p, self.r))

    def __repr__(self):
        return f"GF({self.q})" if self.prime else f"GF({self.p}^{self.r})"

    # -- elementwise arithmetic, on ints or int arrays ----------------------
    def elements(self):
        return np.arange(self.q, dtype=np.int64)

    def add(self, a, b):
        if self.prime:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._pw:
            out += (((a // pw) % self.p + (b // pw) % self.p) % self.p) * pw
        return out

    def neg(self, a):
        if self.prime:
            return (-np.asarray(a)) % self.p
        if self.p == 2:
            return np.asarray(a, dtype=np.int64).copy()
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros_like(a)
        for pw in self._pw:
            out += ((-((a // pw) % self.p)) % self.p) * pw
        return out

    def sub(self, a, b):
        if self.prime:
            return (np.asarray(a) - np.asarray(b)) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.prime:
            return (np.asarray(a) * np.asarray(b)) % self.p
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        s = (self._log[a] + self._log[b]) % (self.q - 1)
        return np.where((a == 0) | (b == 0), 0, self._exp[s])

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._inv[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def scalar(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    # -- matrices -------------------------------------------------------------
    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.prime:
            return (A @ B) % self.p
        out = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
        for k in range(A.shape[-1]):
            out = self.add(out, self.mul(A[..., k, None], B[k, None, :]))
        return out

    def identity(self, n):
        return np.eye(n, dtype=np.int64)

    def zeros(self, rows, cols):
        return np.zeros((rows, cols), dtype=np.int64)

    def rref(self, M):
        """Reduced row echelon form. Returns (R, pivot_columns)."""
        A = np.array(M, dtype=np.int64, copy=True)
        if A.ndim != 2:
            raise ValueError("rref expects a 2-d array")
        rows, cols = A.shape
        piv = []
        r = 0
        for c in range(cols):
            if r >= rows:
                break
            nz = np.flatnonzero(A[r:, c])
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                A[[r, i]] = A[[i, r]]
            A[r] = self.mul(A[r], self._inv[A[r, c]])
            f = A[:, c].copy()
            f[r] = 0
            others = np.flatnonzero(f)
            if others.size:
                A[others] = self.sub(A[others], self.mul(f[others, None], A[r][None, :]))
            piv.append(c)
            r += 1
        return A, piv

    def rank(self, M):
        M = np.asarray(M)
        if M.size == 0:
            return 0
        return len(self.rref(M)[1])

    def nullspace(self, M):
        """Basis of {v : M v = 0} as the rows of a matrix, itself in RREF."""
        M = np.asarray(M, dtype=np.int64)
        rows, cols = M.shape
        if cols == 0:
            return np.zeros((0, 0), dtype=np.int64)
        if rows == 0:
            return np.eye(cols, dtype=np.int64)
        R, piv = self.rref(M)
        free = [c for c in range(cols) if c not in set(piv)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for k, j in enumerate(free):
            basis[k, j] = 1
            for i, pc in enumerate(piv):
                basis[k, pc] = self.neg(R[i, j])
        if len(free) > 1:
            basis = self.rref(basis)[0]
        return basis

    def det(self, M):
        """Determinant by cofactor expansion (used only as an oracle)."""
        M = np.asarray(M, dtype=np.int64)
        n = M.shape[0]
        if n == 0:
            return 1
        if n == 1:
            return int(M[0, 0])
        total = 0
        for j in range(n):
            if M[0, j] == 0:
                continue
            minor = np.delete(np.delete(M, 0, axis=0), j, axis=1)
            term = int(self.mul(M[0, j], self.det(minor)))
            total = int(self.add(total, term) if j % 2 == 0 else self.sub(total, term))
        return total

    def is_invertible(self, M):
        M = np.asarray(M)
        return M.shape[0] == M.shape[1] and self.rank(M) == M.shape[0]

    def inverse(self, M):
        M = np.asarray(M, dtype=np.int64)
        n = M.shape[0]
        R, piv = self.rref(np.hstack([M, np.eye(n, dtype=np.int64)]))
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return R[:, n:]


@lru_cache(maxsize=None)
def _field_cached(p, r):
    return FiniteField(p, r)


def field_make(p: int, r: int = 1, budget: int | None = None) -> FiniteField:
    if p < 2 or not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be >= 1")
    budget = DEFAULT.element_budget if budget is None else budget
    if p**r > budget:
        raise TooLarge(f"GF({p}^{r}) exceeds element budget {budget}")
    return _field_cached(p, r)


def field_of_order(q: int) -> FiniteField:
    """GF(q) for a prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            n = q
            while n % p == 0:
                n //= p
                r += 1
            if n != 1:
                raise NonPrime(f"{q} is not a prime power")
            return field_make(p, r)
    raise NonPrime(f"{q} is not a prime power")


@dataclass
class Solved:
    """Row-reduction data for a matrix M, enough to solve M x = b."""

    field: FiniteField
    rank: int
    kernel_basis: np.ndarray
    pivots: list
    transform: np.ndarray   # E with E @ M == R
    cols: int

    def solve(self, b):
        """A particular solution of M x = b, or None when inconsistent."""
        F = self.field
        c = F.matmul(self.transform, np.asarray(b, dtype=np.int64).reshape(-1, 1)).ravel()
        if np.any(c[self.rank:] != 0):
            return None
        x = np.zeros(self.cols, dtype=np.int64)
        x[self.pivots] = c[: self.rank]
        return x


def mat_solve(F: FiniteField, M) -> Solved:
    M = np.asarray(M, dtype=np.int64)
    rows, cols = M.shape
    R, piv = F.rref(np.hstack([M, np.eye(rows, dtype=np.int64)]))
    piv = [c for c in piv if c < cols]
    rank = len(piv)
    # rows of the transform beyond the rank certify inconsistency
    E = R[:, cols:]
    return Solved(F, rank, F.nullspace(M), piv, E, cols)


def enumerate_vectors(F: FiniteField, d: int, budget: int | None = None):
    """All q^d coordinate vectors in lexicographic order."""
    budget = DEFAULT.enum_budget if budget is None else budget
    cost = F.q**d
    if cost > budget:
        raise BudgetExceeded(cost, budget, "vector enumeration")
    for t in itertools.product(range(F.q), repeat=d):
        yield np.array(t, dtype=np.int64)


def vector_block(F: FiniteField, d: int) -> np.ndarray:
    """All q^d vectors as the rows of one array (lexicographic order)."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((F.q,) * d).reshape(d, -1).T
    return grids.astype(np.int64)


def projective_points(F: FiniteField, d: int) -> np.ndarray:
    """Representatives of nonzero vectors up to scalars: first nonzero entry is 1."""
    blocks = []
    for lead in range(d):
        tail = vector_block(F, d - lead - 1)
        blk = np.zeros((tail.shape[0], d), dtype=np.int64)
        blk[:, lead] = 1
        blk[:, lead + 1:] = tail
        blocks.append(blk)
    if not blocks:
        return np.zeros((0, d), dtype=np.int64)
    return np.vstack(blocks)


def gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def batch_rank(F: FiniteField, mats: np.ndarray) -> np.ndarray:
    """Ranks of a stack of equally shaped matrices (shape (N, r, c))."""
    mats = np.asarray(mats, dtype=np.int64)
    N, rows, cols = mats.shape
    if rows == 0 or cols == 0 or N == 0:
        return np.zeros(N, dtype=np.int64)
    if not F.prime:
        return np.array([F.rank(m) for m in mats], dtype=np.int64)
    p = F.p
    A = mats.copy() % p
    rank = np.zeros(N, dtype=np.int64)
    idx = np.arange(N)
    for c in range(cols):
        # rows at or below the current rank that are nonzero in column c
        row_ids = np.arange(rows)[None, :]
        cand = (A[:, :, c] != 0) & (row_ids >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv_row = np.argmax(cand, axis=1)
        sel = idx[has]
        pr = piv_row[has]
        rk = rank[has]
        # swap pivot row into position rank
        tmp = A[sel, pr].copy()
        A[sel, pr] = A[sel, rk]
        A[sel, rk] = tmp
        pivval = A[sel, rk, c]
        A[sel, rk] = (A[sel, rk] * F._inv[pivval][:, None]) % p
        f = A[sel, :, c].copy()
        f[np.arange(sel.size), rk] = 0
        A[sel] = (A[sel] - f[:, :, None] * A[sel, rk][:, None, :]) % p
        rank[has] += 1
        if np.all(rank >= rows):
            break
    return rank
