"""Explicit quiver representations and the linear algebra of Hom and Ext^1.

A morphism M -> N is a tuple of matrices, one per vertex, with shape
N.dims[i] x M.dims[i].  Cocycles (Ext^1 representatives) are tuples of
matrices indexed by arrows, of shape N.dims[t] x M.dims[s].
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import BudgetExceeded, FieldMismatch, NotNilpotent, PresetMismatch
from ..finfield import FiniteField, batch_rank, gl_order, vector_block
from ..config import DEFAULT
from .quiver import QuiverPreset


class Rep:
    """Immutable representation of a quiver over a finite field."""

    __slots__ = ("Q", "F", "dims", "mats", "_key")

    def __init__(self, Q: QuiverPreset, F: FiniteField, dims, mats, check=True):
        self.Q = Q
        self.F = F
        self.dims = tuple(int(d) for d in dims)
        mats = tuple(np.asarray(m, dtype=np.int64).reshape(self.dims[t], self.dims[s])
                     for m, (s, t) in zip(mats, Q.arrows))
        for m in mats:
            m.setflags(write=False)
        self.mats = mats
        self._key = None
        if check:
            if len(self.dims) != Q.n or len(mats) != len(Q.arrows):
                raise ValueError("dims/arrows do not match the quiver")
            if any(np.any((m < 0) | (m >= F.q)) for m in mats):
                raise ValueError("matrix entries are not field elements")
            if Q.nilpotency_required and not self._cycle_nilpotent():
                raise NotNilpotent("cyclic representation must be nilpotent")

    def _cycle_nilpotent(self):
        F = self.F
        d0 = self.dims[0]
        if d0 == 0:
            return True
        comp = np.eye(d0, dtype=np.int64)
        for k in self.Q.cycle_arrows():
            comp = F.matmul(self.mats[k], comp)
        power = comp
        for _ in range(d0):
            power = F.matmul(power, comp)
        return not np.any(power)

    @property
    def key(self):
        if self._key is None:
            body = b"|".join(m.tobytes() for m in self.mats)
            self._key = (self.Q.name, self.F.p, self.F.r, self.dims, body)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Rep) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Rep({self.Q.name}, {self.F}, dims={self.dims})"

    @property
    def total_dim(self):
        return sum(self.dims)

    def is_zero(self):
        return self.total_dim == 0

    def act(self, path, x):
        """Apply a path (tuple of arrow indices, first arrow first) to x."""
        for k in path:
            x = self.F.matmul(self.mats[k], x)
        return x


def zero_rep(Q, F):
    return Rep(Q, F, (0,) * Q.n, [np.zeros((0, 0), dtype=np.int64)] * len(Q.arrows), check=False)


def _same_category(M, N):
    if M.Q != N.Q:
        raise PresetMismatch(f"{M.Q.name} vs {N.Q.name}")
    if M.F != N.F:
        raise FieldMismatch(f"{M.F} vs {N.F}")


def direct_sum(reps, Q=None, F=None):
    reps = list(reps)
    if not reps:
        return zero_rep(Q, F)
    Q, F = reps[0].Q, reps[0].F
    for R in reps[1:]:
        _same_category(reps[0], R)
    if len(reps) == 1:
        return reps[0]
    dims = [sum(R.dims[i] for R in reps) for i in range(Q.n)]
    mats = []
    for k, (s, t) in enumerate(Q.arrows):
        m = np.zeros((dims[t], dims[s]), dtype=np.int64)
        r0 = c0 = 0
        for R in reps:
            m[r0:r0 + R.dims[t], c0:c0 + R.dims[s]] = R.mats[k]
            r0 += R.dims[t]
            c0 += R.dims[s]
        mats.append(m)
    return Rep(Q, F, dims, mats, check=False)


def extension(N: Rep, M: Rep, psi) -> Rep:
    """Middle term of the extension 0 -> N -> E -> M -> 0 with cocycle psi."""
    Q, F = N.Q, N.F
    dims = [N.dims[i] + M.dims[i] for i in range(Q.n)]
    mats = []
    for k, (s, t) in enumerate(Q.arrows):
        top = np.hstack([N.mats[k], np.asarray(psi[k], dtype=np.int64).reshape(N.dims[t], M.dims[s])])
        bot = np.hstack([np.zeros((M.dims[t], N.dims[s]), dtype=np.int64), M.mats[k]])
        mats.append(np.vstack([top, bot]))
    return Rep(Q, F, dims, mats, check=False)


# -- Hom and Ext^1 -----------------------------------------------------------

@dataclass
class HomSpace:
    """Hom_A(M, N) and a complement basis for Ext^1_A(M, N)."""

    M: Rep
    N: Rep
    flat: np.ndarray          # rows: Hom basis in the flattened vertex coordinates
    offsets: list             # slice start of each vertex block in a flat vector
    ext_flat: np.ndarray      # rows: Ext^1 complement basis in flattened arrow coordinates
    ext_offsets: list
    delta: np.ndarray = field(repr=False, default=None)

    @property
    def dim(self):
        return self.flat.shape[0]

    @property
    def ext_dim(self):
        return self.ext_flat.shape[0]

    @property
    def basis(self):
        return [self.unflatten(v) for v in self.flat]

    @property
    def ext_basis(self):
        return [self.unflatten_cocycle(v) for v in self.ext_flat]

    def unflatten(self, v):
        M, N = self.M, self.N
        out = []
        for i in range(M.Q.n):
            o = self.offsets[i]
            out.append(np.asarray(v[o:o + N.dims[i] * M.dims[i]]).reshape(N.dims[i], M.dims[i]))
        return tuple(out)

    def unflatten_cocycle(self, v):
        M, N = self.M, self.N
        out = []
        for k, (s, t) in enumerate(M.Q.arrows):
            o = self.ext_offsets[k]
            out.append(np.asarray(v[o:o + N.dims[t] * M.dims[s]]).reshape(N.dims[t], M.dims[s]))
        return tuple(out)

    def combine(self, coeffs):
        """The morphism sum_k coeffs[k] * basis[k]."""
        F = self.M.F
        c = np.asarray(coeffs, dtype=np.int64).reshape(1, -1)
        return self.unflatten(F.matmul(c, self.flat).ravel())

    def combine_ext(self, coeffs):
        F = self.M.F
        c = np.asarray(coeffs, dtype=np.int64).reshape(1, -1)
        return self.unflatten_cocycle(F.matmul(c, self.ext_flat).ravel())

    def apply_delta(self, f):
        """delta(f)_a = N_a f_s - f_t M_a as a cocycle."""
        F = self.M.F
        vec = np.concatenate([np.asarray(x).ravel() for x in f]) if f else np.zeros(0, np.int64)
        out = F.matmul(self.delta, vec.reshape(-1, 1)).ravel() if self.delta.size else \
            np.zeros(self.delta.shape[0], dtype=np.int64)
        return self.unflatten_cocycle(out)


def delta_matrix(M: Rep, N: Rep):
    """Matrix of delta in row-major vec coordinates, plus block offsets."""
    Q, F = M.Q, M.F
    offsets = []
    o = 0
    for i in range(Q.n):
        offsets.append(o)
        o += N.dims[i] * M.dims[i]
    ncols = o
    ext_offsets = []
    o = 0
    for s, t in Q.arrows:
        ext_offsets.append(o)
        o += N.dims[t] * M.dims[s]
    nrows = o
    plus = np.zeros((nrows, ncols), dtype=np.int64)
    minus = np.zeros((nrows, ncols), dtype=np.int64)
    for k, (s, t) in enumerate(Q.arrows):
        r0 = ext_offsets[k]
        rows = N.dims[t] * M.dims[s]
        if rows == 0:
            continue
        if N.dims[s]:
            blk = np.kron(N.mats[k], np.eye(M.dims[s], dtype=np.int64))
            plus[r0:r0 + rows, offsets[s]:offsets[s] + blk.shape[1]] += blk
        if M.dims[t]:
            blk = np.kron(np.eye(N.dims[t], dtype=np.int64), M.mats[k].T)
            minus[r0:r0 + rows, offsets[t]:offsets[t] + blk.shape[1]] += blk
    # a loop puts both blocks in one place, so combine with field subtraction
    return F.sub(plus, minus), offsets, ext_offsets


_HOM_CACHE: dict = {}
_HOM_CACHE_LIMIT = 200000


def hom_basis(M: Rep, N: Rep) -> HomSpace:
    _same_category(M, N)
    key = (M.key, N.key)
    hit = _HOM_CACHE.get(key)
    if hit is not None:
        return hit
    F = M.F
    delta, offsets, ext_offsets = delta_matrix(M, N)
    nrows, ncols = delta.shape
    if ncols == 0:
        flat = np.zeros((0, 0), dtype=np.int64)
        ext_flat = np.eye(nrows, dtype=np.int64)
    elif nrows == 0:
        flat = np.eye(ncols, dtype=np.int64)
        ext_flat = np.zeros((0, 0), dtype=np.int64)
    else:
        flat = F.nullspace(delta)
        _, piv = F.rref(delta.T)
        free = [j for j in range(nrows) if j not in set(piv)]
        ext_flat = np.zeros((len(free), nrows), dtype=np.int64)
        for r, j in enumerate(free):
            ext_flat[r, j] = 1
    if flat.shape[1] != ncols:
        flat = flat.reshape(flat.shape[0], ncols)
    if ext_flat.shape[1] != nrows:
        ext_flat = ext_flat.reshape(ext_flat.shape[0], nrows)
    hs = HomSpace(M, N, flat, offsets, ext_flat, ext_offsets, delta)
    if len(_HOM_CACHE) > _HOM_CACHE_LIMIT:
        _HOM_CACHE.clear()
    _HOM_CACHE[key] = hs
    return hs


def hom_dim(M, N):
    return hom_basis(M, N).dim


def ext_dim(M, N):
    return hom_basis(M, N).ext_dim


def compose(F, g, f):
    """g o f for vertexwise morphism tuples."""
    return tuple(F.matmul(a, b) for a, b in zip(g, f))


def identity_morphism(M):
    return tuple(np.eye(d, dtype=np.int64) for d in M.dims)


def is_morphism(f, M, N):
    F = M.F
    for k, (s, t) in enumerate(M.Q.arrows):
        lhs = F.matmul(N.mats[k], f[s])
        rhs = F.matmul(f[t], M.mats[k])
        if lhs.shape != rhs.shape or np.any(lhs != rhs):
            return False
    return True


def is_iso_morphism(f, M, N):
    return M.dims == N.dims and all(M.F.is_invertible(x) for x in f if x.size)


# -- subspaces, kernels, cokernels ------------------------------------------

def as_columns(x, n):
    """Coerce x to an n x k matrix, tolerating empty inputs."""
    x = np.asarray(x, dtype=np.int64)
    if x.size == 0:
        k = x.shape[1] if x.ndim == 2 and x.shape[0] == n else 0
        return np.zeros((n, k), dtype=np.int64)
    return x.reshape(n, -1)


def column_basis(F, A):
    """Columns forming a basis of the column space of A (in RREF-of-transpose form)."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.size == 0:
        return np.zeros((n, 0), dtype=np.int64)
    R, piv = F.rref(A.T)
    return R[: len(piv)].T.copy()


def kernel_columns(F, A, ncols):
    if ncols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    A = np.asarray(A, dtype=np.int64).reshape(-1, ncols)
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    ns = F.nullspace(A)
    return ns.reshape(-1, ncols).T.copy()


def split_basis(F, S, n):
    """Complement C of span(S) in F^n and P with P @ [S | C] = I."""
    S = as_columns(S, n)
    k = S.shape[1]
    if k == 0:
        return np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64)
    _, piv = F.rref(S.T)
    free = [j for j in range(n) if j not in set(piv)]
    C = np.zeros((n, len(free)), dtype=np.int64)
    for c, j in enumerate(free):
        C[j, c] = 1
    P = F.inverse(np.hstack([S, C])) if n else np.zeros((0, 0), dtype=np.int64)
    return C, P


def subrep(M: Rep, S):
    """Subrepresentation spanned by the columns of S[i] at each vertex."""
    F, Q = M.F, M.Q
    S = [as_columns(x, M.dims[i]) for i, x in enumerate(S)]
    left = []
    for i in range(Q.n):
        _, P = split_basis(F, S[i], M.dims[i])
        left.append(P[: S[i].shape[1]])
    mats = []
    for k, (s, t) in enumerate(Q.arrows):
        mats.append(F.matmul(left[t], F.matmul(M.mats[k], S[s])))
    return Rep(Q, F, [x.shape[1] for x in S], mats, check=False), tuple(S)


def quotient(M: Rep, S):
    """Quotient M / span(S) with its projection morphism."""
    F, Q = M.F, M.Q
    S = [as_columns(x, M.dims[i]) for i, x in enumerate(S)]
    comps, projs = [], []
    for i in range(Q.n):
        C, P = split_basis(F, S[i], M.dims[i])
        comps.append(C)
        projs.append(P[S[i].shape[1]:])
    mats = []
    for k, (s, t) in enumerate(Q.arrows):
        mats.append(F.matmul(projs[t], F.matmul(M.mats[k], comps[s])))
    return Rep(Q, F, [c.shape[1] for c in comps], mats, check=False), tuple(projs)


@dataclass
class KerCoker:
    ker: Rep
    ker_incl: tuple
    coker: Rep
    coker_proj: tuple
    im: Rep
    im_incl: tuple


def morphism_kernel_cokernel(f, M: Rep, N: Rep) -> KerCoker:
    F = M.F
    K = [kernel_columns(F, f[i], M.dims[i]) for i in range(M.Q.n)]
    I = [column_basis(F, np.asarray(f[i]).reshape(N.dims[i], M.dims[i])) for i in range(M.Q.n)]
    ker, kin = subrep(M, K)
    im, iin = subrep(N, I)
    cok, cpr = quotient(N, I)
    return KerCoker(ker, kin, cok, cpr, im, iin)


def subquotient(M: Rep, Z, B):
    """span(Z) / span(B) for nested arrow-stable subspaces B <= Z of M."""
    F = M.F
    sub, Zb = subrep(M, Z)
    coords = []
    for i in range(M.Q.n):
        Bi = as_columns(B[i], M.dims[i])
        _, P = split_basis(F, Zb[i], M.dims[i])
        coords.append(F.matmul(P[: Zb[i].shape[1]], Bi))
    return quotient(sub, coords)[0]


# -- automorphisms, brute force ---------------------------------------------

def aut_order_brute(M: Rep, budget=None) -> int:
    """Count invertible endomorphisms by enumerating End(M)."""
    F = M.F
    budget = DEFAULT.enum_budget if budget is None else budget
    hs = hom_basis(M, M)
    d = hs.dim
    cost = F.q**d
    if cost > budget:
        raise BudgetExceeded(cost, budget, "End enumeration")
    coeffs = vector_block(F, d)
    total = np.zeros(coeffs.shape[0], dtype=bool) | True
    for i in range(M.Q.n):
        n = M.dims[i]
        if n == 0:
            continue
        o = hs.offsets[i]
        block = hs.flat[:, o:o + n * n]
        mats = F.matmul(coeffs, block).reshape(-1, n, n)
        total &= batch_rank(F, mats) == n
    return int(total.sum())


def gl(n, q):
    return gl_order(n, q)
