"""Objects of the bounded derived category of a hereditary quiver algebra.

An object is a finite direct sum of shifted indecomposables M[n]; M[n] lives
in complex degree -n.  Morphisms Y -> L are pairs (g, psi): module maps
g_s: Y_s -> L_s and Ext^1 classes psi_s in Ext^1(Y_s, L_{s+1}), where Y_s is
the shift-s component.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .config import DEFAULT
from .errors import BadParams, BudgetExceeded, CyclicPresetDirectUse
from .finfield import FiniteField, mat_solve, vector_block
from .quiverrep.catalogue import canon_label, label_dims, label_key, realize
from .quiverrep.decompose import aut_order_labels, decompose
from .quiverrep.quiver import QuiverPreset
from .quiverrep.rep import (Rep, column_basis, direct_sum, extension, hom_basis,
                            kernel_columns, morphism_kernel_cokernel, subquotient, zero_rep)


@dataclass(frozen=True)
class DObj:
    """Canonically sorted multiset of (shift, label) pairs."""

    preset: QuiverPreset
    summands: tuple = ()

    @classmethod
    def make(cls, Q, items, shift_bound=None):
        bound = DEFAULT.shift_bound if shift_bound is None else shift_bound
        canon = []
        for label, shift in items:
            shift = int(shift)
            if abs(shift) > bound:
                raise BadParams(f"shift {shift} exceeds bound {bound}")
            canon.append((shift, canon_label(Q, label)))
        canon.sort(key=lambda sl: (sl[0], label_key(Q, sl[1])))
        return cls(Q, tuple(canon))

    @classmethod
    def module(cls, Q, labels, shift=0):
        return cls.make(Q, [(lab, shift) for lab in labels])

    @classmethod
    def zero(cls, Q):
        return cls(Q, ())

    def is_zero(self):
        return not self.summands

    def shifts(self):
        return sorted({s for s, _ in self.summands})

    def component(self, n):
        return [lab for s, lab in self.summands if s == n]

    def shift(self, k):
        return DObj.make(self.preset, [(lab, s + k) for s, lab in self.summands])

    def __add__(self, other):
        if other.preset != self.preset:
            raise BadParams("direct sum across presets")
        return DObj.make(self.preset, [(lab, s) for s, lab in self.summands + other.summands])

    def realize_component(self, n, F) -> Rep:
        return direct_sum([realize(self.preset, lab, F) for lab in self.component(n)],
                          self.preset, F)

    def k0_class(self):
        vec = [0] * self.preset.n
        for s, lab in self.summands:
            sign = -1 if s % 2 else 1
            vec = [v + sign * d for v, d in zip(vec, label_dims(self.preset, lab))]
        return tuple(vec)

    def num_summands(self):
        return len(self.summands)

    def is_module(self):
        return all(s == 0 for s, _ in self.summands)

    def __str__(self):
        if not self.summands:
            return "0"
        counts = Counter(self.summands)
        parts = []
        for item in sorted(counts, key=lambda sl: (sl[0], label_key(self.preset, sl[1]))):
            s, lab = item
            m = counts[item]
            parts.append(f"{m}*{lab}@{s}" if m > 1 else f"{lab}@{s}")
        return " + ".join(parts)

    def __repr__(self):
        return f"DObj({self.preset.name}: {self})"


# -- dimensions and braces ---------------------------------------------------

def _pair_dims(Q, a, b, F):
    hs = hom_basis(realize(Q, a, F), realize(Q, b, F))
    return hs.dim, hs.ext_dim


def dhom_dim(X: DObj, Y: DObj, F: FiniteField) -> int:
    """dim Hom(X, Y) = sum of dim Hom over equal shifts and dim Ext^1 over shift gap one."""
    Q = X.preset
    total = 0
    for sx, a in X.summands:
        for sy, b in Y.summands:
            if sy == sx:
                total += _pair_dims(Q, a, b, F)[0]
            elif sy == sx + 1:
                total += _pair_dims(Q, a, b, F)[1]
    return total


BRACE_LOG: list = []


def brace_exponent(X: DObj, Y: DObj, F) -> int:
    gaps = {sy - sx for sx, _ in X.summands for sy, _ in Y.summands}
    shifts = sorted({i for g in gaps for i in (g, g - 1) if i > 0})
    return sum((-1) ** i * dhom_dim(X.shift(i), Y, F) for i in shifts)


def brace(X: DObj, Y: DObj, F) -> Fraction:
    """{X, Y} = prod_{i>0} |Hom(X[i], Y)|^((-1)^i)."""
    e = brace_exponent(X, Y, F)
    val = Fraction(F.q) ** e
    BRACE_LOG.append((F.q, val))
    return val


def l_stat(M: DObj, F) -> int:
    return dhom_dim(M, M.shift(1), F)


def d_stat(M: DObj) -> int:
    return M.num_summands()


def ld_order(M: DObj, F):
    return (l_stat(M, F), d_stat(M))


# -- Hom(Y, L) coordinates ----------------------------------------------------

@dataclass
class DHomSpace:
    """Coordinates on Hom(Y, L): blocks of module maps and of Ext^1 classes."""

    Y: DObj
    L: DObj
    F: FiniteField
    ymods: dict
    lmods: dict
    blocks: list   # (kind, s, HomSpace, start, size) with kind in {"hom", "ext"}
    dim: int

    def split(self, coeffs):
        """Turn a coefficient vector into (g, psi) dictionaries."""
        g, psi = {}, {}
        for kind, s, hs, start, size in self.blocks:
            c = coeffs[start:start + size]
            if kind == "hom":
                g[s] = hs.combine(c)
            else:
                psi[s] = hs.combine_ext(c)
        return g, psi


def dhom_space(Y: DObj, L: DObj, F) -> DHomSpace:
    Q = Y.preset
    shifts = sorted(set(Y.shifts()) | set(L.shifts()) | {s - 1 for s in L.shifts()})
    ymods = {s: Y.realize_component(s, F) for s in shifts}
    lmods = {s: L.realize_component(s, F) for s in shifts + [max(shifts, default=0) + 1]}
    blocks = []
    pos = 0
    for s in Y.shifts():
        if s in L.shifts():
            hs = hom_basis(ymods[s], lmods[s])
            if hs.dim:
                blocks.append(("hom", s, hs, pos, hs.dim))
                pos += hs.dim
    for s in Y.shifts():
        if s + 1 in L.shifts():
            hs = hom_basis(ymods[s], lmods[s + 1])
            if hs.ext_dim:
                blocks.append(("ext", s, hs, pos, hs.ext_dim))
                pos += hs.ext_dim
    return DHomSpace(Y, L, F, ymods, lmods, blocks, pos)


def _get(d, s, Q, F):
    return d[s] if s in d else zero_rep(Q, F)


def _zero_map(M, N):
    return tuple(np.zeros((N.dims[i], M.dims[i]), dtype=np.int64) for i in range(M.Q.n))


def _zero_cocycle(M, N):
    return tuple(np.zeros((N.dims[t], M.dims[s]), dtype=np.int64) for s, t in M.Q.arrows)


def cone_components(space: DHomSpace, g, psi):
    """Cohomology modules Z_s of the cone of (g, psi), built directly.

    0 -> coker g_s -> Z_s -> ker g_{s-1} -> 0 with class psi_{s-1} restricted
    to the kernel and pushed to the cokernel.
    """
    Q, F = space.Y.preset, space.F
    shifts = sorted(set(space.L.shifts()) | {s + 1 for s in space.Y.shifts()})
    out = {}
    for s in shifts:
        Ys = _get(space.ymods, s, Q, F)
        Ls = _get(space.lmods, s, Q, F)
        Yp = _get(space.ymods, s - 1, Q, F)
        Lp = _get(space.lmods, s - 1, Q, F)
        gs = g.get(s) or _zero_map(Ys, Ls)
        gp = g.get(s - 1) or _zero_map(Yp, Lp)
        kc = morphism_kernel_cokernel(gs, Ys, Ls)
        kp = morphism_kernel_cokernel(gp, Yp, Lp)
        ps = psi.get(s - 1)
        if ps is None:
            ps = _zero_cocycle(Yp, Ls)
        twisted = []
        for k, (a, b) in enumerate(Q.arrows):
            twisted.append(F.matmul(kc.coker_proj[b], F.matmul(ps[k], kp.ker_incl[a])))
        Z = extension(kc.coker, kp.ker, twisted)
        if not Z.is_zero():
            out[s] = Z
    return out


@dataclass
class ChainMapCoset:
    """A morphism Y -> L given by its coordinates in the fixed basis of Hom(Y, L).

    The representative chain map sends the standard projective resolution of Y
    to L (kept as a complex of modules with zero differential): on the
    degree-0 part of the resolution of Y_s it is g_s composed with the
    augmentation, and on the degree-1 part of Y_s it is the cocycle psi_s.
    """

    space: DHomSpace
    coords: tuple
    g: dict = field(default_factory=dict)
    psi: dict = field(default_factory=dict)

    @property
    def source(self):
        return self.space.Y

    @property
    def target(self):
        return self.space.L

    def with_homotopy(self, eta):
        """Same coset, representative psi_s + delta(eta_s) for eta_s: Y_s -> L_{s+1}."""
        psi = dict(self.psi)
        F = self.space.F
        for s, e in eta.items():
            Ys = self.space.ymods[s]
            Ls = self.space.lmods.get(s + 1)
            hs = hom_basis(Ys, Ls)
            d = hs.apply_delta(e)
            base = psi.get(s) or _zero_cocycle(Ys, Ls)
            psi[s] = tuple(F.add(x, y) for x, y in zip(base, d))
        return ChainMapCoset(self.space, self.coords, dict(self.g), psi)


def hom_reps(Y: DObj, L: DObj, F, budget=None):
    """One representative per element of Hom(Y, L); q^dim of them."""
    budget = DEFAULT.enum_budget if budget is None else budget
    space = dhom_space(Y, L, F)
    cost = F.q**space.dim
    if cost > budget:
        raise BudgetExceeded(cost, budget, "Hom enumeration")
    out = []
    for c in vector_block(F, space.dim):
        g, psi = space.split(c)
        out.append(ChainMapCoset(space, tuple(int(x) for x in c), g, psi))
    return out


def zero_map(Y, L, F):
    space = dhom_space(Y, L, F)
    g, psi = space.split(np.zeros(space.dim, dtype=np.int64))
    return ChainMapCoset(space, (0,) * space.dim, g, psi)


def identity_map(X: DObj, F):
    """The identity of X as a ChainMapCoset (found by solving in Hom(X, X))."""
    space = dhom_space(X, X, F)
    coeffs = np.zeros(space.dim, dtype=np.int64)
    for kind, s, hs, start, size in space.blocks:
        if kind != "hom":
            continue
        M = space.ymods[s]
        ident = np.concatenate([np.eye(d, dtype=np.int64).ravel() for d in M.dims])
        sol = mat_solve(F, hs.flat.T).solve(ident)
        coeffs[start:start + size] = sol
    g, psi = space.split(coeffs)
    return ChainMapCoset(space, tuple(int(x) for x in coeffs), g, psi)


def components_to_dobj(Q, comps, candidates=None):
    items = []
    for s, Z in comps.items():
        for lab in decompose(Z, candidates):
            items.append((lab, s))
    return DObj.make(Q, items)


def cone_direct(f: ChainMapCoset, candidates=None) -> DObj:
    comps = cone_components(f.space, f.g, f.psi)
    return components_to_dobj(f.space.Y.preset, comps, candidates)


# -- complexes of projectives ------------------------------------------------

@dataclass
class FreeModule:
    """A direct sum of indecomposable projectives P_v, one per generator."""

    rep: Rep
    gens: list                  # (vertex, tag) per generator
    index: dict                 # (generator position, path) -> (vertex, coordinate)


def projective_sum(Q, F, gens) -> FreeModule:
    dims = [0] * Q.n
    index = {}
    for g, (v, _) in enumerate(gens):
        for end, path in Q.paths_from(v):
            index[(g, path)] = (end, dims[end])
            dims[end] += 1
    mats = [np.zeros((dims[t], dims[s]), dtype=np.int64) for s, t in Q.arrows]
    for (g, path), (end, pos) in index.items():
        for k in Q.arrows_from(end):
            tgt = index[(g, path + (k,))]
            mats[k][tgt[1], pos] = 1
    return FreeModule(Rep(Q, F, dims, mats, check=False), list(gens), index)


def map_from_free(P: FreeModule, N: Rep, images):
    """The morphism P -> N sending generator g to images[g] in N_{v_g}."""
    Q, F = N.Q, N.F
    out = [np.zeros((N.dims[i], P.rep.dims[i]), dtype=np.int64) for i in range(Q.n)]
    for (g, path), (end, pos) in P.index.items():
        x = np.asarray(images[g], dtype=np.int64).reshape(-1, 1)
        out[end][:, pos] = N.act(path, x).ravel()
    return tuple(out)


@dataclass
class ProjComplex:
    """Bounded complex of projectives; terms[n] is a FreeModule, diff[n]: terms[n] -> terms[n+1]."""

    F: FiniteField
    terms: dict
    diff: dict

    def degrees(self):
        return sorted(self.terms)

    def term_rep(self, n, Q):
        return self.terms[n].rep if n in self.terms else zero_rep(Q, self.F)

    def check_d2(self, Q):
        F = self.F
        for n in self.degrees():
            if n in self.diff and n + 1 in self.diff:
                for a, b in zip(self.diff[n + 1], self.diff[n]):
                    if np.any(F.matmul(a, b)):
                        return False
        return True

    def cohomology(self, Q):
        out = {}
        for n in self.degrees():
            C = self.terms[n].rep
            dn = self.diff.get(n)
            dp = self.diff.get(n - 1)
            Z = [kernel_columns(self.F, dn[i], C.dims[i]) if dn is not None
                 else np.eye(C.dims[i], dtype=np.int64) for i in range(Q.n)]
            B = [column_basis(self.F, dp[i]) if dp is not None
                 else np.zeros((C.dims[i], 0), dtype=np.int64) for i in range(Q.n)]
            H = subquotient(C, Z, B)
            if not H.is_zero():
                out[n] = H
        return out


def _resolution_gens(Q, M: Rep, s):
    g0 = [(i, ("P0", s, i, b)) for i in range(Q.n) for b in range(M.dims[i])]
    g1 = [(t, ("P1", s, k, b)) for k, (a, t) in enumerate(Q.arrows) for b in range(M.dims[a])]
    return g0, g1


def to_complex(X: DObj, F, modules=None) -> ProjComplex:
    """Standard projective resolutions of the components, P_1 -> P_0 in degrees -s-1, -s."""
    Q = X.preset
    if not Q.acyclic:
        raise CyclicPresetDirectUse("complexes of projectives need an acyclic preset")
    modules = modules or {s: X.realize_component(s, F) for s in X.shifts()}
    gens = {}
    for s, M in modules.items():
        g0, g1 = _resolution_gens(Q, M, s)
        gens.setdefault(-s, []).extend(g0)
        gens.setdefault(-s - 1, []).extend(g1)
    terms = {n: projective_sum(Q, F, gl) for n, gl in gens.items() if gl}
    diff = {}
    for n, P in terms.items():
        if n + 1 not in terms:
            continue
        T = terms[n + 1]
        pos = {g[1]: j for j, g in enumerate(T.gens)}
        images = []
        for v, tag in P.gens:
            vec = np.zeros(T.rep.dims[v], dtype=np.int64)
            if tag[0] == "P1":
                _, s, k, b = tag
                M = modules[s]
                a, t = Q.arrows[k]
                end, c0 = T.index[(pos[("P0", s, a, b)], (k,))]
                vec[c0] = 1
                col = M.mats[k][:, b]
                for c in range(M.dims[t]):
                    if col[c]:
                        _, c1 = T.index[(pos[("P0", s, t, c)], ())]
                        vec[c1] = F.sub(vec[c1], col[c])
            images.append(vec)
        diff[n] = map_from_free(P, T.rep, images)
    return ProjComplex(F, terms, diff)


def _chain_map_components(f: ChainMapCoset, cx: ProjComplex):
    """Components f^n: P^n -> L^n = L_{-n} of the chain map representing f."""
    space, F = f.space, f.space.F
    Q = space.Y.preset
    out = {}
    for n, P in cx.terms.items():
        Ln = _get(space.lmods, -n, Q, F)
        images = []
        for v, tag in P.gens:
            if tag[0] == "P0":
                _, s, i, b = tag
                g = f.g.get(s)
                images.append(g[i][:, b] if g is not None and Ln.dims[i] else
                              np.zeros(Ln.dims[i], dtype=np.int64))
            else:
                _, s, k, b = tag
                psi = f.psi.get(s)
                t = Q.arrows[k][1]
                images.append(psi[k][:, b] if psi is not None and Ln.dims[t] else
                              np.zeros(Ln.dims[t], dtype=np.int64))
        out[n] = map_from_free(P, Ln, images)
    return out


def cone_complex(f: ChainMapCoset):
    """Cohomology modules of the mapping cone, computed from complexes: {shift: Rep}."""
    space, F = f.space, f.space.F
    Q = space.Y.preset
    cx = to_complex(space.Y, F, {s: space.ymods[s] for s in space.Y.shifts()})
    fmap = _chain_map_components(f, cx)
    degrees = sorted(set(n - 1 for n in cx.terms) | set(-s for s in space.L.shifts()))
    if not degrees:
        return {}
    lo, hi = degrees[0] - 1, degrees[-1] + 1

    def cone_term(n):
        P = cx.term_rep(n + 1, Q)
        L = _get(space.lmods, -n, Q, F)
        return P, L

    def cone_diff(n):
        P0, L0 = cone_term(n)
        P1, L1 = cone_term(n + 1)
        dP = cx.diff.get(n + 1)
        fn = fmap.get(n + 1)
        out = []
        for i in range(Q.n):
            blk = np.zeros((P1.dims[i] + L1.dims[i], P0.dims[i] + L0.dims[i]), dtype=np.int64)
            if dP is not None:
                blk[:P1.dims[i], :P0.dims[i]] = F.neg(dP[i])
            if fn is not None:
                blk[P1.dims[i]:, :P0.dims[i]] = fn[i]
            out.append(blk)
        return out

    comps = {}
    for n in range(lo, hi + 1):
        P, L = cone_term(n)
        C = direct_sum([P, L])
        dn = cone_diff(n)
        dp = cone_diff(n - 1)
        Z = [kernel_columns(F, dn[i], C.dims[i]) for i in range(Q.n)]
        B = [column_basis(F, dp[i]) for i in range(Q.n)]
        H = subquotient(C, Z, B)
        if not H.is_zero():
            comps[-n] = H
    return comps


def cone(f: ChainMapCoset, candidates=None) -> DObj:
    """Cone of f from the mapping-cone complex, read off as the sum of H^n[-n]."""
    Q = f.space.Y.preset
    if not Q.acyclic:
        raise CyclicPresetDirectUse("use cyclic_embed for cyclic presets")
    return components_to_dobj(Q, cone_complex(f), candidates)


# -- automorphisms -------------------------------------------------------------

def aut_order_derived(X: DObj, F, method="formula", budget=None) -> int:
    """|Aut X| = prod_n |Aut X_n| * q^(sum_n dim Ext^1(X_n, X_{n+1}))."""
    Q = X.preset
    if method == "brute":
        budget = DEFAULT.enum_budget if budget is None else budget
        space = dhom_space(X, X, F)
        if F.q**space.dim > budget:
            raise BudgetExceeded(F.q**space.dim, budget, "End enumeration")
        count = 0
        for c in vector_block(F, space.dim):
            g, psi = space.split(c)
            if not cone_components(space, g, psi):
                count += 1
        return count
    out = 1
    for s in X.shifts():
        out *= aut_order_labels(Q, X.component(s), F)
    e = 0
    for sx, a in X.summands:
        for sy, b in X.summands:
            if sy == sx + 1:
                e += _pair_dims(Q, a, b, F)[1]
    return out * F.q**e
