"""Nilpotent cyclic-quiver categories realized as tubes of tame quivers.

C1 goes to the Kronecker tube at 0 via C(1,l) -> R0(l).  C2 goes to the
rank-2 tube of A~21 via C(1,l) -> T2a(l) and C(2,l) -> T2b(l).  Both tubes
are extension-closed exact abelian subcategories, so Hom, Ext^1 and cones
agree with the cyclic computation.
"""
from __future__ import annotations

import re

from ..derived import DObj
from ..errors import UnsupportedRank
from ..quiverrep.catalogue import label_dims, labels_upto, parse_label
from ..quiverrep.quiver import QuiverPreset, parse_quiver

_RE_R0 = re.compile(r"^R0\((\d+)\)$")
_RE_T2 = re.compile(r"^T2([ab])\((\d+)\)$")


def embed_target(Q: QuiverPreset) -> QuiverPreset:
    if Q.family != "C":
        raise ValueError(f"{Q.name} is not cyclic")
    if Q.n == 1:
        return parse_quiver("K")
    if Q.n == 2:
        return parse_quiver("A~21")
    raise UnsupportedRank(f"no tube embedding implemented for C{Q.n}")


def cyclic_embed(Q: QuiverPreset, label: str):
    """(target preset, target label) for a label of a cyclic preset."""
    T = embed_target(Q)
    _, (_, t, l) = parse_label(Q, label)
    if Q.n == 1:
        return T, f"R0({l})"
    return T, (f"T2a({l})" if t == 1 else f"T2b({l})")


def cyclic_unembed(Q: QuiverPreset, label: str) -> str:
    if Q.n == 1:
        m = _RE_R0.match(label)
        if m:
            return f"C(1,{int(m.group(1))})"
    elif Q.n == 2:
        m = _RE_T2.match(label)
        if m:
            return f"C({1 if m.group(1) == 'a' else 2},{int(m.group(2))})"
    raise ValueError(f"{label} is outside the embedded tube")


def in_family(Q: QuiverPreset, label: str) -> bool:
    if Q.n == 1:
        return bool(_RE_R0.match(label))
    return bool(_RE_T2.match(label))


def embed_dobj(X: DObj) -> DObj:
    Q = X.preset
    T = embed_target(Q)
    return DObj.make(T, [(cyclic_embed(Q, lab)[1], s) for s, lab in X.summands])


def unembed_dobj(Q: QuiverPreset, X: DObj) -> DObj:
    return DObj.make(Q, [(cyclic_unembed(Q, lab), s) for s, lab in X.summands])


def family_candidates(Q: QuiverPreset, dims):
    """Labels of the embedded tube whose dimension vector fits inside dims."""
    T = embed_target(Q)
    return tuple(lab for lab in labels_upto(T, tuple(dims)) if in_family(Q, lab))
