"""Quiver presets and dimension-vector combinatorics."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from ..errors import BadParams, ParseError, UnknownPreset


@dataclass(frozen=True)
class QuiverPreset:
    """A named quiver. Vertices are 0-based internally and printed 1-based.

    `arrows` holds (source, target) pairs; `arrow_names` the printable names.
    """

    name: str
    family: str
    n: int
    arrows: tuple
    arrow_names: tuple
    acyclic: bool
    nilpotency_required: bool

    @property
    def vertices(self):
        return tuple(range(1, self.n + 1))

    def __repr__(self):
        return f"QuiverPreset({self.name})"

    def __str__(self):
        return self.name

    def arrows_from(self, v):
        return [k for k, (s, _) in enumerate(self.arrows) if s == v]

    def paths_from(self, v):
        """All paths starting at v as (end_vertex, tuple_of_arrow_indices)."""
        if not self.acyclic:
            raise ValueError(f"{self.name} has infinitely many paths")
        return _paths_from(self, v)

    def cycle_arrows(self):
        """For cyclic presets, arrow indices in cycle order starting at vertex 0."""
        order = []
        v = 0
        for _ in range(self.n):
            k = self.arrows_from(v)[0]
            order.append(k)
            v = self.arrows[k][1]
        return order


@lru_cache(maxsize=None)
def _paths_from(Q, v):
    out = [(v, ())]
    frontier = [(v, ())]
    while frontier:
        nxt = []
        for w, p in frontier:
            for k in Q.arrows_from(w):
                item = (Q.arrows[k][1], p + (k,))
                out.append(item)
                nxt.append(item)
        frontier = nxt
    return tuple(out)


def _has_cycle(n, arrows):
    adj = {i: [t for s, t in arrows if s == i] for i in range(n)}
    state = [0] * n

    def visit(u):
        state[u] = 1
        for w in adj[u]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[u] = 2
        return False

    return any(state[i] == 0 and visit(i) for i in range(n))


def _parse_orientation(n, orient):
    arrows = []
    for chunk in orient.replace(" ", "").split(","):
        if not chunk:
            continue
        if "<" in chunk and ">" in chunk:
            raise BadParams(f"mixed direction in {chunk!r}")
        if "<" in chunk:
            items = chunk.split("<")[::-1]
        else:
            items = chunk.split(">")
        try:
            verts = [int(x) for x in items]
        except ValueError as exc:
            raise BadParams(f"bad orientation {orient!r}") from exc
        for s, t in zip(verts, verts[1:]):
            arrows.append((s - 1, t - 1))
    edges = sorted(tuple(sorted(a)) for a in arrows)
    if edges != [(i, i + 1) for i in range(n - 1)]:
        raise BadParams(f"orientation {orient!r} must orient each edge i-(i+1) of A{n} once")
    return sorted(arrows, key=lambda a: min(a))


def preset_make(name: str, **params) -> QuiverPreset:
    """Build a preset from its family name and parameters.

    A: n (1..6), orient like "1>2,3>2" (default linear 1>2>...>n).
    C: m (1..3). K: no parameters. A~21: no parameters.
    """
    if name == "A":
        n = params.get("n")
        if not isinstance(n, int) or not 1 <= n <= 6:
            raise BadParams("A_n needs 1 <= n <= 6")
        orient = params.get("orient") or ",".join(f"{i}>{i + 1}" for i in range(1, n))
        arrows = _parse_orientation(n, orient) if n > 1 else []
        canon = ",".join(f"{s + 1}>{t + 1}" for s, t in arrows)
        full = f"A{n}:{canon}" if n > 1 else "A1"
        names = tuple(f"{s + 1}>{t + 1}" for s, t in arrows)
        return QuiverPreset(full, "A", n, tuple(arrows), names, True, False)
    if name == "C":
        m = params.get("m")
        if not isinstance(m, int) or not 1 <= m <= 3:
            raise BadParams("C_m needs 1 <= m <= 3")
        arrows = tuple((i, (i + 1) % m) for i in range(m))
        names = tuple(f"{s + 1}>{t + 1}" for s, t in arrows)
        return QuiverPreset(f"C{m}", "C", m, arrows, names, False, True)
    if name == "K":
        return QuiverPreset("K", "K", 2, ((0, 1), (0, 1)), ("a", "b"), True, False)
    if name in ("A~21", "At21"):
        arrows = ((0, 1), (1, 2), (0, 2))
        return QuiverPreset("A~21", "A~21", 3, arrows, ("alpha", "beta", "gamma"), True, False)
    raise UnknownPreset(f"unknown preset {name!r}")


_SPEC_A = re.compile(r"^A(\d+)(?::(.*))?$")
_SPEC_C = re.compile(r"^C(\d+)$")


@lru_cache(maxsize=None)
def parse_quiver(spec: str) -> QuiverPreset:
    """Parse "A<n>:<orientation>", "C<m>", "K" or "A~21"."""
    s = spec.replace(" ", "")
    m = _SPEC_A.match(s)
    if m:
        return preset_make("A", n=int(m.group(1)), orient=m.group(2))
    m = _SPEC_C.match(s)
    if m:
        return preset_make("C", m=int(m.group(1)))
    if s == "K":
        return preset_make("K")
    if s in ("A~21", "At21"):
        return preset_make("A~21")
    raise ParseError(f"bad quiver spec {spec!r}")


def euler_form(Q: QuiverPreset, d, e) -> int:
    """<d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j."""
    d = tuple(d)
    e = tuple(e)
    if len(d) != Q.n or len(e) != Q.n:
        raise ValueError("dimension vectors must match the vertex count")
    return sum(x * y for x, y in zip(d, e)) - sum(d[s] * e[t] for s, t in Q.arrows)


def dim_leq(d, e):
    return all(x <= y for x, y in zip(d, e))
