"""Rational functions in T fitted exactly to Hall-number samples across fields."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .config import DEFAULT
from .errors import BudgetExceeded, NoFit, SpuriousPole
from .finfield import FiniteField, field_of_order
from .hallengine.checks import CheckReport
from .hallengine.hall import hall_value

T = sympy.Symbol("T")


def _poly_str(coeffs) -> str:
    expr = sum(sympy.Integer(c) * T**k for k, c in enumerate(coeffs))
    return str(sympy.expand(expr))


def _trim(coeffs):
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(int(x) for x in c) or (0,)


@dataclass(frozen=True)
class RatFunc:
    """num/den with integer coefficients, lowest degree first, in canonical form."""
    num: tuple
    den: tuple

    @classmethod
    def make(cls, num, den) -> "RatFunc":
        n = sympy.Poly([Fraction(x) for x in reversed(list(num))] or [0], T, domain="QQ")
        d = sympy.Poly([Fraction(x) for x in reversed(list(den))] or [0], T, domain="QQ")
        if d.is_zero:
            raise ZeroDivisionError("zero denominator")
        if n.is_zero:
            return cls((0,), (1,))
        g = sympy.gcd(n, d)
        nc = [Fraction(str(x)) for x in reversed(sympy.div(n, g)[0].all_coeffs())]
        dc = [Fraction(str(x)) for x in reversed(sympy.div(d, g)[0].all_coeffs())]
        scale = math.lcm(*(c.denominator for c in nc + dc))
        nc, dc = [int(c * scale) for c in nc], [int(c * scale) for c in dc]
        content = math.gcd(*(nc + dc))
        sign = -1 if dc[-1] < 0 else 1
        return cls(_trim(sign * x // content for x in nc), _trim(sign * x // content for x in dc))

    @classmethod
    def constant(cls, value) -> "RatFunc":
        v = Fraction(value)
        return cls.make((v.numerator,), (v.denominator,))

    def __call__(self, q) -> Fraction:
        num = sum(Fraction(c) * q**k for k, c in enumerate(self.num))
        den = sum(Fraction(c) * q**k for k, c in enumerate(self.den))
        if den == 0:
            raise ZeroDivisionError(f"pole at T = {q}")
        return num / den

    @property
    def num_degree(self):
        return len(self.num) - 1 if any(self.num) else -1

    @property
    def den_degree(self):
        return len(self.den) - 1

    @property
    def is_polynomial(self):
        return self.den == (1,)

    @property
    def is_monic_polynomial(self):
        return self.is_polynomial and self.num[-1] == 1

    def __str__(self):
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"


@dataclass(frozen=True)
class SamplePoint:
    q: int
    value: Fraction


@dataclass
class Sweep:
    points: list
    skipped: list = field(default_factory=list)   # (q, reason)


def sweep(X, Y, L, fields, budget=None) -> Sweep:
    """One exact Hall-number sample per field; over-budget fields are recorded."""
    budget = DEFAULT.enum_budget if budget is None else budget
    out = Sweep([])
    for F in fields:
        if not isinstance(F, FiniteField):
            F = field_of_order(F)
        try:
            out.points.append(SamplePoint(F.q, Fraction(hall_value(X, Y, L, F, budget))))
        except BudgetExceeded as exc:
            out.skipped.append((F.q, str(exc)))
    return out


def _solve(points, dn, dd):
    """Nullspace of value*den(q) - num(q) = 0 with deg num <= dn, deg den <= dd."""
    rows = []
    for p in points:
        v = sympy.Rational(p.value.numerator, p.value.denominator)
        rows.append([-sympy.Integer(p.q) ** k for k in range(dn + 1)]
                    + [v * sympy.Integer(p.q) ** k for k in range(dd + 1)])
    return sympy.Matrix(rows).nullspace()


def fit_rational(points, degbound: int = 8) -> RatFunc:
    """Lowest total degree num/den through all points, each degree at most degbound.

    Two distinct fits of total degree below the number of points would agree
    at every sample and hence everywhere, so the result is unique.
    """
    points = list(points)
    if not points:
        raise NoFit("no sample points", {})
    qs = [p.q for p in points]
    if len(set(qs)) != len(qs):
        raise ValueError("sample fields must be distinct")
    pole_witness = None
    for total in range(0, min(2 * degbound, len(points) - 1) + 1):
        for dd in range(0, min(total, degbound) + 1):
            dn = total - dd
            if dn > degbound:
                continue
            for vec in _solve(points, dn, dd):
                num = [Fraction(str(x)) for x in vec[: dn + 1]]
                den = [Fraction(str(x)) for x in vec[dn + 1:]]
                if not any(den):
                    continue
                f = RatFunc.make(num, den)
                try:
                    if all(f(p.q) == p.value for p in points):
                        return f
                except ZeroDivisionError:
                    pole_witness = {"candidate": str(f), "degrees": (dn, dd)}
    if pole_witness is not None:
        raise SpuriousPole("every interpolant of minimal degree has a pole at a sample field",
                           pole_witness)
    raise NoFit(f"no rational function with degrees <= {degbound} fits {len(points)} samples",
                {"points": [(p.q, str(p.value)) for p in points]})


def validate(f: RatFunc, holdout) -> CheckReport:
    rep = CheckReport("validate")
    for p in holdout:
        try:
            got = f(p.q)
        except ZeroDivisionError:
            got = None
        ok = got == p.value
        residual = None if got is None else p.value - got
        rep.record(ok, f"q={p.q} value={p.value} fitted={got} residual={residual}",
                   {"q": p.q, "value": p.value, "fitted": got, "residual": residual})
    return rep


def fit_and_validate(X, Y, L, fit_qs=(2, 3, 5, 7, 11), holdout_qs=(13,), degbound=8, budget=None):
    """(RatFunc, fit sweep, holdout sweep, report) for one triple."""
    if set(fit_qs) & set(holdout_qs):
        raise ValueError("holdout fields must be disjoint from the fit fields")
    fit = sweep(X, Y, L, fit_qs, budget)
    f = fit_rational(fit.points, degbound)
    hold = sweep(X, Y, L, holdout_qs, budget)
    return f, fit, hold, validate(f, hold.points)
