from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hallq.derived import DObj
from hallq.errors import NoFit, SpuriousPole
from hallq.genericfit import RatFunc, SamplePoint, fit_and_validate, fit_rational, sweep, validate
from hallq.objspec import parse_objspec
from hallq.quiverrep import parse_quiver

A2 = parse_quiver("A2:1>2")
A3 = parse_quiver("A3:1>2,2>3")
C1 = parse_quiver("C1")

QS = (2, 3, 5, 7, 11)


def pts(pairs):
    return [SamplePoint(q, Fraction(v)) for q, v in pairs]


def test_ratfunc_is_canonical():
    f = RatFunc.make((-2, 2), (-2, 0, 2))          # (2T - 2) / (2T^2 - 2) = 1/(T + 1)
    assert f == RatFunc((1,), (1, 1))
    assert RatFunc.make((1,), (-1,)) == RatFunc((-1,), (1,))
    assert RatFunc.make((Fraction(1, 2),), (Fraction(1, 3),)) == RatFunc((3,), (2,))
    assert RatFunc.make((0, 0), (5, 7)) == RatFunc((0,), (1,))
    assert str(RatFunc((1,), (-1, 1))) == "(1)/(T - 1)"
    assert str(RatFunc((1, 1), (1,))) == "(T + 1)/(1)"
    assert RatFunc.constant(Fraction(3, 4)) == RatFunc((3,), (4,))
    with pytest.raises(ZeroDivisionError):
        RatFunc.make((1,), (0,))
    with pytest.raises(ZeroDivisionError):
        RatFunc((1,), (-1, 1))(1)


def test_fit_examples():
    f = fit_rational(pts([(2, 1), (3, Fraction(1, 2)), (5, Fraction(1, 4)), (7, Fraction(1, 6)),
                          (11, Fraction(1, 10))]), degbound=2)
    assert f == RatFunc((1,), (-1, 1))
    assert fit_rational(pts([(q, 1) for q in QS])) == RatFunc((1,), (1,))
    f = fit_rational(pts([(q, q + 1) for q in QS]))
    assert f == RatFunc((1, 1), (1,)) and f.is_monic_polynomial


def test_validate_examples():
    assert validate(RatFunc((1,), (-1, 1)), pts([(13, Fraction(1, 12))])).passed
    assert validate(RatFunc((1,), (1,)), pts([(13, 1)])).passed
    assert validate(RatFunc((1, 1), (1,)), pts([(13, 14)])).passed
    rep = validate(RatFunc((1, 1), (1,)), pts([(13, 15)]))
    assert not rep.passed and rep.failures[0]["residual"] == 1


def test_fit_errors():
    # five generic values need total degree 4, more than degbound 1 allows
    with pytest.raises(NoFit):
        fit_rational(pts([(2, 1), (3, 7), (5, -2), (7, 11), (11, 3)]), degbound=1)
    with pytest.raises(NoFit):
        fit_rational([], degbound=2)
    with pytest.raises(ValueError):
        fit_rational(pts([(2, 1), (2, 1)]))
    assert issubclass(SpuriousPole, NoFit)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=3),
       st.lists(st.integers(-4, 4), min_size=1, max_size=2))
def test_fit_recovers_low_degree_functions(num, den):
    if not any(den) or any(sum(c * q**k for k, c in enumerate(den)) == 0 for q in (2, 3, 5, 7, 11, 13)):
        return
    f = RatFunc.make(num, den)
    points = [SamplePoint(q, f(q)) for q in QS]
    g = fit_rational(points, degbound=3)
    assert g == f
    assert fit_rational(points, degbound=4) == g          # degree stability
    assert validate(g, [SamplePoint(13, f(13))]).passed


def test_sweep_examples():
    X, Y = parse_objspec(A2, "I[1,1]@1"), parse_objspec(A2, "I[1,1]@0")
    s = sweep(X, Y, DObj.zero(A2), (2, 3, 5))
    assert [(p.q, p.value) for p in s.points] == [(2, 1), (3, Fraction(1, 2)), (5, Fraction(1, 4))]
    X = parse_objspec(A2, "I[1,2]@0 + I[2,2]@1")
    assert all(p.value == 1 for p in sweep(X, DObj.zero(A2), X, (2, 4, 7)).points)
    S1, S2 = parse_objspec(A2, "I[1,1]@0"), parse_objspec(A2, "I[2,2]@0")
    s = sweep(S1, S2, S1 + S2, (2, 3))
    assert [(p.q, p.value) for p in s.points] == [(2, 1), (3, 1)]


def test_sweep_records_budget_skips():
    X = parse_objspec(A2, "3*I[1,1]@0")
    L = parse_objspec(A2, "3*I[1,1]@0 + I[1,2]@0")
    s = sweep(X, X, L, (2, 3), budget=1000)      # 2^9 fits, 3^9 does not
    assert [q for q, _ in s.skipped] == [3] and [p.q for p in s.points] == [2]


def test_fit_and_validate_round_trip():
    X, Y = parse_objspec(A2, "I[1,1]@1"), parse_objspec(A2, "I[1,1]@0")
    f, fit, hold, rep = fit_and_validate(X, Y, DObj.zero(A2))
    assert str(f) == "(1)/(T - 1)" and rep.passed and len(fit.points) == 5
    with pytest.raises(ValueError):
        fit_and_validate(X, Y, DObj.zero(A2), fit_qs=(2, 3), holdout_qs=(3,))


def test_jordan_count_is_q_plus_one():
    one = parse_objspec(C1, "C(1,1)@0")
    f, _, _, rep = fit_and_validate(one, one, parse_objspec(C1, "2*C(1,1)@0"))
    assert f == RatFunc((1, 1), (1,)) and rep.passed


@pytest.mark.parametrize("Q,X,Y,L", [
    (A2, "I[1,1]@0", "I[1,1]@0", "2*I[1,1]@0"),
    (A2, "I[1,1]@0", "I[2,2]@0", "I[1,2]@0"),
    (A3, "I[1,2]@0", "I[3,3]@0", "I[1,3]@0"),
    (A3, "I[2,2]@0", "I[2,2]@0", "2*I[2,2]@0"),
    (A3, "I[1,1]@0", "I[2,3]@0", "I[1,3]@0"),
    (A3, "I[1,1]@0 + I[3,3]@0", "I[2,2]@0", "I[1,2]@0 + I[3,3]@0"),
    (A3, "I[1,3]@0", "I[2,2]@0", "I[1,3]@0 + I[2,2]@0"),
], ids=str)
def test_dynkin_module_triples_fit_integer_polynomials(Q, X, Y, L):
    f, _, _, rep = fit_and_validate(parse_objspec(Q, X), parse_objspec(Q, Y), parse_objspec(Q, L))
    assert rep.passed and f.is_polynomial and f.num_degree >= 0
    assert all(isinstance(c, int) for c in f.num)
