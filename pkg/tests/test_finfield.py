import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hallq.errors import BudgetExceeded, NonPrime, TooLarge
from hallq.finfield import (batch_rank, enumerate_vectors, field_make, field_of_order, gl_order,
                            is_irreducible, least_irreducible, mat_solve, projective_points)

ORDERS = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustively(q):
    F = field_of_order(q)
    xs = np.arange(q)
    a, b = np.meshgrid(xs, xs, indexing="ij")
    add, mul = F.add(a, b), F.mul(a, b)
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    assert np.array_equal(add[0], xs) and np.array_equal(mul[1], xs)
    for x in range(q):
        assert F.add(x, F.neg(x)) == 0
        if x:
            assert F.mul(x, F.inv(x)) == 1
    # every row of the multiplication table of a nonzero element is a permutation
    for x in range(1, q):
        assert sorted(mul[x]) == list(range(q))
    for x, y, z in itertools.product(range(q), repeat=3):
        assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
        assert F.add(F.add(x, y), z) == F.add(x, F.add(y, z))
        assert F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z))


def test_field_make_examples():
    F = field_make(2, 1)
    assert F.q == 2 and tuple(F.modulus) == (0, 1)
    F9 = field_make(3, 2)
    assert F9.q == 9 and tuple(F9.modulus) == (1, 0, 1)
    # x^2 + 1 has no root mod 3
    assert all((x * x + 1) % 3 for x in range(3))
    with pytest.raises(NonPrime):
        field_make(4, 1)
    with pytest.raises(TooLarge):
        field_make(2, 21)


def test_same_field_twice_is_identical():
    assert field_make(2, 3) is field_make(2, 3)
    assert field_of_order(8) == field_make(2, 3)


def _reducible_monics(p, r):
    """Coefficient tuples (lowest first) of all products of two monic factors of positive degree."""
    def monics(d):
        return [tuple(low) + (1,) for low in itertools.product(range(p), repeat=d)]

    out = set()
    for d in range(1, r // 2 + 1):
        for f in monics(d):
            for g in monics(r - d):
                prod = [0] * (r + 1)
                for i, a in enumerate(f):
                    for j, b in enumerate(g):
                        prod[i + j] = (prod[i + j] + a * b) % p
                out.add(tuple(prod))
    return out


@pytest.mark.parametrize("p,r", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_least_irreducible_is_least(p, r):
    bad = _reducible_monics(p, r)
    monic = sorted((tuple(low) + (1,) for low in itertools.product(range(p), repeat=r)),
                   key=lambda c: tuple(reversed(c)))
    first = next(c for c in monic if c not in bad)
    assert tuple(least_irreducible(p, r)) == first
    assert is_irreducible(first, p)


def test_mat_solve_examples():
    F2 = field_of_order(2)
    s = mat_solve(F2, np.eye(2, dtype=np.int64))
    assert s.rank == 2 and s.kernel_basis.shape[0] == 0
    s = mat_solve(F2, np.zeros((2, 3), dtype=np.int64))
    assert s.rank == 0 and s.kernel_basis.shape[0] == 3
    s = mat_solve(F2, np.array([[1, 1], [1, 1]]))
    assert s.rank == 1 and s.kernel_basis.tolist() == [[1, 1]]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_mat_solve_finds_solutions(q):
    F = field_of_order(q)
    rng = np.random.default_rng(q)
    for _ in range(20):
        M = rng.integers(0, q, size=(3, 4))
        x = rng.integers(0, q, size=4)
        b = F.matmul(M, x.reshape(-1, 1)).ravel()
        sol = mat_solve(F, M)
        y = sol.solve(b)
        assert y is not None
        assert np.array_equal(F.matmul(M, y.reshape(-1, 1)).ravel(), b)
        for v in sol.kernel_basis:
            assert not np.any(F.matmul(M, v.reshape(-1, 1)))
        assert sol.rank + sol.kernel_basis.shape[0] == 4


def test_mat_solve_detects_inconsistency():
    F = field_of_order(3)
    sol = mat_solve(F, np.array([[1, 2], [2, 1]]))   # 2*row0 == row1 mod 3
    assert sol.rank == 1
    assert sol.solve([1, 0]) is None


def test_enumerate_vectors():
    F2 = field_of_order(2)
    assert [v.tolist() for v in enumerate_vectors(F2, 0)] == [[]]
    assert [v.tolist() for v in enumerate_vectors(F2, 2)] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    with pytest.raises(BudgetExceeded) as exc:
        list(enumerate_vectors(field_of_order(3), 8, budget=10**3))
    assert exc.value.cost == 6561


@pytest.mark.parametrize("q,d", [(2, 3), (3, 2), (4, 2), (5, 1)])
def test_projective_points_count(q, d):
    F = field_of_order(q)
    pts = projective_points(F, d)
    assert pts.shape[0] == (q**d - 1) // (q - 1)
    assert len({tuple(p) for p in pts}) == pts.shape[0]


def _brute_gl(n, q):
    F = field_of_order(q)
    count = 0
    for entries in itertools.product(range(q), repeat=n * n):
        if F.rank(np.array(entries).reshape(n, n)) == n:
            count += 1
    return count


@pytest.mark.parametrize("n,q", [(1, 2), (2, 2), (2, 3), (3, 2), (2, 4)])
def test_gl_order_matches_brute_force(n, q):
    assert gl_order(n, q) == _brute_gl(n, q)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_det_agrees_with_rank(q):
    F = field_of_order(q)
    rng = np.random.default_rng(7 + q)
    for _ in range(40):
        M = rng.integers(0, q, size=(3, 3))
        assert (F.det(M) != 0) == F.is_invertible(M)
        if F.is_invertible(M):
            assert np.array_equal(F.matmul(M, F.inverse(M)), np.eye(3, dtype=np.int64))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**31))
def test_batch_rank_matches_rank(q, r, c, seed):
    F = field_of_order(q)
    mats = np.random.default_rng(seed).integers(0, q, size=(6, r, c))
    assert batch_rank(F, mats).tolist() == [F.rank(m) for m in mats]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ORDERS), st.integers(0, 2**31))
def test_rref_is_reduced(q, seed):
    F = field_of_order(q)
    M = np.random.default_rng(seed).integers(0, q, size=(3, 5))
    R, piv = F.rref(M)
    for i, c in enumerate(piv):
        col = R[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert not np.any(R[len(piv):])
    # row space is preserved
    assert F.rank(np.vstack([M, R])) == len(piv)
