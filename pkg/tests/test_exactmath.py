from fractions import Fraction as F
from functools import reduce
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from quaddiag.exactmath import (DegenerateBasis, DimensionError, DomainError, SingularMatrix,
                                ZeroVector, det_cofactor, det_exact, dot, gram_schmidt_exact,
                                identity, integer_sqrt_test, inverse, matmul, matvec,
                                nullspace_basis, primitive_scale, rational_sqrt, solve_linear)

from conftest import A_CENTRAL

small = st.integers(-9, 9)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_examples():
    assert det_exact(A_CENTRAL) == -36
    assert det_exact(identity(3)) == 1
    assert det_exact([[1, -1], [1, 1]]) == 2


def test_det_rational_and_singular():
    assert det_exact([[F(1, 2), 1], [1, 4]]) == 1
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([[0, 1], [1, 0]]) == -1


def test_det_rejects_non_square():
    with pytest.raises(DimensionError):
        det_exact([[1, 2, 3], [4, 5, 6]])


@given(st.integers(1, 5).flatmap(square))
@settings(max_examples=200)
def test_det_matches_cofactor_expansion(m):
    assert det_exact(m) == det_cofactor(m)


def test_solve_linear_center_system():
    M = [[2 * x for x in row] for row in A_CENTRAL]
    assert solve_linear(M, [-8, -20, 0]) == (1, -2, -1)
    assert solve_linear(identity(3), [F(1, 3), 2, -5]) == (F(1, 3), 2, -5)
    with pytest.raises(SingularMatrix):
        solve_linear([[1, 1], [1, 1]], [1, 0])


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), st.lists(small, min_size=n, max_size=n))))
@settings(max_examples=150)
def test_solve_linear_substitution(case):
    m, rhs = case
    if det_cofactor(m) == 0:
        with pytest.raises(SingularMatrix):
            solve_linear(m, rhs)
        return
    x = solve_linear(m, rhs)
    assert matvec(m, x) == tuple(rhs)


def test_inverse():
    m = [[1, -1], [1, 1]]
    assert matmul(m, inverse(m)) == identity(2)


def test_nullspace_examples():
    shift = lambda t: [[A_CENTRAL[i][j] - (t if i == j else 0) for j in range(3)] for i in range(3)]
    (v,) = nullspace_basis(shift(3))
    assert primitive_scale(v) == (1, -1, 1)
    (w,) = nullspace_basis(shift(6))
    assert primitive_scale(w) == (1, 2, 1)
    assert nullspace_basis(identity(3)) == []


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))))
@settings(max_examples=150)
def test_nullspace_vectors_are_annihilated_and_independent(m):
    basis = nullspace_basis(m)
    for v in basis:
        assert not any(matvec(m, v))
    if basis:
        gram_schmidt_exact(basis)  # raises on dependence
    # rank-nullity against an independent rank count
    cols = len(m[0])
    assert len(basis) == cols - _rank(m)


def _rank(m):
    rows = [list(map(F, r)) for r in m]
    rank = 0
    for c in range(len(rows[0])):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def test_gram_schmidt_examples():
    assert gram_schmidt_exact([(1, -1, 1), (1, 2, 1)]) == [(1, -1, 1), (1, 2, 1)]
    assert gram_schmidt_exact([(1, 1), (1, 0)]) == [(1, 1), (F(1, 2), F(-1, 2))]
    with pytest.raises(DegenerateBasis):
        gram_schmidt_exact([(1, 0), (2, 0)])


@given(st.integers(2, 4).flatmap(square))
@settings(max_examples=150)
def test_gram_schmidt_orthogonal_same_span(m):
    if det_cofactor(m) == 0:
        return
    out = gram_schmidt_exact(m)
    for i in range(len(out)):
        for j in range(i):
            assert dot(out[i], out[j]) == 0
    # each input vector is a rational combination of the outputs
    for v in m:
        recon = [sum(dot(v, u) / dot(u, u) * u[k] for u in out) for k in range(len(v))]
        assert tuple(recon) == tuple(map(F, v))


def test_primitive_scale_examples():
    assert primitive_scale((F(1, 2), 1, F(3, 2))) == (1, 2, 3)
    assert primitive_scale((1, -1, 1)) == (1, -1, 1)
    assert primitive_scale((-1, 0, 1)) == (1, 0, -1)
    with pytest.raises(ZeroVector):
        primitive_scale((0, 0, 0))


@given(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), min_size=1, max_size=5))
def test_primitive_scale_properties(v):
    if not any(v):
        return
    p = primitive_scale(v)
    assert reduce(gcd, (int(x) for x in p)) == 1
    assert all(x.denominator == 1 for x in p)
    k = next(a / b for a, b in zip(p, v) if b != 0)
    assert tuple(k * x for x in v) == p


def test_integer_sqrt_examples():
    assert integer_sqrt_test(3 ** 2 + 4 ** 2) == 5
    assert integer_sqrt_test(2) is None
    assert integer_sqrt_test(0) == 0
    with pytest.raises(DomainError):
        integer_sqrt_test(-1)


@given(st.integers(0, 10**6))
def test_integer_sqrt_of_squares(r):
    assert integer_sqrt_test(r * r) == r
    if r > 0:
        assert integer_sqrt_test(r * r + 1) is None


def test_rational_sqrt():
    assert rational_sqrt(F(25, 16)) == F(5, 4)
    assert rational_sqrt(F(2)) is None
