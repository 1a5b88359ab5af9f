"""Exact integer/rational linear algebra.

Matrices are tuples of row tuples of :class:`fractions.Fraction`, vectors are
tuples of ``Fraction``.  Everything here is exact; nothing touches floats.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import permutations
from math import gcd, isqrt, lcm, prod
from typing import Iterable, Optional, Sequence


class DimensionError(ValueError):
    pass


class SingularMatrix(ArithmeticError):
    pass


class DegenerateBasis(ValueError):
    pass


class ZeroVector(ValueError):
    pass


class DomainError(ValueError):
    pass


Vector = tuple
Matrix = tuple


def vec(entries: Iterable) -> Vector:
    v = tuple(Fraction(e) for e in entries)
    if not v:
        raise DimensionError("empty vector")
    return v


def mat(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(tuple(Fraction(e) for e in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("ragged matrix")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise DimensionError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
                 for row in a)


def matvec(m: Matrix, v: Sequence) -> Vector:
    if shape(m)[1] != len(v):
        raise DimensionError(f"cannot apply {shape(m)} matrix to length-{len(v)} vector")
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("length mismatch")
    return sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0))


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), Fraction(0))


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(tuple(Fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
                 for i in range(n))


def is_integral(x) -> bool:
    if isinstance(x, (tuple, list)):
        return all(is_integral(e) for e in x)
    return Fraction(x).denominator == 1


def is_symmetric(m: Matrix) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def _require_square(m: Matrix) -> int:
    r, c = shape(m)
    if r != c:
        raise DimensionError(f"square matrix required, got {r}x{c}")
    return r


def _denominator_lcm(entries: Iterable[Fraction]) -> int:
    return reduce(lcm, (Fraction(e).denominator for e in entries), 1)


def det_bareiss(m: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Each row is first scaled to integers; the scales are divided out at the end.
    """
    n = _require_square(m)
    if n == 0:
        return Fraction(1)
    scales = [_denominator_lcm(row) for row in m]
    a = [[int(x * s) for x in row] for row, s in zip(m, scales)]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], prod(scales))


def det_cofactor(m: Matrix) -> Fraction:
    """Leibniz expansion; only sensible for tiny matrices."""
    n = _require_square(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = prod((m[i][perm[i]] for i in range(n)), start=Fraction(1))
        total += -term if inversions % 2 else term
    return total


def det_exact(m: Matrix) -> Fraction:
    return det_bareiss(mat(m))


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (rows, pivot columns)."""
    a = [list(row) for row in m]
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def solve_linear(m: Matrix, rhs: Sequence) -> Vector:
    m = mat(m)
    n = _require_square(m)
    if len(rhs) != n:
        raise DimensionError("right-hand side length mismatch")
    aug = tuple(row + (Fraction(b),) for row, b in zip(m, rhs))
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(reduced[i][n] for i in range(n))


def inverse(m: Matrix) -> Matrix:
    m = mat(m)
    n = _require_square(m)
    aug = tuple(row + e for row, e in zip(m, identity(n)))
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(tuple(reduced[i][n:]) for i in range(n))


def nullspace_basis(m: Matrix) -> list[Vector]:
    """Rational kernel basis, one vector per free column of the RREF."""
    m = mat(m)
    cols = shape(m)[1]
    reduced, pivots = rref(m)
    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        v = [Fraction(0)] * cols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][free]
        basis.append(tuple(v))
    return basis


def gram_schmidt_exact(vs: Sequence[Sequence]) -> list[Vector]:
    """Unnormalized Gram-Schmidt; output is pairwise orthogonal, same span."""
    out: list[Vector] = []
    for v in vs:
        w = vec(v)
        for u in out:
            w = tuple(x - dot(w, u) / dot(u, u) * y for x, y in zip(w, u))
        if not any(w):
            raise DegenerateBasis("input vectors are linearly dependent")
        out.append(w)
    return out


def primitive_scale(v: Sequence) -> Vector:
    """Coprime integer vector along ``v`` with its first nonzero entry positive."""
    v = vec(v)
    if not any(v):
        raise ZeroVector("cannot scale the zero vector")
    den = _denominator_lcm(v)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    if next(x for x in ints if x != 0) < 0:
        g = -g
    return tuple(Fraction(x // g) for x in ints)


def integer_sqrt_test(x: int) -> Optional[int]:
    if x < 0:
        raise DomainError("negative input")
    r = isqrt(x)
    return r if r * r == x else None


def rational_sqrt(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        raise DomainError("negative input")
    p = integer_sqrt_test(x.numerator)
    q = integer_sqrt_test(x.denominator)
    if p is None or q is None:
        return None
    return Fraction(p, q)


def fmt(x) -> str:
    """Exact decimal text: ``"5"``, ``"-1/2"``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
