"""Characteristic polynomials, integer eigenvalues and orthogonal integer eigenbases."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import isqrt, lcm
from typing import Optional, Sequence

from .exactmath import (DimensionError, Matrix, Vector, dot, gram_schmidt_exact,
                        identity, mat, mat_add, mat_scale, matmul, matvec,
                        nullspace_basis, primitive_scale, trace, vec)


class SpectralMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CharPoly:
    """``det(A - tI)`` with ``coeffs[k]`` the coefficient of ``t**k``."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {body}" if terms else ("-" + body if c < 0 else body))
        return " ".join(terms) or "0"


def char_poly(A: Matrix) -> CharPoly:
    """Faddeev-LeVerrier recurrence over exact rationals."""
    A = mat(A)
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimensionError("square matrix required")
    # c[k] for det(tI - A) = sum c[k] t^k, c[n] = 1
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    M = mat_scale(identity(n), 0)
    I = identity(n)
    for k in range(1, n + 1):
        M = mat_add(matmul(A, M), mat_scale(I, c[n - k + 1]))
        c[n - k] = -trace(matmul(A, M)) / k
    sign = -1 if n % 2 else 1
    return CharPoly(tuple(sign * x for x in c))


def _synthetic_division(coeffs: list[int], root: int) -> tuple[list[int], int]:
    """Divide ascending ``coeffs`` by ``(t - root)``; returns (quotient, remainder)."""
    out = []
    acc = 0
    for c in reversed(coeffs):
        acc = acc * root + c
        out.append(acc)
    rem = out.pop()
    return list(reversed(out)), rem


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small = [d for d in range(1, isqrt(m) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def integer_eigenvalues(p: CharPoly) -> Optional[list[int]]:
    """All roots of ``p`` (with multiplicity) if every one is an integer, else None.

    A polynomial whose roots are all integers has integer coefficients once its
    leading coefficient is +-1, so anything else is rejected immediately.
    """
    lead = p.coeffs[-1]
    coeffs = [c / lead for c in p.coeffs]
    if any(c.denominator != 1 for c in coeffs):
        return None
    coeffs = [int(c) for c in coeffs]
    roots = []
    while len(coeffs) > 1 and coeffs[0] == 0:
        roots.append(0)
        coeffs = coeffs[1:]
    while len(coeffs) > 1:
        for d in _divisors(coeffs[0]):
            found = False
            for r in (d, -d):
                q, rem = _synthetic_division(coeffs, r)
                if rem == 0:
                    roots.append(r)
                    coeffs = q
                    found = True
                    break
            if found:
                break
        else:
            return None
    return sorted(roots, reverse=True)


def matrix_integer_eigenvalues(A: Matrix) -> Optional[list[int]]:
    """Integer eigenvalues of a rational symmetric matrix.

    The matrix is scaled to integers first (by 2 for forms with odd cross
    terms) and the scaled eigenvalues must be divisible by the scale.
    """
    A = mat(A)
    scale = reduce(lcm, (x.denominator for row in A for x in row), 1)
    scaled = integer_eigenvalues(char_poly(mat_scale(A, scale)))
    if scaled is None or any(t % scale for t in scaled):
        return None
    return [t // scale for t in scaled]


@dataclass(frozen=True)
class Spectrum:
    """Eigenpairs ``(t, v)`` with ``v`` a primitive integer vector, multiplicity-expanded."""

    pairs: tuple

    @property
    def eigenvalues(self) -> list[int]:
        return [t for t, _ in self.pairs]

    @property
    def vectors(self) -> list[Vector]:
        return [v for _, v in self.pairs]

    def aligned_to(self, reference: Sequence[Sequence]) -> "Spectrum":
        """Reorder and re-sign eigenvectors to follow ``reference`` directions.

        Each reference vector must be parallel to exactly one eigenvector;
        useful for reproducing a particular published column order.
        """
        remaining = list(self.pairs)
        out = []
        for ref in reference:
            key = primitive_scale(ref)
            k = next((k for k, (_, v) in enumerate(remaining) if v == key), None)
            if k is None:
                raise SpectralMismatch(f"no eigenvector parallel to {tuple(map(str, key))}")
            t, v = remaining.pop(k)
            sign = 1 if dot(v, vec(ref)) > 0 else -1
            out.append((t, tuple(sign * x for x in v)))
        if remaining:
            raise SpectralMismatch("reference does not cover the spectrum")
        return Spectrum(tuple(out))


def integer_orthogonal_eigenbasis(A: Matrix, eigenvalues: Sequence[int]) -> Spectrum:
    A = mat(A)
    n = len(A)
    if len(eigenvalues) != n:
        raise SpectralMismatch(f"{len(eigenvalues)} eigenvalues for a {n}x{n} matrix")
    pairs = []
    for t in sorted(set(eigenvalues), reverse=True):
        mult = list(eigenvalues).count(t)
        shifted = mat_add(A, mat_scale(identity(n), -t))
        basis = nullspace_basis(shifted)
        if len(basis) != mult:
            raise SpectralMismatch(
                f"eigenvalue {t}: multiplicity {mult} but eigenspace dimension {len(basis)}")
        vs = sorted(primitive_scale(v) for v in gram_schmidt_exact(basis))
        pairs += [(t, v) for v in vs]
    for t, v in pairs:
        if matvec(A, v) != tuple(t * x for x in v):
            raise SpectralMismatch(f"{v} is not an eigenvector for {t}")
    return Spectrum(tuple(pairs))


def integer_spectrum(A: Matrix) -> Optional[Spectrum]:
    """Full pipeline: eigenvalues then eigenbasis, or None when an eigenvalue is not an integer."""
    ts = matrix_integer_eigenvalues(A)
    if ts is None:
        return None
    return integer_orthogonal_eigenbasis(A, ts)
