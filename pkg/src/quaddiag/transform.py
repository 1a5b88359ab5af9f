"""Generalized integer orthogonal transformations.

The canonical direction is the pull-back ``x_old = C @ x_new + center`` where
the columns of ``C`` are pairwise orthogonal integer eigenvectors of the
form's matrix.  Substituting it turns a centered form into
``sum(k_j**2 * t_j * x_j**2) + a0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath import (DomainError, Matrix, Vector, det_exact, diag, dot,
                        inverse, is_integral, mat, matmul, matvec, rational_sqrt,
                        solve_linear, transpose, vec)
from .model import QuadraticForm
from .spectral import Spectrum


class DegenerateTransform(ArithmeticError):
    pass


class InternalInconsistency(AssertionError):
    pass


class AlreadyDiagonal(ValueError):
    pass


class NoIntegerTransform(ArithmeticError):
    pass


@dataclass(frozen=True)
class GeneralizedOrthogonalTransform:
    C: Matrix
    k_squared: tuple
    det: Fraction
    center: Vector

    @property
    def n(self) -> int:
        return len(self.C)

    @property
    def is_integer(self) -> bool:
        return is_integral([x for row in self.C for x in row]) and is_integral(self.center)

    @classmethod
    def from_matrix(cls, C, center=None) -> "GeneralizedOrthogonalTransform":
        """Wrap an arbitrary matrix with orthogonal columns (integer or not)."""
        C = mat(C)
        n = len(C)
        cols = transpose(C)
        for i in range(n):
            for j in range(i + 1, n):
                if dot(cols[i], cols[j]) != 0:
                    raise ValueError(f"columns {i} and {j} are not orthogonal")
        d = det_exact(C)
        if d == 0:
            raise DegenerateTransform("transform matrix is singular")
        center = vec(center if center is not None else [0] * n)
        return cls(C, tuple(dot(c, c) for c in cols), d, center)

    @classmethod
    def from_pushforward(cls, M, center=None) -> "GeneralizedOrthogonalTransform":
        """Transform whose forward map is ``x_new = M @ (x_old - center)``."""
        return cls.from_matrix(inverse(mat(M)), center)


@dataclass(frozen=True)
class DiagonalForm:
    d: tuple
    a0: Fraction

    def as_form(self) -> QuadraticForm:
        return QuadraticForm(diag(self.d), [0] * len(self.d), self.a0)


def build_got(spectrum: Spectrum, center: Optional[Sequence] = None) -> GeneralizedOrthogonalTransform:
    """Eigenvectors as columns, in spectrum order."""
    C = transpose(mat(spectrum.vectors))
    if not is_integral([x for row in C for x in row]):
        raise ValueError("eigenvectors must be integer")
    T = GeneralizedOrthogonalTransform.from_matrix(C, center)
    if abs(T.det) < 1:
        raise DegenerateTransform(f"|det| = {abs(T.det)} < 1")
    return T


def diagonal_form(f: QuadraticForm, T: GeneralizedOrthogonalTransform, spectrum: Spectrum) -> DiagonalForm:
    if any(f.L):
        raise ValueError("form must be centered (no linear part)")
    d = tuple(k * t for k, t in zip(T.k_squared, spectrum.eigenvalues))
    congruent = matmul(matmul(transpose(T.C), f.A), T.C)
    if congruent != diag(d):
        raise InternalInconsistency("C^T A C is not the expected diagonal matrix")
    return DiagonalForm(tuple(int(x) if is_integral(x) else x for x in d), f.a0)


def map_new_to_old(T: GeneralizedOrthogonalTransform, x_new: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(matvec(T.C, vec(x_new)), T.center))


def map_old_to_new(T: GeneralizedOrthogonalTransform, x_old: Sequence) -> tuple[Vector, bool]:
    shifted = [a - b for a, b in zip(vec(x_old), T.center)]
    x_new = solve_linear(T.C, shifted)
    return x_new, is_integral(x_new)


def pushforward_form(f: QuadraticForm, M) -> tuple[QuadraticForm, bool]:
    """Form ``G`` with ``G(y) = F(M^-1 y)``, plus whether G has integer coefficients."""
    Minv = inverse(mat(M))
    A = matmul(matmul(transpose(Minv), f.A), Minv)
    L = matvec(transpose(Minv), f.L)
    g = QuadraticForm(A, L, f.a0)
    return g, g.is_integer


@dataclass(frozen=True)
class Tangent:
    """Exact value ``rational + sign * sqrt(radicand)``."""

    rational: Fraction
    radicand: Fraction
    sign: int

    @property
    def value(self) -> Optional[Fraction]:
        root = rational_sqrt(self.radicand)
        return None if root is None else self.rational + self.sign * root

    def __str__(self):
        v = self.value
        if v is not None:
            return str(v)
        return f"{self.rational} {'+' if self.sign > 0 else '-'} sqrt({self.radicand})"


@dataclass(frozen=True)
class TwoVarAnalysis:
    tangents: tuple
    rational: bool
    resulting_matrix: Optional[Matrix] = None
    homothety_squared: Optional[Fraction] = None


def two_var_tangents(a11, a12, a22) -> TwoVarAnalysis:
    """Rotation-angle tangents that diagonalize ``a11 x1^2 + 2 a12 x1 x2 + a22 x2^2``."""
    a11, a12, a22 = Fraction(a11), Fraction(a12), Fraction(a22)
    if a12 == 0:
        raise AlreadyDiagonal("no cross term")
    half = (a22 - a11) / (2 * a12)
    # radicand = ((a22-a11)^2 + (2 a12)^2) / (2 a12)^2; rational iff the numerator is a square
    radicand = half * half + 1
    tangents = (Tangent(half, radicand, +1), Tangent(half, radicand, -1))
    rational = rational_sqrt(radicand) is not None
    if not rational:
        return TwoVarAnalysis(tangents, False)
    M, h = two_var_transform(tangents[0])
    return TwoVarAnalysis(tangents, True, M, h)


def two_var_transform(tangent: Tangent) -> tuple[Matrix, Fraction]:
    """Integer rotation-plus-homothety ``[[q, -p], [p, q]]`` for ``tg = p/q``."""
    tg = tangent.value
    if tg is None:
        raise NoIntegerTransform(f"tangent {tangent} is irrational")
    p, q = tg.numerator, tg.denominator
    M = mat([[q, -p], [p, q]])
    return M, Fraction(p * p + q * q)


def pythagorean_family(u: int, v: int, l: int) -> tuple[int, int, int]:
    """``(a22 - a11, a12, 2*a12*p/q)`` making the rotation tangent rational."""
    if not (u > v >= 1 and l >= 1):
        raise DomainError("need u > v >= 1 and l >= 1")
    return (u * u - v * v) * l, u * v * l, (u * u + v * v) * l

