"""Integer symmetric matrices with a prescribed integer spectrum.

``A = t_n I + sum_i (t_i - t_n) v_i v_i^T / (v_i . v_i)`` for pairwise
orthogonal integer vectors ``v_i``.  Choosing ``t_i - t_n`` as a multiple of
``v_i . v_i`` keeps ``A`` integral, so the spectrum is known in advance and
serves as an oracle for the diagonalization pipeline.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import (dot, gram_schmidt_exact, identity, is_integral, mat_add, mat_scale,
                        matvec, primitive_scale)
from .model import QuadraticForm


@dataclass(frozen=True)
class Fixture:
    form: QuadraticForm
    eigenvalues: tuple
    vectors: tuple
    center: tuple


def known_spectrum_matrix(vectors: Sequence[Sequence], eigenvalues: Sequence[int]):
    n = len(vectors)
    tn = eigenvalues[-1]
    A = mat_scale(identity(n), tn)
    for v, t in zip(vectors[:-1], eigenvalues[:-1]):
        v = [Fraction(x) for x in v]
        vv = dot(v, v)
        outer = tuple(tuple((t - tn) * a * b / vv for b in v) for a in v)
        A = mat_add(A, outer)
    if not is_integral([x for row in A for x in row]):
        raise ValueError("eigenvalue gaps must be multiples of the squared norms")
    return A


def random_orthogonal_basis(rng: random.Random, n: int, size: int = 3) -> list[tuple]:
    while True:
        raw = [[rng.randint(-size, size) for _ in range(n)] for _ in range(n)]
        try:
            basis = gram_schmidt_exact(raw)
        except ValueError:
            continue
        return [primitive_scale(v) for v in basis]


def random_fixture(rng: random.Random, n: int, size: int = 2, spread: int = 3,
                   nonsingular: bool = True) -> Fixture:
    """Random form with a known spectrum and an integer center (when nonsingular)."""
    vectors = random_orthogonal_basis(rng, n, size)
    while True:
        tn = rng.randint(-spread, spread)
        ts = [tn + int(dot(v, v)) * rng.randint(-spread, spread) for v in vectors[:-1]] + [tn]
        if not (nonsingular and 0 in ts):
            break
    A = known_spectrum_matrix(vectors, ts)
    center = tuple(rng.randint(-5, 5) for _ in range(n))
    shift = rng.randint(-20, 20)
    Ac = matvec(A, center)
    form = QuadraticForm(A, [-2 * x for x in Ac], dot(center, Ac) + shift)
    return Fixture(form, tuple(sorted(ts, reverse=True)), tuple(vectors), center)
