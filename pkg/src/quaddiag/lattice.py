"""Brute-force lattice enumeration and the counting claims built on it."""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import isqrt, lcm
from typing import Optional, Sequence

import numpy as np

from .exactmath import DimensionError, DomainError, vec
from .model import QuadraticForm
from .transform import GeneralizedOrthogonalTransform, map_old_to_new

DEFAULT_BUDGET = 10**8
MAX_VARIABLES = 4
_FLOAT_EXACT = 2**52  # perfect squares below this survive the float sqrt screen exactly


class BudgetExceeded(RuntimeError):
    pass


class NoSolutionsInBox(ZeroDivisionError):
    pass


class DegeneratePair(ValueError):
    pass


@dataclass(frozen=True)
class SolutionSet:
    points: tuple
    N: int

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        return tuple(x) in set(self.points)


@dataclass(frozen=True)
class _IntForm:
    """``F`` scaled by a positive integer so every written coefficient is an integer.

    ``A`` is upper triangular: ``A[i][i]`` multiplies ``xi^2`` and ``A[i][j]``
    (``i < j``) the full ``xi*xj`` cross coefficient.
    """

    A: tuple
    L: tuple
    a0: int

    @classmethod
    def from_form(cls, f: QuadraticForm) -> "_IntForm":
        n = f.n
        coeffs = [f.A[i][i] if i == j else 2 * f.A[i][j] for i in range(n) for j in range(n)]
        scale = reduce(lcm, (Fraction(c).denominator for c in coeffs + list(f.L) + [f.a0]), 1)
        Q = tuple(tuple(int(scale * (f.A[i][i] if i == j else 2 * f.A[i][j])) if i <= j else 0
                        for j in range(n)) for i in range(n))
        return cls(Q, tuple(int(scale * c) for c in f.L), int(scale * f.a0))

    @property
    def n(self) -> int:
        return len(self.A)

    def value(self, x: Sequence[int]) -> int:
        n = self.n
        return (sum(self.A[i][j] * x[i] * x[j] for i in range(n) for j in range(i, n))
                + sum(l * xi for l, xi in zip(self.L, x)) + self.a0)

    def last_coordinate_quadratic(self, prefix: Sequence[int]) -> tuple[int, int, int]:
        """Coefficients ``(a, b, c)`` of ``F(prefix, z) = a z^2 + b z + c``."""
        k = self.n - 1
        a = self.A[k][k]
        b = sum(self.A[i][k] * prefix[i] for i in range(k)) + self.L[k]
        c = (sum(self.A[i][j] * prefix[i] * prefix[j] for i in range(k) for j in range(i, k))
             + sum(self.L[i] * prefix[i] for i in range(k)) + self.a0)
        return a, b, c


def _roots_in_box(a: int, b: int, c: int, N: int) -> list[int]:
    if a == 0:
        if b == 0:
            return list(range(-N, N + 1)) if c == 0 else []
        return [-c // b] if c % b == 0 and abs(c // b) <= N else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    out = set()
    for num in (-b + r, -b - r):
        if num % (2 * a) == 0 and abs(num // (2 * a)) <= N:
            out.add(num // (2 * a))
    return sorted(out)


def _magnitude_bound(g: _IntForm, N: int) -> int:
    k = g.n - 1
    amax = max((abs(x) for row in g.A for x in row), default=0)
    lmax = max((abs(x) for x in g.L), default=0)
    b = amax * k * N + lmax
    c = amax * k * k * N * N + lmax * k * N + abs(g.a0)
    return b * b + 4 * abs(g.A[k][k]) * c + 1


def _solve_row_numpy(g: _IntForm, prefix: tuple, xs: np.ndarray, N: int) -> list[tuple]:
    """Vectorized over the second-to-last coordinate; exact int64 screening."""
    k = g.n - 1
    j = k - 1
    Q = g.A
    a = Q[k][k]
    # parts independent of x_j
    b0 = sum(Q[i][k] * prefix[i] for i in range(j)) + g.L[k]
    c0 = (sum(Q[i][m] * prefix[i] * prefix[m] for i in range(j) for m in range(i, j))
          + sum(g.L[i] * prefix[i] for i in range(j)) + g.a0)
    c1 = sum(Q[i][j] * prefix[i] for i in range(j)) + g.L[j]
    b = b0 + Q[j][k] * xs
    c = c0 + c1 * xs + Q[j][j] * xs * xs
    found = []
    if a == 0:
        nz = b != 0
        ok = nz & (c % np.where(nz, b, 1) == 0)
        z = np.where(nz, -c // np.where(nz, b, 1), 0)
        ok &= np.abs(z) <= N
        found += [(int(x), int(zz)) for x, zz in zip(xs[ok], z[ok])]
        for x in xs[(b == 0) & (c == 0)]:
            found += [(int(x), zz) for zz in range(-N, N + 1)]
    else:
        disc = b * b - 4 * a * c
        pos = disc >= 0
        r = np.zeros_like(disc)
        r[pos] = np.rint(np.sqrt(disc[pos].astype(np.float64))).astype(np.int64)
        sq = pos & (r * r == disc)
        for x, bb, rr in zip(xs[sq].tolist(), b[sq].tolist(), r[sq].tolist()):
            for num in {-bb + rr, -bb - rr}:
                if num % (2 * a) == 0 and abs(num // (2 * a)) <= N:
                    found.append((x, num // (2 * a)))
    return [prefix + (x, z) for x, z in found]


def _enumerate_slice(g: _IntForm, N: int, lo: int, hi: int, use_numpy: bool) -> list[tuple]:
    """Solutions with first coordinate in ``[lo, hi]`` (all of them when n == 1)."""
    n = g.n
    if n == 1:
        return [(z,) for z in _roots_in_box(*g.last_coordinate_quadratic(()), N)]
    ranges = [range(lo, hi + 1)] + [range(-N, N + 1)] * (n - 2)
    points = []
    if use_numpy:
        outer, inner = ranges[:n - 2], ranges[n - 2]
        xs = np.arange(inner.start, inner.stop, dtype=np.int64)
        for prefix in product(*outer):
            points += _solve_row_numpy(g, prefix, xs, N)
    else:
        for prefix in product(*ranges):
            points += [prefix + (z,) for z in _roots_in_box(*g.last_coordinate_quadratic(prefix), N)]
    return points


def _slice_worker(args):
    return _enumerate_slice(*args)


def enumerate_solutions(f: QuadraticForm, N: int, budget: int = DEFAULT_BUDGET,
                        workers: int = 1, use_numpy: Optional[bool] = None) -> SolutionSet:
    """All integer solutions of ``f = 0`` in the box ``[-N, N]^n``.

    The first ``n - 1`` coordinates are scanned; the last one is solved from
    its (exact) quadratic.  ``workers > 1`` splits the first coordinate's range
    across processes.
    """
    if N < 0:
        raise DomainError("N must be nonnegative")
    if f.n > MAX_VARIABLES:
        raise BudgetExceeded(f"enumeration supports at most {MAX_VARIABLES} variables")
    scanned = (2 * N + 1) ** (f.n - 1)
    if scanned > budget:
        raise BudgetExceeded(f"{scanned} candidate points exceed budget {budget}")
    g = _IntForm.from_form(f)
    if use_numpy is None:
        use_numpy = _magnitude_bound(g, N) < _FLOAT_EXACT
    if f.n == 1 or workers <= 1:
        chunks = [(-N, N)]
    else:
        edges = np.linspace(-N, N + 1, workers + 1).astype(int)
        chunks = [(int(a), int(b) - 1) for a, b in zip(edges[:-1], edges[1:]) if b > a]
    jobs = [(g, N, lo, hi, use_numpy) for lo, hi in chunks]
    if len(jobs) == 1:
        parts = [_slice_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_slice_worker, jobs))
    points = sorted({p for part in parts for p in part})
    bad = [p for p in points if g.value(p) != 0]
    if bad:
        raise AssertionError(f"enumeration produced non-solutions: {bad[:3]}")
    return SolutionSet(tuple(points), N)


# -- growth classification -------------------------------------------------

_CLASS_ORDER = ["Constant", "Linear", "LinearLog"]


@dataclass(frozen=True)
class GrowthReport:
    ladder: tuple
    growth_class: Optional[str]
    fit_stats: dict = field(default_factory=dict)

    @property
    def counts(self) -> list[int]:
        return [c for _, c in self.ladder]


def _model_columns(Ns: np.ndarray, max_power: int) -> dict:
    models = {
        "Constant": [np.ones_like(Ns)],
        "Linear": [np.ones_like(Ns), Ns],
        "LinearLog": [np.ones_like(Ns), Ns * np.log(Ns)],
    }
    for r in range(2, max_power + 1):
        models[f"Power({r})"] = [np.ones_like(Ns), Ns ** r]
    return models


def classify_growth(ladder: Sequence[tuple], max_power: int = 1, tol: float = 1e-9):
    """Pick the model ``a + b*g(N)`` with the smallest relative RMS residual.

    Candidates are constant, ``N``, ``N ln N`` and integer powers ``N^r``
    (``2 <= r <= max_power``).  Residuals within ``tol`` of the best count as
    a tie, resolved toward the slower-growing class.
    """
    Ns = np.array([float(n) for n, _ in ladder])
    R = np.array([float(c) for _, c in ladder])
    w = 1.0 / np.maximum(R, 1.0)
    stats = {}
    for name, cols in _model_columns(Ns, max_power).items():
        X = np.column_stack(cols)
        coef, *_ = np.linalg.lstsq(X * w[:, None], R * w, rcond=None)
        resid = (R - X @ coef) * w
        stats[name] = {"residual": float(np.sqrt(np.mean(resid ** 2))),
                       "coefficients": [float(c) for c in coef]}
    best = min(s["residual"] for s in stats.values())
    cls = next(name for name in stats if stats[name]["residual"] <= best + tol)
    return cls, stats


def count_ladder(f: QuadraticForm, Ns: Sequence[int], budget: int = DEFAULT_BUDGET,
                 workers: int = 1) -> GrowthReport:
    Ns = [int(n) for n in Ns]
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise ValueError("ladder must be strictly increasing")
    ladder = tuple((n, len(enumerate_solutions(f, n, budget, workers))) for n in Ns)
    if len(Ns) < 4:
        return GrowthReport(ladder, None, {})
    cls, stats = classify_growth(ladder, max_power=f.n - 1)
    return GrowthReport(ladder, cls, stats)


# -- density, distance, bounds ---------------------------------------------

def density_ratio(f_old: QuadraticForm, T: GeneralizedOrthogonalTransform, N: int,
                  budget: int = DEFAULT_BUDGET) -> Fraction:
    """Share of the box's old solutions whose new coordinates are integral and inside the box.

    Equivalently: the number of new-equation solutions in the box that map
    (through ``T``) to integer old solutions in the box, over the number of old
    solutions in the box.
    """
    old = enumerate_solutions(f_old, N, budget)
    if not len(old):
        raise NoSolutionsInBox(f"no solutions in [-{N}, {N}]^{f_old.n}")
    kept = 0
    for x in old:
        y, integral = map_old_to_new(T, x)
        if integral and all(abs(c) <= N for c in y):
            kept += 1
    return Fraction(kept, len(old))


def distance_ratio(k: Sequence, p1: Sequence, p2: Sequence) -> Fraction:
    """Squared distance ratio after the axis stretch ``x_i -> k_i x_i``."""
    p1, p2, k = vec(p1), vec(p2), vec(k)
    if not (len(p1) == len(p2) == len(k)):
        raise DimensionError("length mismatch")
    delta = [b - a for a, b in zip(p1, p2)]
    den = sum(d * d for d in delta)
    if den == 0:
        raise DegeneratePair("points coincide")
    return sum(ki * ki * d * d for ki, d in zip(k, delta)) / den


def upper_bound_check(n: int, N: int, count: int, degree: int = 2) -> bool:
    """``count <= degree * (2N + 1)^(n - 1)``."""
    return count <= degree * (2 * N + 1) ** (n - 1)


def fermat_cone_solutions(m_max: int, n_max: int, l_max: int) -> list[tuple]:
    """Positive solutions of ``9 x1^2 + 36 x2^2 - 4 x3^2 = 0`` from ``(m, n, l)``.

    ``3 x1 = (m^2 - n^2) l``, ``6 x2 = 2 m n l``, ``2 x3 = (m^2 + n^2) l``;
    triples where any coordinate is fractional are skipped.
    """
    out = set()
    for m in range(2, m_max + 1):
        for n in range(1, min(m - 1, n_max) + 1):
            for l in range(1, l_max + 1):
                a, b, c = (m * m - n * n) * l, 2 * m * n * l, (m * m + n * n) * l
                if a % 3 or b % 6 or c % 2:
                    continue
                out.add((a // 3, b // 6, c // 2))
    return sorted(out)


def fermat_cone_bound(N: float) -> float:
    """Closed-form ``3*pi*N*ln(N)/2`` ceiling on the box count of the diagonal cone."""
    if N < 2:
        raise DomainError("N must be at least 2")
    return 3 * math.pi * N * math.log(N) / 2
