"""End-to-end acceptance checks, one test per criterion.

Each test prints a ``PASS``/``FAIL`` line with its wall time; the lines are
also repeated in pytest's terminal summary.  Run standalone with
``python tests/test_acceptance.py``.
"""
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import pytest

from quaddiag import (NoIntegerTransform, QuadraticForm, classify_center, count_ladder,
                      density_ratio, diagonalize, enumerate_solutions, eval_form,
                      fermat_cone_bound, map_new_to_old,
                      map_old_to_new, parse_form, print_form, pushforward_form, two_var_tangents,
                      two_var_transform, upper_bound_check)
from quaddiag.exactmath import det_exact, diag, matmul, transpose
from quaddiag.fixtures import random_fixture
from quaddiag.transform import GeneralizedOrthogonalTransform

from conftest import EQ_CENTRAL, EQ_CONE, WORKED_EIGVECS, THUE

RESULTS = []


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s, limit {limit:g}s)"
        RESULTS.append(line)
        print(line)
    assert elapsed < limit, line


def test_1_thue_walkthrough():
    with criterion(1, "Thue walkthrough", 1):
        f = parse_form(THUE)
        old = enumerate_solutions(f, 2)
        assert len(old) == 8
        M = [[1, -1], [1, 1]]
        g, integral = pushforward_form(f, M)
        assert integral and print_form(g) == "x2^2 - 1 = 0"
        assert len(enumerate_solutions(g, 2)) == 10
        images = {(a - b, a + b) for a, b in old}
        assert len([p for p in images if max(map(abs, p)) <= 2]) == 4
        T = GeneralizedOrthogonalTransform.from_pushforward(M)
        assert density_ratio(f, T, 2) == F(1, 2) == 1 / abs(det_exact(M))


def test_2_full_pipeline():
    with criterion(2, "full pipeline on the 3-variable example", 1):
        f = parse_form(EQ_CENTRAL)
        cr = classify_center(f)
        assert cr.center == (1, -2, -1) and cr.translated.a0 == 0
        r = diagonalize(f, align_to=WORKED_EIGVECS)
        assert r.ok and sorted(r.eigenvalues) == [-2, 3, 6]
        assert [tuple(v) for v in r.spectrum.vectors] == WORKED_EIGVECS
        T = r.transform
        assert T.det == 6 and T.k_squared == (3, 6, 2)
        assert r.diagonal_form.d == (9, 36, -4) and r.diagonal_form.a0 == 0
        assert r.diagonal_form.as_form() == parse_form(EQ_CONE)


def test_3_solution_transport():
    with criterion(3, "solution transport", 1):
        f = parse_form(EQ_CENTRAL)
        T = diagonalize(f, align_to=WORKED_EIGVECS).transform
        for new, old in [((6, 4, 15), (-4, 0, 24)), ((16, 6, 30), (-7, -6, 51))]:
            assert map_new_to_old(T, new) == old
            assert eval_form(f, old) == 0
            assert map_old_to_new(T, old) == (new, True)


def test_4_two_variable():
    with criterion(4, "two-variable specialization", 1):
        a = two_var_tangents(1, 2, 4)
        assert [t.value for t in a.tangents] == [2, F(-1, 2)]
        mats = [two_var_transform(t) for t in a.tangents]
        assert mats == [(((1, -2), (2, 1)), 5), (((2, 1), (-1, 2)), 5)]
        assert all(det_exact(M) == h for M, h in mats)
        bad = two_var_tangents(1, F(1, 2), 0)
        assert not bad.rational
        for t in bad.tangents:
            with pytest.raises(NoIntegerTransform):
                two_var_transform(t)


def test_5_congruence_suite():
    with criterion(5, "congruence invariant on 200 fixtures", 30):
        rng = random.Random(20261016)
        for i in range(200):
            fx = random_fixture(rng, 2 + i % 2)
            r = diagonalize(fx.form)
            assert r.ok, r.failure_reason
            assert sorted(r.eigenvalues) == sorted(fx.eigenvalues)
            T = r.transform
            expected = diag([k * t for k, t in zip(T.k_squared, r.eigenvalues)])
            assert matmul(matmul(transpose(T.C), fx.form.A), T.C) == expected
            assert T.det ** 2 == math.prod(T.k_squared)


def test_6_counting_bound():
    with criterion(6, "box counts of the diagonal cone", 120):
        f = parse_form(EQ_CONE)
        report = count_ladder(f, [50, 100, 200, 400, 800], budget=10 ** 8)
        for N, count in report.ladder:
            assert count <= fermat_cone_bound(N) + 8 * N, (N, count)
        assert report.growth_class in ("Constant", "Linear", "LinearLog")


def _random_form(rng, n):
    while True:
        c = lambda: rng.randint(-9, 9)
        cross = {(i, j): c() for i in range(n) for j in range(i + 1, n)}
        f = QuadraticForm.from_coefficients(n, [c() for _ in range(n)], cross,
                                            [c() for _ in range(n)], c())
        if any(x for row in f.A for x in row) or any(f.L) or f.a0:
            return f


def _transport_check(f, r, N):
    T = r.transform
    image = {tuple(int(c) for c in map_new_to_old(T, y))
             for y in enumerate_solutions(r.diagonal_form.as_form(), N)}
    radius = max(sum(abs(int(c)) for c in row) for row in T.C) * N + max(abs(int(c)) for c in T.center)
    on_lattice = set()
    for x in enumerate_solutions(f, radius):
        y, integral = map_old_to_new(T, x)
        if integral and all(abs(c) <= N for c in y):
            on_lattice.add(x)
    return image == on_lattice


def test_7_universal_guards():
    with criterion(7, "bound, round-trip and transport guards", 120):
        rng = random.Random(7)
        for _ in range(500):
            f = _random_form(rng, rng.randint(1, 3))
            N = rng.randint(0, 30)
            assert upper_bound_check(f.n, N, len(enumerate_solutions(f, N))), print_form(f)
        for _ in range(100):
            f = _random_form(rng, rng.randint(1, 4))
            assert parse_form(print_form(f), n=f.n) == f
        fixtures = [(parse_form(EQ_CENTRAL), WORKED_EIGVECS)]
        fixtures += [(random_fixture(rng, 2).form, None) for _ in range(6)]
        fixtures += [(random_fixture(rng, 3, size=1).form, None) for _ in range(2)]
        for f, order in fixtures:
            r = diagonalize(f, align_to=order)
            assert r.ok
            assert _transport_check(f, r, 20), print_form(f)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
