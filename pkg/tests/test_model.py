from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from quaddiag import ParseError, QuadraticForm, UnsupportedDegree, eval_form, parse_form, print_form
from quaddiag.exactmath import DimensionError

from conftest import A_CENTRAL, EQ_CENTRAL, THUE


def test_parse_worked_equation():
    f = parse_form(EQ_CENTRAL)
    assert f.A == tuple(tuple(map(F, r)) for r in A_CENTRAL)
    assert f.L == (8, 20, 0)
    assert f.a0 == 16


def test_parse_odd_cross_term_gives_half_entries():
    f = parse_form("x1^2 + x1*x2 = 0")
    assert f.A == ((1, F(1, 2)), (F(1, 2), 0))
    assert f.L == (0, 0) and f.a0 == 0
    assert f.is_integer


@pytest.mark.parametrize("text", ["x1^3 = 0", "x1*x2*x3 = 1", "x1^2*x2 = 0"])
def test_parse_rejects_cubic_terms(text):
    with pytest.raises(UnsupportedDegree):
        parse_form(text)


@pytest.mark.parametrize("text,pos", [("y1^2 = 0", 0), ("x1^2 + = 0", 7), ("x1^2 + x0 = 0", 7),
                                      ("x1 ^ 2 $ 3 = 0", 7), ("x1^2", 4), ("x1* = 0", 4)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_form(text)
    assert info.value.pos == pos


def test_parse_combines_like_terms_and_moves_rhs():
    f = parse_form("2x1^2 + x1*x2 + x2*x1 - 3 = x1^2 + 4*x2 - 1")
    assert f.A == ((1, 1), (1, 0))
    assert f.L == (0, -4)
    assert f.a0 == -2


def test_parse_whitespace_and_optional_star():
    assert parse_form("3x1x2+x1^2=0") == parse_form("3 * x1 * x2 + x1 ^ 2 = 0")


def test_print_examples(cone):
    assert print_form(parse_form(THUE)) == "x1^2 + 2*x1*x2 + x2^2 - 1 = 0"
    assert print_form(QuadraticForm([[0]], [0], 0)) == "0 = 0"
    assert print_form(cone) == "9*x1^2 + 36*x2^2 - 4*x3^2 = 0"
    assert print_form(QuadraticForm([[-1]], [F(1, 2)], 0)) == "-x1^2 + 1/2*x1 = 0"


def test_eval_examples(central, thue):
    assert eval_form(central, (1, -2, -1)) == 0
    assert eval_form(central, (0, 0, 0)) == 16
    assert eval_form(thue, (-2, 1)) == 0
    with pytest.raises(DimensionError):
        eval_form(thue, (1, 2, 3))


coef = st.integers(-9, 9)


@st.composite
def integer_forms(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    squares = draw(st.lists(coef, min_size=n, max_size=n))
    cross = {(i, j): draw(coef) for i in range(n) for j in range(i + 1, n)}
    linear = draw(st.lists(coef, min_size=n, max_size=n))
    return QuadraticForm.from_coefficients(n, squares, cross, linear, draw(coef))


@given(integer_forms())
@settings(max_examples=100)
def test_parse_print_round_trip(f):
    g = parse_form(print_form(f), n=f.n)
    assert g == f
    assert g.A == tuple(zip(*g.A))


def _term_by_term(f, x):
    total = f.a0
    for i in range(f.n):
        total += f.A[i][i] * x[i] * x[i] + f.L[i] * x[i]
        for j in range(i + 1, f.n):
            total += 2 * f.A[i][j] * x[i] * x[j]
    return total


@given(integer_forms(), st.lists(st.integers(-50, 50), min_size=4, max_size=4))
def test_eval_matches_term_by_term(f, x):
    x = x[:f.n]
    assert eval_form(f, x) == _term_by_term(f, x)


def test_form_rejects_asymmetric():
    with pytest.raises(ValueError):
        QuadraticForm([[1, 2], [0, 1]], [0, 0], 0)
