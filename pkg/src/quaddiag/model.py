"""Second-order polynomial equations ``x^T A x + L^T x + a0 = 0``.

The text grammar accepted by :func:`parse_form`::

    equation := poly "=" poly
    poly     := ["-"] term (("+"|"-") term)*
    term     := [coef] ["*"] factor ["*" factor] | coef
    coef     := int ["/" int]
    factor   := var ["^" int] ;  var := "x" digits

Variables are ``x1 .. xn``; the largest index fixes ``n``.  The right-hand side
is moved to the left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath import (DimensionError, Matrix, Vector, dot, fmt, is_integral,
                        is_symmetric, mat, matvec, vec)


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class UnsupportedDegree(ParseError):
    pass


@dataclass(frozen=True)
class QuadraticForm:
    """Exact second-order form.

    ``A`` is symmetric with ``A[i][j]`` equal to half the coefficient of the
    ``xi*xj`` cross term.  ``L`` holds linear coefficients exactly as written.
    """

    A: Matrix
    L: Vector
    a0: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", mat(self.A))
        object.__setattr__(self, "L", vec(self.L))
        object.__setattr__(self, "a0", Fraction(self.a0))
        n = len(self.A)
        if n < 1 or any(len(r) != n for r in self.A) or len(self.L) != n:
            raise DimensionError("A must be n x n and L of length n, n >= 1")
        if not is_symmetric(self.A):
            raise ValueError("A must be symmetric")

    @property
    def n(self) -> int:
        return len(self.A)

    @classmethod
    def from_coefficients(cls, n: int, squares=(), cross=None, linear=(), const=0):
        """Build from written coefficients; ``cross`` maps ``(i, j)`` (0-based) to the xi*xj coefficient."""
        A = [[Fraction(0)] * n for _ in range(n)]
        for i, c in enumerate(squares):
            A[i][i] = Fraction(c)
        for (i, j), c in (cross or {}).items():
            A[i][j] += Fraction(c, 2)
            A[j][i] += Fraction(c, 2)
        L = list(linear) + [0] * (n - len(linear))
        return cls(A, L, const)

    @property
    def is_integer(self) -> bool:
        """All written coefficients integral (off-diagonals of A may be half-integers)."""
        n = self.n
        return (all(is_integral(self.A[i][i]) for i in range(n))
                and all(is_integral(2 * self.A[i][j]) for i in range(n) for j in range(i + 1, n))
                and is_integral(self.L) and is_integral(self.a0))

    @property
    def is_homogeneous(self) -> bool:
        return not any(self.L) and self.a0 == 0

    @property
    def is_diagonal(self) -> bool:
        return all(self.A[i][j] == 0 for i in range(self.n) for j in range(self.n) if i != j)

    def __str__(self):
        return print_form(self)


def eval_form(f: QuadraticForm, x: Sequence) -> Fraction:
    if len(x) != f.n:
        raise DimensionError(f"point has {len(x)} coordinates, form has {f.n} variables")
    x = vec(x)
    return dot(x, matvec(f.A, x)) + dot(f.L, x) + f.a0


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z_]+\d*)|(?P<op>[-+*/^=]))")


def _tokenize(text: str):
    tokens = []
    pos = len(text) - len(text.lstrip())
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
        pos += len(text[pos:]) - len(text[pos:].lstrip())
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        # monomial key: () constant, (i,) linear, (i, j) quadratic with i <= j
        self.terms: dict[tuple, Fraction] = {}
        self.max_index = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, got {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def equation(self):
        self.poly(1)
        self.take("op", "=")
        self.poly(-1)
        self.take("end")

    def poly(self, side: int):
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        self.term(side * sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = 1 if self.take()[1] == "+" else -1
            self.term(side * sign)

    def coefficient(self) -> Fraction:
        c = Fraction(int(self.take("num")[1]))
        if self.peek()[:2] == ("op", "/"):
            self.take()
            tok = self.take("num")
            if int(tok[1]) == 0:
                raise ParseError("division by zero", tok[2])
            c /= int(tok[1])
        return c

    def factor(self) -> list[int]:
        _, name, pos = self.take("var")
        m = re.fullmatch(r"x(\d+)", name)
        if not m or int(m.group(1)) == 0:
            raise ParseError(f"unknown variable {name!r}", pos)
        idx = int(m.group(1)) - 1
        self.max_index = max(self.max_index, idx + 1)
        power = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            power = int(self.take("num")[1])
        return [idx] * power

    def term(self, sign: int):
        start = self.peek()[2]
        coef = Fraction(sign)
        variables: list[int] = []
        seen_atom = False
        while True:
            kind = self.peek()[0]
            if kind == "num":
                coef *= self.coefficient()
            elif kind == "var":
                variables += self.factor()
            elif not seen_atom:
                tok = self.peek()
                raise ParseError(f"expected a term, got {tok[1] or 'end of input'!r}", tok[2])
            else:
                break
            seen_atom = True
            if self.peek()[:2] == ("op", "*"):
                self.take()
                if self.peek()[0] not in ("num", "var"):
                    tok = self.peek()
                    raise ParseError("dangling '*'", tok[2])
        if len(variables) > 2:
            raise UnsupportedDegree(f"term of degree {len(variables)}", start)
        key = tuple(sorted(variables))
        self.terms[key] = self.terms.get(key, Fraction(0)) + coef


def parse_form(text: str, n: Optional[int] = None) -> QuadraticForm:
    """Parse an equation into a :class:`QuadraticForm`.

    ``n`` overrides the variable count when trailing variables have been
    eliminated from the text (it must be at least the largest index seen).
    """
    p = _Parser(text)
    p.equation()
    size = max(p.max_index, 1) if n is None else n
    if size < p.max_index:
        raise ParseError(f"x{p.max_index} exceeds n={size}", 0)
    squares = [Fraction(0)] * size
    cross = {}
    linear = [Fraction(0)] * size
    const = Fraction(0)
    for key, c in p.terms.items():
        if len(key) == 0:
            const += c
        elif len(key) == 1:
            linear[key[0]] += c
        elif key[0] == key[1]:
            squares[key[0]] += c
        else:
            cross[key] = c
    return QuadraticForm.from_coefficients(size, squares, cross, linear, const)


def _monomials(f: QuadraticForm):
    n = f.n
    for i in range(n):
        for j in range(i, n):
            c = f.A[i][i] if i == j else 2 * f.A[i][j]
            yield c, (f"x{i + 1}^2" if i == j else f"x{i + 1}*x{j + 1}")
    for i in range(n):
        yield f.L[i], f"x{i + 1}"
    yield f.a0, ""


def print_form(f: QuadraticForm) -> str:
    parts = []
    for c, mono in _monomials(f):
        if c == 0:
            continue
        mag = fmt(abs(c))
        body = mono if mag == "1" and mono else (f"{mag}*{mono}" if mono else mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return f"{' '.join(parts) or '0'} = 0"
