"""Reduce a three-variable central equation to diagonal form and move solutions back.

The center is found from the gradient, the quadratic part is diagonalized
with integer eigenvectors, and the resulting diagonal cone is solved by a
Euclid-style parametrization.  Each cone solution maps to an integer
solution of the original equation.
"""
from quaddiag import diagonalize, eval_form, fermat_cone_solutions, map_new_to_old, parse_form
from quaddiag.cli import report_to_text

f = parse_form("x1^2 + 5*x2^2 + x3^2 + 2*x1*x2 + 6*x1*x3 + 2*x2*x3 + 8*x1 + 20*x2 + 16 = 0")

# fix the column order so C matches a hand computation
report = diagonalize(f, align_to=[(1, -1, 1), (1, 2, 1), (-1, 0, 1)])
print(report_to_text(report))
print()

T = report.transform
for new in fermat_cone_solutions(3, 2, 6):
    old = map_new_to_old(T, new)
    print(f"{new} -> {tuple(int(c) for c in old)}  F = {eval_form(f, old)}")
