"""Counting solutions before and after a non-unimodular change of variables.

x1^2 + 2*x1*x2 + x2^2 - 1 = 0 factors as (x1 + x2)^2 = 1, so its integer
solutions sit on two lines.  Rotating by 45 degrees and stretching by sqrt(2)
(the integer matrix [[1,-1],[1,1]], det 2) straightens those lines onto
y2 = +-1, but only half of the new lattice points come from old ones.
"""
from quaddiag import enumerate_solutions, parse_form, print_form, pushforward_form
from quaddiag.transform import GeneralizedOrthogonalTransform
from quaddiag.lattice import density_ratio

f = parse_form("x1^2 + 2*x1*x2 + x2^2 - 1 = 0")
old = enumerate_solutions(f, 2)
print(f"{print_form(f)}: {len(old)} solutions in [-2, 2]^2")
print("  ", list(old))

M = [[1, -1], [1, 1]]
g, integral = pushforward_form(f, M)
new = enumerate_solutions(g, 2)
print(f"after y = Mx: {print_form(g)} (integer coefficients: {integral})")
print(f"  {len(new)} solutions in the same box")

images = sorted((a - b, a + b) for a, b in old)
inside = [p for p in images if max(map(abs, p)) <= 2]
print(f"images of the old solutions: {images}")
print(f"  {len(inside)} of them stay inside the box")

T = GeneralizedOrthogonalTransform.from_pushforward(M)
print(f"density ratio: {density_ratio(f, T, 2)}  (1/|det M| = 1/2)")
