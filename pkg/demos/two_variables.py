"""When does a two-variable form admit an integer rotation-and-stretch?

The angle that kills the cross term has tangent
((a22 - a11) +- sqrt((a22 - a11)^2 + 4*a12^2)) / (2*a12).  It is rational
exactly when (a22 - a11, 2*a12, root) is a Pythagorean triple.
"""
from fractions import Fraction

from quaddiag import NoIntegerTransform, pythagorean_family, two_var_tangents, two_var_transform

for coeffs in [(1, 2, 4), (1, Fraction(1, 2), 0), (3, 6, 8)]:
    analysis = two_var_tangents(*coeffs)
    print(f"a11, a12, a22 = {tuple(str(c) for c in coeffs)}")
    for t in analysis.tangents:
        try:
            M, h = two_var_transform(t)
            print(f"  tan = {t}: M = {[list(map(int, r)) for r in M]}, homothety^2 = {h}")
        except NoIntegerTransform:
            print(f"  tan = {t}: irrational, no integer transform")

print("\nforms with a rational tangent, from (u, v, l):")
for u, v in [(2, 1), (3, 2), (4, 1), (4, 3)]:
    diff, a12, hyp = pythagorean_family(u, v, 1)
    print(f"  u={u} v={v}: a11=1 a12={a12} a22={1 + diff}  ({diff}^2 + {2 * a12}^2 = {hyp}^2)")
