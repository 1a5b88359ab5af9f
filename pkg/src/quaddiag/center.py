"""Center detection and integer translation of the origin."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .exactmath import (Vector, det_exact, is_integral, mat_scale, matvec,
                        solve_linear, vec)
from .model import QuadraticForm, eval_form


class NotACenter(ValueError):
    pass


@dataclass(frozen=True)
class CenterResult:
    central: bool
    center: Optional[Vector] = None
    integer_center: bool = False
    translated: Optional[QuadraticForm] = None

    @property
    def kind(self) -> str:
        return "central" if self.central else "non-central"


def classify_center(f: QuadraticForm) -> CenterResult:
    """Central iff ``det(A) != 0``; the center solves ``2 A c = -L``."""
    if det_exact(f.A) == 0:
        return CenterResult(central=False)
    c = solve_linear(mat_scale(f.A, 2), [-x for x in f.L])
    if not is_integral(c):
        return CenterResult(central=True, center=c, integer_center=False)
    return CenterResult(central=True, center=c, integer_center=True,
                        translated=translate_to_center(f, c))


def translate_to_center(f: QuadraticForm, center: Sequence) -> QuadraticForm:
    """Substitute ``x = x' + center``; the linear part must vanish."""
    center = vec(center)
    if not is_integral(center):
        raise NotACenter("center must have integer coordinates")
    grad = matvec(mat_scale(f.A, 2), center)
    if any(g + l != 0 for g, l in zip(grad, f.L)):
        raise NotACenter(f"{tuple(map(str, center))} does not cancel the linear part")
    return QuadraticForm(f.A, [0] * f.n, eval_form(f, center))
