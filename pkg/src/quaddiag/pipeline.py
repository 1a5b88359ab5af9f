"""Center -> spectrum -> transform -> diagonal form, with a stage-tagged failure."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .center import CenterResult, classify_center
from .model import QuadraticForm
from .spectral import Spectrum, integer_spectrum
from .transform import DiagonalForm, GeneralizedOrthogonalTransform, build_got, diagonal_form


@dataclass(frozen=True)
class PipelineReport:
    input_form: QuadraticForm
    center_result: Optional[CenterResult] = None
    eigenvalues: Optional[list] = None
    spectrum: Optional[Spectrum] = None
    transform: Optional[GeneralizedOrthogonalTransform] = None
    diagonal_form: Optional[DiagonalForm] = None
    failure_stage: Optional[str] = None
    failure_reason: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.diagonal_form is not None


def diagonalize(f: QuadraticForm, align_to: Optional[Sequence[Sequence]] = None) -> PipelineReport:
    """Reduce ``f`` to integer diagonal form.

    ``align_to`` optionally fixes the column order and signs of ``C`` (see
    :meth:`Spectrum.aligned_to`); by default columns follow descending
    eigenvalues.
    """
    cr = classify_center(f)
    if not cr.central:
        return PipelineReport(f, cr, failure_stage="center",
                              failure_reason="non-central form (det A = 0)")
    if not cr.integer_center:
        return PipelineReport(f, cr, failure_stage="center",
                              failure_reason="center has non-integer coordinates")
    spectrum = integer_spectrum(cr.translated.A)
    if spectrum is None:
        return PipelineReport(f, cr, failure_stage="spectral",
                              failure_reason="non-integer eigenvalues")
    if align_to is not None:
        spectrum = spectrum.aligned_to(align_to)
    T = build_got(spectrum, cr.center)
    D = diagonal_form(cr.translated, T, spectrum)
    return PipelineReport(f, cr, spectrum.eigenvalues, spectrum, T, D)
