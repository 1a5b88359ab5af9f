"""Exact reduction of integer quadratic Diophantine equations to diagonal form."""
from .exactmath import (DegenerateBasis, DimensionError, DomainError, SingularMatrix, ZeroVector,
                        det_exact, gram_schmidt_exact, integer_sqrt_test, nullspace_basis,
                        primitive_scale, solve_linear)
from .model import ParseError, QuadraticForm, UnsupportedDegree, eval_form, parse_form, print_form
from .center import CenterResult, NotACenter, classify_center, translate_to_center
from .spectral import (CharPoly, Spectrum, SpectralMismatch, char_poly, integer_eigenvalues,
                       integer_orthogonal_eigenbasis, integer_spectrum)
from .transform import (AlreadyDiagonal, DegenerateTransform, DiagonalForm,
                        GeneralizedOrthogonalTransform, InternalInconsistency, NoIntegerTransform,
                        TwoVarAnalysis, build_got, diagonal_form, map_new_to_old, map_old_to_new,
                        pushforward_form, pythagorean_family, two_var_tangents, two_var_transform)
from .pipeline import PipelineReport, diagonalize
from .lattice import (BudgetExceeded, DegeneratePair, GrowthReport, NoSolutionsInBox, SolutionSet,
                      classify_growth, count_ladder, density_ratio, distance_ratio,
                      enumerate_solutions, fermat_cone_bound, fermat_cone_solutions,
                      upper_bound_check)

__all__ = [
    "DegenerateBasis", "DimensionError", "DomainError", "SingularMatrix", "ZeroVector",
    "det_exact", "gram_schmidt_exact", "integer_sqrt_test", "nullspace_basis", "primitive_scale",
    "solve_linear", "ParseError", "QuadraticForm", "UnsupportedDegree", "eval_form", "parse_form",
    "print_form", "CenterResult", "NotACenter", "classify_center", "translate_to_center",
    "CharPoly", "Spectrum", "SpectralMismatch", "char_poly", "integer_eigenvalues",
    "integer_orthogonal_eigenbasis", "integer_spectrum", "AlreadyDiagonal", "DegenerateTransform",
    "DiagonalForm", "GeneralizedOrthogonalTransform", "InternalInconsistency",
    "NoIntegerTransform", "TwoVarAnalysis", "build_got", "diagonal_form", "map_new_to_old",
    "map_old_to_new", "pushforward_form", "pythagorean_family", "two_var_tangents",
    "two_var_transform", "PipelineReport", "diagonalize", "BudgetExceeded", "DegeneratePair",
    "GrowthReport", "NoSolutionsInBox", "SolutionSet", "classify_growth", "count_ladder",
    "density_ratio", "distance_ratio", "enumerate_solutions", "fermat_cone_bound",
    "fermat_cone_solutions", "upper_bound_check",
]

__version__ = "0.1.0"
