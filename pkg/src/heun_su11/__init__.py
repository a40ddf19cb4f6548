"""Quadratic su(1,1) structure of Heun operators.

Decides when a Heun operator with an elementary singularity at infinity is a
quadratic polynomial in su(1,1) ladder generators, performs the
decomposition, classifies the available representation ladders, and turns
them into solutions: finite sqrt(z)-polynomial spectra on finite ladders and
truncated power series (in z or 1/z) on the one-sided ladders, all verified
by direct substitution into the equation.
"""

from .errors import (
    ComplexExponents,
    ComplexRootsDetected,
    DegenerateSingularity,
    EigensolverNoConvergence,
    FuchsianViolation,
    GridTooLarge,
    HeunSu11Error,
    InconsistentCoefficients,
    NotFactorizable,
    NumericalError,
    OutOfDomain,
    RecurrenceBreakdown,
    SamplePointAtSingularity,
    UnsupportedClass,
    UsageError,
    ValidationError,
)
from .heun_core import (
    CanonicalCoefficients,
    DegreeDecomposition,
    HeunParameters,
    canonical_action,
    canonical_coefficients,
    degree_decomposition,
    degree_decomposition_check,
    indicial_exponents_at_infinity,
    indicial_exponents_at_zero,
    lame_parameters,
    make_parameters,
    parameters_from_coefficients,
)
from .monomials import MonomialSum
from .representations import (
    ExponentGrid,
    RepresentationClass,
    RepresentationDescriptor,
    SubspaceSplit,
    classify,
    finite_dimension,
    split_even_odd,
)
from .series_engine import (
    EvaluatedSeries,
    SeriesSolution,
    convergence_domain,
    evaluate_series,
    recurrence_residual,
    series_solution,
)
from .spectrum import (
    EigenPair,
    SpectralResult,
    SqrtZPolynomial,
    TridiagonalMatrix,
    build_matrix,
    eigen_oracle,
    solve_spectrum,
)
from .su11_algebra import (
    FactorizabilityReport,
    GeneratorParameters,
    MonomialAction,
    Su11Decomposition,
    algebra_identity_check,
    apply_lowering,
    apply_quadratic,
    apply_raising,
    apply_weight,
    check_factorizable,
    decompose,
    decompose_coefficients,
    monomial_action,
    rebuild_coefficients,
    reconstruction_check,
)
from .verifier import (
    ResidualReport,
    chebyshev_points,
    derivative_crosscheck,
    ode_residual,
    residual_for_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalCoefficients",
    "ComplexExponents",
    "ComplexRootsDetected",
    "DegenerateSingularity",
    "DegreeDecomposition",
    "EigenPair",
    "EigensolverNoConvergence",
    "EvaluatedSeries",
    "ExponentGrid",
    "FactorizabilityReport",
    "FuchsianViolation",
    "GeneratorParameters",
    "GridTooLarge",
    "HeunParameters",
    "HeunSu11Error",
    "InconsistentCoefficients",
    "MonomialAction",
    "MonomialSum",
    "NotFactorizable",
    "NumericalError",
    "OutOfDomain",
    "RecurrenceBreakdown",
    "RepresentationClass",
    "RepresentationDescriptor",
    "ResidualReport",
    "SamplePointAtSingularity",
    "SeriesSolution",
    "SpectralResult",
    "SqrtZPolynomial",
    "SubspaceSplit",
    "Su11Decomposition",
    "TridiagonalMatrix",
    "UnsupportedClass",
    "UsageError",
    "ValidationError",
    "algebra_identity_check",
    "apply_lowering",
    "apply_quadratic",
    "apply_raising",
    "apply_weight",
    "build_matrix",
    "canonical_action",
    "canonical_coefficients",
    "chebyshev_points",
    "check_factorizable",
    "classify",
    "convergence_domain",
    "decompose",
    "decompose_coefficients",
    "degree_decomposition",
    "degree_decomposition_check",
    "derivative_crosscheck",
    "eigen_oracle",
    "evaluate_series",
    "finite_dimension",
    "indicial_exponents_at_infinity",
    "indicial_exponents_at_zero",
    "lame_parameters",
    "make_parameters",
    "monomial_action",
    "ode_residual",
    "parameters_from_coefficients",
    "rebuild_coefficients",
    "reconstruction_check",
    "recurrence_residual",
    "residual_for_coefficients",
    "series_solution",
    "solve_spectrum",
    "split_even_odd",
]
