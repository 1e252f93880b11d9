"""Numerical radius brackets, alpha-norm sandwiches, the operator bound
catalog and (alpha, beta)-normality certificates for dense complex
matrices."""

from .abnormal import ABNormalCertificate, ab_certify, lower_sab, lower_th5, lower_th6
from .alpha_norm import AlphaNormEstimate, alpha_gradient, alpha_norm_estimate, alpha_objective
from .bounds import (
    BOUND_IDS,
    BoundReport,
    BoundValue,
    bound_report,
    bound_th1,
    bound_th2,
    bound_th3_family,
    bound_th4_impr1,
    eqn5_and_classics,
    gamma_delta,
    golden_section,
    lower_general,
    pp0_min,
)
from .ensembles import ENSEMBLES, make_nilpotent_shift, random_matrix, stream_rng
from .errors import (
    BadAlpha,
    BadEnsemble,
    BadExponent,
    DimensionMismatch,
    NoConvergence,
    NotABNormal,
    NotHermitian,
    NotSquare,
    NotUnit,
    NumradError,
    ParseError,
    Timeout,
)
from .fuzzing import FuzzConfig, FuzzSummary, Violation, fuzz, total_violations
from .linalg import (
    HermitianEig,
    KernelComparison,
    adjoint,
    as_matrix,
    cartesian_parts,
    herm_eig,
    kernels_equal,
    polar_moduli,
    psd_power,
    singular_values,
    spectral_norm,
)
from .matio import parse_matrix, render_matrix
from .radius import RadiusBracket, hermitian_section, numerical_radius
from .scalar_checks import ScalarChecks, hoelder_mccarthy_slack, scalar_inequality_checks
from .worked_examples import LOWER_TRIANGULAR_2, SHIFT_3, paper_examples

__all__ = [
    "ABNormalCertificate",
    "AlphaNormEstimate",
    "BOUND_IDS",
    "BoundReport",
    "BoundValue",
    "ENSEMBLES",
    "FuzzConfig",
    "FuzzSummary",
    "HermitianEig",
    "KernelComparison",
    "LOWER_TRIANGULAR_2",
    "NumradError",
    "BadAlpha",
    "BadEnsemble",
    "BadExponent",
    "DimensionMismatch",
    "NoConvergence",
    "NotABNormal",
    "NotHermitian",
    "NotSquare",
    "NotUnit",
    "ParseError",
    "RadiusBracket",
    "ScalarChecks",
    "SHIFT_3",
    "Timeout",
    "Violation",
    "ab_certify",
    "adjoint",
    "alpha_gradient",
    "alpha_norm_estimate",
    "alpha_objective",
    "as_matrix",
    "bound_report",
    "bound_th1",
    "bound_th2",
    "bound_th3_family",
    "bound_th4_impr1",
    "cartesian_parts",
    "eqn5_and_classics",
    "fuzz",
    "gamma_delta",
    "golden_section",
    "herm_eig",
    "hermitian_section",
    "hoelder_mccarthy_slack",
    "kernels_equal",
    "lower_general",
    "lower_sab",
    "lower_th5",
    "lower_th6",
    "make_nilpotent_shift",
    "numerical_radius",
    "paper_examples",
    "parse_matrix",
    "polar_moduli",
    "pp0_min",
    "psd_power",
    "random_matrix",
    "render_matrix",
    "scalar_inequality_checks",
    "singular_values",
    "spectral_norm",
    "stream_rng",
    "total_violations",
]
