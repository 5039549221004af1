"""Extreme points of the unit ball of H^1_K for polynomial data."""

__version__ = "0.1.0"

from .circle import (  # noqa: E402
    AnalyticPolynomial,
    CircleGrid,
    RationalAnalytic,
    evaluate,
    fourier_coefficient,
    l1_norm,
    rational_taylor_coefficients,
    roots,
)
from .config import Config  # noqa: E402
from .extremality import (  # noqa: E402
    ExtremalityVerdict,
    classify,
    direct_constraint_matrix,
    rank_and_kernel,
)
from .factorization import (  # noqa: E402
    BlaschkeProduct,
    CanonicalFactorization,
    blaschke_eval,
    canonical_factorize,
    is_outer,
)
from .spectral_matrix import (  # noqa: E402
    SpectralHoleSet,
    assemble_matrix,
    constraint_residual,
    f0_coefficients,
)
from .sympoly import (  # noqa: E402
    SymmetricPolynomial,
    from_analytic,
    p0_polynomial,
    real_ratio_check,
    to_analytic,
)
from .witness import construct_witness, verify_decomposition, witness_for  # noqa: E402

__all__ = [
    "AnalyticPolynomial",
    "BlaschkeProduct",
    "CanonicalFactorization",
    "CircleGrid",
    "Config",
    "ExtremalityVerdict",
    "RationalAnalytic",
    "SpectralHoleSet",
    "SymmetricPolynomial",
    "assemble_matrix",
    "blaschke_eval",
    "canonical_factorize",
    "classify",
    "constraint_residual",
    "construct_witness",
    "direct_constraint_matrix",
    "evaluate",
    "f0_coefficients",
    "fourier_coefficient",
    "from_analytic",
    "is_outer",
    "l1_norm",
    "p0_polynomial",
    "rank_and_kernel",
    "rational_taylor_coefficients",
    "real_ratio_check",
    "roots",
    "to_analytic",
    "verify_decomposition",
    "witness_for",
]
