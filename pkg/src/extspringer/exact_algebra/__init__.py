"""Exact rational arithmetic: linear algebra, polynomials, truncated series."""

from .linalg import (
    Subspace,
    annihilator,
    apply,
    det,
    identity,
    image,
    intersection,
    is_isotropic,
    kernel,
    mat_mul,
    mat_pow,
    mat_vec,
    perp,
    preimage,
    rank,
    rref,
    solve,
    transpose,
)
from .poly import (
    MultiPoly,
    elementary_symmetric,
    exact_divide,
    from_univariate,
    monomials,
    poly_matrix_det,
    univariate_coeffs,
)
from .series import TruncatedSeries

__all__ = [
    "MultiPoly", "Subspace", "TruncatedSeries", "annihilator", "apply", "det",
    "elementary_symmetric", "exact_divide", "from_univariate", "identity", "image",
    "intersection", "is_isotropic", "kernel", "mat_mul", "mat_pow", "mat_vec",
    "monomials", "perp", "poly_matrix_det", "preimage", "rank", "rref", "solve",
    "transpose", "univariate_coeffs",
]
