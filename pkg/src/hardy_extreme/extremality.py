"""Extreme-point decision for the unit ball of H^1_K.

A unit-norm f = I*F (I inner, F outer) is extreme iff the Blaschke degree m of
I is at most the number of holes M and the extremality matrix built from F
and the zeros of I has rank 2m.  The kernel of that matrix always contains
the coefficient vector of p0 = prod (z - a_j)(1 - conj(a_j) z).
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import null_space

from .circle import AnalyticPolynomial, l1_norm
from .config import DEFAULT
from .errors import SpectralConstraintError, ZeroPolynomialError
from .factorization import canonical_factorize
from .spectral_matrix import (
    ExtremalityMatrix,
    as_holes,
    assemble_matrix,
    f0_coefficients,
    hole_coefficients,
)
from .sympoly import SymmetricPolynomial, p0_polynomial

WELL_CONDITIONED = "well-conditioned"
NEAR_THRESHOLD = "near-threshold"

REASON_EXTREME = "rank equals 2m"
REASON_DEGREE = "inner degree exceeds hole count"
REASON_RANK = "rank below 2m"


@dataclass(frozen=True, eq=False)
class KernelBasis:
    """Orthonormal real vectors (rows of `vectors`) spanning the kernel in R^(2m+1)."""

    vectors: np.ndarray

    @property
    def dim(self):
        return self.vectors.shape[0]

    def contains(self, v):
        """Relative distance from v to the span."""
        v = np.asarray(v, dtype=float)
        proj = self.vectors.T @ (self.vectors @ v)
        return float(np.linalg.norm(v - proj) / np.linalg.norm(v))


@dataclass(frozen=True, eq=False)
class RankInfo:
    rank: int
    kernel: KernelBasis
    singular_values: np.ndarray
    cut: float
    near_threshold: bool


def _flag(sigma, cut):
    return bool(np.any((sigma > cut / 10) & (sigma < cut * 10))) if cut > 0 else False


def rank_and_kernel(mtx, rank_tol=1e-9, *, floor=0.0):
    """Numerical rank by SVD: sigma_i counts when it exceeds max(rank_tol * sigma_max, floor)."""
    A = mtx.matrix if isinstance(mtx, ExtremalityMatrix) else np.asarray(mtx, dtype=float)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return RankInfo(0, KernelBasis(np.eye(ncols)), np.zeros(0), 0.0, False)
    _, s, vt = np.linalg.svd(A, full_matrices=True)
    cut = max(rank_tol * (s[0] if s.size else 0.0), floor)
    rank = int(np.sum(s > cut))
    return RankInfo(rank, KernelBasis(vt[rank:]), s, cut, _flag(s, cut))


def rank_with_known_kernel(mtx, v0, rank_tol=1e-9, *, floor=0.0):
    """Rank of a matrix whose kernel is known to contain v0.

    The SVD is taken of the matrix restricted to the orthogonal complement
    of v0, so rounding noise along v0 cannot promote it to a nonzero
    singular value.  Singular values reported are those of the restriction.
    """
    A = mtx.matrix
    v0 = np.asarray(v0, dtype=float) / np.linalg.norm(v0)
    Q = null_space(v0[None, :])
    if Q.shape[1] == 0 or A.shape[0] == 0:
        kernel = np.vstack([v0[None, :], Q.T])
        return RankInfo(0, KernelBasis(kernel), np.zeros(0), 0.0, False)
    _, s, vt = np.linalg.svd(A @ Q, full_matrices=True)
    cut = max(rank_tol * (s[0] if s.size else 0.0), floor)
    rank = int(np.sum(s > cut))
    kernel = np.vstack([v0[None, :], vt[rank:] @ Q.T])
    return RankInfo(rank, KernelBasis(kernel), s, cut, _flag(s, cut))


def direct_constraint_matrix(F, zeros, K, table=None):
    """The extremality matrix built column by column from convolutions.

    Column i is (Re g, Im g) for g_j = (F0 p)^(k_j) with p the symmetric
    polynomial whose coefficient vector is the i-th unit vector.  This route
    never touches the block formulas and serves as their check.
    """
    K = as_holes(K)
    zeros = list(zeros)
    m, M = len(zeros), K.M
    out = np.zeros((2 * M, 2 * m + 1))
    if M == 0:
        return ExtremalityMatrix(out, 0, m)
    if table is None:
        table = f0_coefficients(F, zeros, K.holes[-1])
    for i, e in enumerate(np.eye(2 * m + 1)):
        g = hole_coefficients(table, K, SymmetricPolynomial.from_vector(m, e))
        out[:M, i] = g.real
        out[M:, i] = g.imag
    return ExtremalityMatrix(out, M, m)


def kernel_residual(mtx, v):
    """|Mv| / (|M| |v|) with the spectral norm; 0 for an empty or zero matrix."""
    A = mtx.matrix
    if A.size == 0:
        return 0.0
    norm = np.linalg.norm(A, 2)
    if norm == 0:
        return 0.0
    return float(np.linalg.norm(A @ v) / (norm * np.linalg.norm(v)))


@dataclass(frozen=True, eq=False)
class ExtremalityVerdict:
    is_extreme: bool
    m: int
    M: int
    rank: int
    kernel_dim: int
    singular_values: np.ndarray
    condition_flag: str
    normalization_scale: float
    reason: str
    # supporting data for reports and witness construction
    f: AnalyticPolynomial = field(repr=False, default=None)
    holes: tuple = ()
    factorization: object = field(repr=False, default=None)
    matrix: ExtremalityMatrix = field(repr=False, default=None)
    kernel: KernelBasis = field(repr=False, default=None)
    p0: SymmetricPolynomial = field(repr=False, default=None)
    p0_residual: float = 0.0
    table: object = field(repr=False, default=None)


def check_membership(f, K, spec_tol=1e-10):
    """Raise SpectralConstraintError when some |f^(k_j)| exceeds spec_tol * max|f^|."""
    scale = float(np.max(np.abs(f.coeffs)))
    for k in as_holes(K):
        r = abs(f.coeffs[k]) if k <= f.degree else 0.0
        if r > spec_tol * scale:
            raise SpectralConstraintError(k, r, spec_tol * scale)


def classify(f, K, config=DEFAULT):
    if not isinstance(f, AnalyticPolynomial):
        f = AnalyticPolynomial(f)
    if f.is_zero():
        raise ZeroPolynomialError("the zero function is not on the unit sphere")
    K = as_holes(K)
    check_membership(f, K, config.spec_tol)
    fac = canonical_factorize(f, boundary_delta=config.boundary_delta, root_tol=config.root_tol)
    scale = l1_norm(f, tol=config.quad_tol, n_max=config.grid_max)
    f_unit = f / scale
    outer = fac.outer / scale
    fac = type(fac)(fac.inner, outer)

    zeros = fac.inner.zeros
    m, M = len(zeros), K.M
    table = f0_coefficients(outer, zeros, K.holes[-1] if M else 0)
    mtx = assemble_matrix(outer, zeros, K, table)
    p0 = p0_polynomial(fac.inner)
    v0 = p0.vector
    floor = 1e3 * np.finfo(float).eps * float(np.max(np.abs(table.values)))
    info = rank_with_known_kernel(mtx, v0, config.rank_tol, floor=floor)

    if m > M:
        is_extreme, reason = False, REASON_DEGREE
    elif info.rank == 2 * m:
        is_extreme, reason = True, REASON_EXTREME
    else:
        is_extreme, reason = False, REASON_RANK
    flag = NEAR_THRESHOLD if (m <= M and info.near_threshold) else WELL_CONDITIONED

    return ExtremalityVerdict(
        is_extreme=is_extreme,
        m=m,
        M=M,
        rank=info.rank,
        kernel_dim=info.kernel.dim,
        singular_values=info.singular_values,
        condition_flag=flag,
        normalization_scale=float(scale),
        reason=reason,
        f=f_unit,
        holes=K.holes,
        factorization=fac,
        matrix=mtx,
        kernel=info.kernel,
        p0=p0,
        p0_residual=kernel_residual(mtx, v0),
        table=table,
    )
