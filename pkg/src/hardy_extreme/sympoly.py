"""N-symmetric polynomials.

A polynomial p of degree <= 2N is N-symmetric when conj(z)**N p(z) is real on
the circle, i.e. its coefficients satisfy c[N-k] == conj(c[N+k]).  Such p are
parameterized by a real vector (alpha_0..alpha_N, beta_1..beta_N):

    c[N]   = 2 alpha_0
    c[N+l] = alpha_l + i beta_l
    c[N-l] = alpha_l - i beta_l        (l = 1..N)

This vector order is also the column order of the extremality matrix.
"""
from dataclasses import dataclass

import numpy as np

from .circle import AnalyticPolynomial, CircleGrid
from .errors import SymmetryError
from .factorization import blaschke_eval


@dataclass(frozen=True, eq=False)
class SymmetricPolynomial:
    N: int
    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        alpha = np.asarray(self.alpha, dtype=float).ravel()
        beta = np.asarray(self.beta, dtype=float).ravel()
        if self.N < 0 or alpha.shape != (self.N + 1,) or beta.shape != (self.N,):
            raise ValueError(
                f"need alpha of length {self.N + 1} and beta of length {self.N}, "
                f"got {alpha.shape} and {beta.shape}"
            )
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_vector(cls, N, v):
        v = np.asarray(v, dtype=float).ravel()
        if v.shape != (2 * N + 1,):
            raise ValueError(f"coefficient vector must have length {2 * N + 1}")
        return cls(N, v[: N + 1], v[N + 1 :])

    @property
    def vector(self):
        return np.concatenate([self.alpha, self.beta])

    def complex_coeffs(self):
        """Dense ascending coefficients of length 2N+1 (no trimming)."""
        N = self.N
        c = np.zeros(2 * N + 1, dtype=complex)
        c[N] = 2 * self.alpha[0]
        if N:
            w = self.alpha[1:] + 1j * self.beta
            c[N + 1 :] = w
            c[:N] = np.conj(w)[::-1]
        return c

    def to_analytic(self):
        return to_analytic(self)

    def __call__(self, z):
        return self.to_analytic()(z)


def to_analytic(p):
    return AnalyticPolynomial(p.complex_coeffs())


def from_analytic(q, N, *, tol=1e-10):
    """Inverse of to_analytic; checks the degree and the symmetry identity."""
    if q.degree > 2 * N:
        raise SymmetryError(f"degree {q.degree} exceeds 2N = {2 * N}")
    c = q.padded(2 * N + 1)
    scale = max(1.0, float(np.max(np.abs(c)))) if len(c) else 1.0
    defect = np.max(np.abs(c - np.conj(c[::-1]))) if len(c) else 0.0
    if defect > tol * scale:
        raise SymmetryError(f"coefficients violate c[N-k] = conj(c[N+k]) by {defect:.3e}")
    # average the mirrored halves so rounding noise cancels
    upper = 0.5 * (c[N + 1 :] + np.conj(c[:N][::-1]))
    alpha = np.concatenate([[0.5 * c[N].real], upper.real])
    return SymmetricPolynomial(N, alpha, upper.imag)


def p0_polynomial(B):
    """The symmetric polynomial prod_j (z - a_j)(1 - conj(a_j) z).

    On the circle conj(z)**m p0(z) = prod_j |z - a_j|**2 >= 0, and
    p0 * prod_j (1 - conj(a_j) z)**-2 is the Blaschke product without its
    unimodular constant.  The constant is left out because lambda * p0 is
    only symmetric when lambda is real; see `hardy_extreme.witness` for where
    it comes back in.
    """
    q = B.numerator() * B.denominator()
    return from_analytic(q, B.degree, tol=1e-8)


def phi_values(zeros, z):
    """prod_j (1 - conj(a_j) z)**-2 at the points z."""
    z = np.asarray(z, dtype=complex)
    out = np.ones_like(z)
    for a in zeros:
        out = out / (1 - np.conj(a) * z) ** 2
    return out


def real_ratio_check(p, B, grid=None):
    """Largest imaginary part of p*Phi/B over the grid, relative to max |p*Phi/B|.

    Only the zeros of B matter; its unimodular constant is ignored.
    """
    if p.N != B.degree:
        raise ValueError(f"p is {p.N}-symmetric but B has degree {B.degree}")
    z = (grid or CircleGrid(256)).nodes
    ratio = p(z) * phi_values(B.zeros, z) / blaschke_eval(B.without_constant(), z)
    size = max(1.0, float(np.max(np.abs(ratio))))
    return float(np.max(np.abs(ratio.imag)) / size)
