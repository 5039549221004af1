"""Midpoint decompositions certifying that f is not extreme.

Given a kernel element p not parallel to p0, the function

    h = p * Phi0 * conj(B)        (B = Blaschke product without its constant)

is real on the circle and nonconstant, and f*h = lambda * F0 * p where
lambda is the unimodular constant of the inner factor.  With
c = integral of |f| h and eps = 1 / (2 max|h - c|), the perturbation
g = eps * f * (h - c) satisfies |f +- g| = |f| (1 +- eps (h - c)), so both
f + g and f - g have unit norm, and g vanishes at every hole because p
solves the constraint system.  The check below re-evaluates all of this by
quadrature, without looking at the rank of the matrix.
"""
from dataclasses import dataclass, replace

import numpy as np

from .circle import (
    CircleGrid,
    RationalAnalytic,
    circle_mean,
    fourier_coefficient_quadrature,
    l1_norm,
    sample,
    start_size,
)
from .config import DEFAULT
from .errors import NoWitnessError
from .sympoly import SymmetricPolynomial, p0_polynomial, phi_values


@dataclass(frozen=True, eq=False)
class Witness:
    g: RationalAnalytic
    epsilon: float
    p: SymmetricPolynomial
    centering_constant: float
    h_inf_norm: float
    h_std: float

    def scaled(self, factor):
        """Same direction with epsilon multiplied by `factor` (for negative controls)."""
        return replace(self, g=self.g * factor, epsilon=self.epsilon * factor)


@dataclass(frozen=True)
class DecompositionCheck:
    norm_plus: float
    norm_minus: float
    residuals_plus: tuple
    residuals_minus: tuple
    g_sup: float
    tol: float
    passed: bool

    @property
    def spectral_residuals(self):
        return tuple(max(a, b) for a, b in zip(self.residuals_plus, self.residuals_minus))


def pick_direction(kernel, v0):
    """Unit kernel vector orthogonal to v0, or None if the kernel is span(v0).

    Takes the dominant direction of the kernel basis projected onto the
    complement of v0; the sign makes the largest-magnitude entry positive.
    """
    v0 = np.asarray(v0, dtype=float) / np.linalg.norm(v0)
    V = kernel.vectors
    P = V - np.outer(V @ v0, v0)
    if P.shape[0] == 0:
        return None
    _, s, vt = np.linalg.svd(P, full_matrices=False)
    if s[0] < 1e-8:
        return None
    u = vt[0]
    u = u - (u @ v0) * v0
    u /= np.linalg.norm(u)
    return u * np.sign(u[np.argmax(np.abs(u))])


def _h_values(p, zeros, z):
    B = np.ones_like(z)
    for a in zeros:
        B = B * (z - a) / (1 - np.conj(a) * z)
    return p(z) * phi_values(zeros, z) * np.conj(B)


def construct_witness(f, factorization, K, kernel, *, config=DEFAULT, sup_grid=2**14):
    """Build a witness for a unit-norm f from a kernel of dimension >= 2.

    `f` must be normalized to unit L1 norm and `factorization` must be its
    canonical factorization (outer factor scaled accordingly).
    """
    inner, outer = factorization.inner, factorization.outer
    zeros = inner.zeros
    m = len(zeros)
    if kernel.dim < 2:
        raise NoWitnessError(f"kernel has dimension {kernel.dim}; f is extreme")
    v0 = p0_polynomial(inner).vector
    u = pick_direction(kernel, v0)
    if u is None:
        raise NoWitnessError("kernel is numerically parallel to p0")
    p = SymmetricPolynomial.from_vector(m, u)

    n_f = start_size(f.degree)
    absf = lambda g: np.abs(sample(f, g))  # noqa: E731
    c, _ = circle_mean(
        lambda g: absf(g) * _h_values(p, zeros, g.nodes).real,
        tol=config.quad_tol,
        n_start=max(n_f, start_size(3 * m)),
        n_max=config.grid_max,
    )
    c = float(np.real(c))

    z = CircleGrid(max(sup_grid, start_size(f.degree + 4 * m))).nodes
    h = _h_values(p, zeros, z)
    h_shift = h.real - c
    sup = float(np.max(np.abs(h_shift)))
    std = float(np.std(h.real) / max(1.0, float(np.max(np.abs(h.real)))))
    if sup == 0 or std < 1e-8:
        raise NoWitnessError("multiplier is numerically constant")
    eps = 1.0 / (2.0 * sup)

    # f*h = lambda * F * p * Phi0 on the circle; put everything over prod (1 - conj(a) z)^2
    lam = inner.unimodular_constant
    den = inner.denominator() * inner.denominator()
    numerator = (outer * p.to_analytic()) * lam - (f * den) * c
    g = RationalAnalytic(numerator * eps, tuple((a, 2) for a in zeros))
    return Witness(g, eps, p, c, sup, std)


def verify_decomposition(f, witness, K, *, config=DEFAULT, tol=None):
    """Check by quadrature that f +- g are unit-norm members of H^1_K and g != 0."""
    tol = config.dec_tol if tol is None else tol
    plus = witness.g + f
    minus = (-witness.g) + f
    qt = min(config.quad_tol, tol / 100)
    norm_plus = l1_norm(plus, tol=qt, n_max=config.grid_max)
    norm_minus = l1_norm(minus, tol=qt, n_max=config.grid_max)
    res_plus = tuple(
        abs(fourier_coefficient_quadrature(plus, k, tol=qt, n_max=config.grid_max)) for k in K
    )
    res_minus = tuple(
        abs(fourier_coefficient_quadrature(minus, k, tol=qt, n_max=config.grid_max)) for k in K
    )
    g_sup = float(np.max(np.abs(sample(witness.g, CircleGrid(start_size(witness.g.numerator.degree))))))
    passed = (
        abs(norm_plus - 1) < tol
        and abs(norm_minus - 1) < tol
        and all(r < tol for r in res_plus + res_minus)
        and g_sup > tol
    )
    return DecompositionCheck(
        norm_plus, norm_minus, res_plus, res_minus, g_sup, tol, bool(passed)
    )


def witness_for(verdict, *, config=DEFAULT):
    """Construct and verify a witness for a non-extreme verdict from `classify`."""
    if verdict.is_extreme:
        raise NoWitnessError("f is extreme; no midpoint decomposition exists")
    w = construct_witness(
        verdict.f, verdict.factorization, verdict.holes, verdict.kernel, config=config
    )
    return w, verify_decomposition(verdict.f, w, verdict.holes, config=config)
