"""Inner-outer factorization of analytic polynomials.

For a polynomial f the inner factor is the finite Blaschke product built on the
roots of f inside the disk, and the outer factor is f with each such root
reflected to 1/conj(a).  The unimodular constant rides on the Blaschke factor
so that the outer factor satisfies F(0) > 0.
"""
from dataclasses import dataclass

import numpy as np

from .circle import AnalyticPolynomial, CircleGrid, evaluate, roots, sample, start_size
from .errors import BoundaryZeroError, QuadratureError, ZeroPolynomialError


@dataclass(frozen=True, eq=False)
class BlaschkeProduct:
    zeros: tuple = ()
    unimodular_constant: complex = 1.0 + 0j

    def __post_init__(self):
        zs = tuple(complex(a) for a in self.zeros)
        for a in zs:
            if abs(a) >= 1:
                raise ValueError(f"Blaschke zero {a} is not in the open unit disk")
        lam = complex(self.unimodular_constant)
        if abs(abs(lam) - 1) > 1e-12:
            raise ValueError(f"constant {lam} is not unimodular")
        object.__setattr__(self, "zeros", zs)
        object.__setattr__(self, "unimodular_constant", lam)

    @property
    def degree(self):
        return len(self.zeros)

    def numerator(self):
        """prod_j (z - a_j), without the constant."""
        return AnalyticPolynomial.from_roots(self.zeros)

    def denominator(self):
        """prod_j (1 - conj(a_j) z)."""
        c = np.array([1.0 + 0j])
        for a in self.zeros:
            c = np.convolve(c, [1.0, -np.conj(a)])
        return AnalyticPolynomial(c)

    def without_constant(self):
        return BlaschkeProduct(self.zeros)

    def __call__(self, z):
        return blaschke_eval(self, z)


def blaschke_eval(B, z):
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, B.unimodular_constant, dtype=complex)
    for a in B.zeros:
        out = out * (z - a) / (1 - np.conj(a) * z)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True, eq=False)
class CanonicalFactorization:
    inner: BlaschkeProduct
    outer: AnalyticPolynomial

    def __call__(self, z):
        return blaschke_eval(self.inner, z) * evaluate(self.outer, z)


def _deflate(c, a):
    """Divide the ascending-coefficient polynomial c by (z - a); remainder dropped."""
    n = len(c) - 1
    q = np.zeros(n, dtype=complex)
    acc = c[n]
    for k in range(n - 1, -1, -1):
        q[k] = acc
        acc = c[k] + a * acc
    return q


def split_roots(f, *, boundary_delta=1e-10, root_tol=1e-10):
    """Roots of f split into (inside, outside); band roots raise BoundaryZeroError."""
    inside, outside = [], []
    for r in roots(f, tol=root_tol):
        if abs(abs(r) - 1) < boundary_delta:
            raise BoundaryZeroError(r, boundary_delta)
        (inside if abs(r) < 1 else outside).append(complex(r))
    return inside, outside


def canonical_factorize(f, *, boundary_delta=1e-10, root_tol=1e-10):
    if f.is_zero():
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    inside, _ = split_roots(f, boundary_delta=boundary_delta, root_tol=root_tol)
    # deflate smallest-modulus roots first; forward division is stable for |a| < 1
    inside.sort(key=abs)
    q = f.coeffs.copy()
    for a in inside:
        q = _deflate(q, a)
    outer = AnalyticPolynomial(q)
    for a in inside:
        outer = outer * AnalyticPolynomial([1.0, -np.conj(a)])
    f0 = outer.coeffs[0]
    lam = f0 / abs(f0)
    return CanonicalFactorization(BlaschkeProduct(inside, lam), outer / lam)


def is_outer(F, *, boundary_delta=1e-10, root_tol=1e-10):
    """True iff F has no root strictly inside the disk; roots in the boundary band are allowed."""
    if F.is_zero():
        raise ZeroPolynomialError("the zero function is neither inner nor outer")
    return all(abs(r) >= 1 - boundary_delta for r in roots(F, tol=root_tol))


def log_mean_defect(F, *, tol=1e-7, n_max=2**22):
    """mean(log|F|) over the circle minus log|F(0)|.

    Zero for outer F and log(prod 1/|a_j|) > 0 otherwise (Jensen).  Sampled on
    half-shifted nodes so a boundary root at z = 1 never lands on a node; a
    boundary root makes the rule first-order, so one Richardson step is applied
    to successive doublings.
    """
    if F.is_zero():
        raise ZeroPolynomialError("log|F| is undefined for F = 0")
    f0 = abs(F.coeffs[0])
    if f0 == 0:
        return float("inf")

    def mean_log(n):
        return float(np.mean(np.log(np.abs(sample(F, CircleGrid(n, 0.5))))))

    n = start_size(F.degree)
    coarse, fine = mean_log(n), mean_log(2 * n)
    prev = 2 * fine - coarse
    while 4 * n <= n_max:
        n *= 2
        coarse, fine = fine, mean_log(2 * n)
        cur = 2 * fine - coarse
        if abs(cur - prev) < tol:
            return cur - float(np.log(f0))
        prev = cur
    raise QuadratureError(f"log-mean quadrature did not converge to {tol:g}")


def max_roundtrip_error(fac, f, n=128):
    """Largest |inner*outer - f| on an n-node grid, relative to max|f|."""
    g = CircleGrid(n)
    z = g.nodes
    ref = sample(f, g)
    return float(np.max(np.abs(fac(z) - ref)) / np.max(np.abs(ref)))
