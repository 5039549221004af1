"""Analytic polynomials and rational analytic functions on the unit circle.

Polynomials are stored by ascending coefficients (index = power of z).  Circle
integrals use the composite trapezoid rule on equispaced nodes, evaluated with
an FFT, with grid doubling until two successive values agree.
"""
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import PoleError, QuadratureError, RootFindingError, ZeroPolynomialError


def _as_coeffs(coeffs):
    c = np.array(coeffs, dtype=complex).ravel()
    nz = np.flatnonzero(c)
    c = c[: nz[-1] + 1] if nz.size else c[:0]
    c.setflags(write=False)
    return c


@dataclass(frozen=True, eq=False)
class AnalyticPolynomial:
    """p(z) = sum_k coeffs[k] z**k; trailing zeros are trimmed."""

    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        c = np.array([complex(leading)])
        for r in roots:
            c = np.convolve(c, [-complex(r), 1.0])
        return cls(c)

    @property
    def degree(self):
        # the zero polynomial gets degree -1
        return len(self.coeffs) - 1

    def is_zero(self):
        return len(self.coeffs) == 0

    @property
    def spectrum(self):
        return [int(k) for k in np.flatnonzero(self.coeffs)]

    def __call__(self, z):
        return evaluate(self, z)

    def __mul__(self, other):
        if isinstance(other, AnalyticPolynomial):
            if self.is_zero() or other.is_zero():
                return AnalyticPolynomial([])
            return AnalyticPolynomial(np.convolve(self.coeffs, other.coeffs))
        return AnalyticPolynomial(self.coeffs * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return AnalyticPolynomial(self.coeffs / complex(scalar))

    def __neg__(self):
        return AnalyticPolynomial(-self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=complex)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] += other.coeffs
        return AnalyticPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def padded(self, length):
        out = np.zeros(length, dtype=complex)
        n = min(length, len(self.coeffs))
        out[:n] = self.coeffs[:n]
        return out

    def __repr__(self):
        return f"AnalyticPolynomial({np.array2string(self.coeffs, precision=6)})"


@dataclass(frozen=True, eq=False)
class RationalAnalytic:
    """numerator(z) / prod_j (1 - conj(a_j) z)**d_j with every |a_j| < 1.

    ``factors`` holds the (a_j, d_j) pairs; the actual poles sit at 1/conj(a_j),
    outside the closed disk (a_j = 0 contributes no pole).
    """

    numerator: AnalyticPolynomial
    factors: tuple = ()

    def __post_init__(self):
        if not isinstance(self.numerator, AnalyticPolynomial):
            object.__setattr__(self, "numerator", AnalyticPolynomial(self.numerator))
        clean = []
        for a, d in self.factors:
            a, d = complex(a), int(d)
            if abs(a) >= 1:
                raise ValueError(f"pole factor point {a} must lie in the open unit disk")
            if d < 0:
                raise ValueError("pole multiplicity must be nonnegative")
            if d:
                clean.append((a, d))
        object.__setattr__(self, "factors", tuple(clean))

    @property
    def poles(self):
        return [(1 / np.conj(a), d) for a, d in self.factors if a != 0]

    def denominator(self):
        c = np.array([1.0 + 0j])
        for a, d in self.factors:
            for _ in range(d):
                c = np.convolve(c, [1.0, -np.conj(a)])
        return AnalyticPolynomial(c)

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other):
        if isinstance(other, AnalyticPolynomial):
            return RationalAnalytic(self.numerator + other * self.denominator(), self.factors)
        if isinstance(other, RationalAnalytic) and _same_factors(self, other):
            return RationalAnalytic(self.numerator + other.numerator, self.factors)
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, scalar):
        return RationalAnalytic(self.numerator * complex(scalar), self.factors)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other


def _same_factors(r, s):
    return sorted(r.factors, key=repr) == sorted(s.factors, key=repr)


@dataclass(frozen=True)
class CircleGrid:
    """n equispaced nodes exp(2 pi i (t + shift) / n) on the unit circle."""

    n: int
    shift: float = 0.0

    def __post_init__(self):
        n = self.n
        if int(n) != n or n < 16 or n & (n - 1):
            raise ValueError(f"grid size must be a power of two >= 16, got {n}")

    @property
    def nodes(self):
        return np.exp(2j * np.pi * (np.arange(self.n) + self.shift) / self.n)


def evaluate(p, z):
    """Evaluate a polynomial or rational analytic function at z (scalar or array)."""
    if isinstance(p, RationalAnalytic):
        den = evaluate(p.denominator(), z)
        if np.any(den == 0):
            raise PoleError("evaluation point is a pole")
        return evaluate(p.numerator, z) / den
    z = np.asarray(z, dtype=complex)
    out = np.zeros_like(z)
    for c in p.coeffs[::-1]:
        out = out * z + c
    return out[()] if out.ndim == 0 else out


def fourier_coefficient(p, k):
    """Fourier coefficient of an analytic polynomial: coeffs[k], or 0 off the support."""
    if 0 <= k <= p.degree:
        return complex(p.coeffs[k])
    return 0j


def sample_polynomial(p, grid):
    """Values of p at the grid nodes via one FFT (coefficients folded mod n)."""
    n = grid.n
    c = np.zeros(n, dtype=complex)
    if p.is_zero():
        return c
    coeffs = p.coeffs
    if grid.shift:
        coeffs = coeffs * np.exp(2j * np.pi * grid.shift * np.arange(len(coeffs)) / n)
    np.add.at(c, np.arange(len(coeffs)) % n, coeffs)
    return n * np.fft.ifft(c)


def sample(p, grid):
    if isinstance(p, RationalAnalytic):
        den = sample_polynomial(p.denominator(), grid)
        if np.any(den == 0):
            raise PoleError("pole on the sampling grid")
        return sample_polynomial(p.numerator, grid) / den
    return sample_polynomial(p, grid)


def _complexity(p):
    if isinstance(p, RationalAnalytic):
        return p.numerator.degree + sum(d for _, d in p.factors)
    return p.degree


def start_size(degree):
    """Smallest power-of-two grid (>= 16) that resolves a degree-`degree` trig polynomial four times over."""
    n = 16
    while n < 4 * (max(degree, 0) + 1):
        n *= 2
    return n


def circle_mean(values, *, tol=1e-10, n_start=16, n_max=2**20, shift=0.0):
    """Adaptive trapezoid mean of a function on the circle.

    `values(grid)` returns samples at the nodes of `grid`.  The grid doubles
    until two successive means differ by less than tol * max(1, |mean|).
    Returns (mean, n).
    """
    n = n_start
    prev = np.mean(values(CircleGrid(n, shift)))
    while n < n_max:
        n *= 2
        cur = np.mean(values(CircleGrid(n, shift)))
        if abs(cur - prev) < tol * max(1.0, abs(cur)):
            return cur, n
        prev = cur
    raise QuadratureError(f"circle quadrature did not converge to {tol:g} with {n_max} nodes")


def l1_norm(p, grid=None, *, tol=1e-10, n_max=2**20):
    """Normalized L1 norm on the circle.

    With an explicit grid this is the plain trapezoid value on that grid;
    otherwise the adaptive doubling driver is used.
    """
    if grid is not None:
        return float(np.mean(np.abs(sample(p, grid))))
    value, _ = circle_mean(
        lambda g: np.abs(sample(p, g)),
        tol=tol,
        n_start=start_size(_complexity(p)),
        n_max=n_max,
    )
    return float(value)


def fourier_coefficient_quadrature(p, k, *, tol=1e-12, n_max=2**20):
    """Fourier coefficient at k by trapezoid projection (works for rational input)."""
    n0 = start_size(max(_complexity(p), abs(k)))

    def vals(g):
        return sample(p, g) * g.nodes ** (-k)

    value, _ = circle_mean(vals, tol=tol, n_start=n0, n_max=n_max)
    return complex(value)


def rational_taylor_coefficients(r, kmax):
    """Taylor coefficients of r at 0 for indices 0..kmax.

    Each factor (1 - conj(a) z)**(-d) expands as sum_k C(k+d-1, d-1) conj(a)**k z**k.
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    out = r.numerator.padded(kmax + 1)
    k = np.arange(kmax + 1)
    for a, d in r.factors:
        ac = np.conj(a)
        powers = ac ** k
        series = np.array([comb(int(j) + d - 1, d - 1) for j in k], dtype=float) * powers
        out = np.convolve(out, series)[: kmax + 1]
    return out


def _newton_polish(c_desc, dc_desc, z, iters=8):
    fz = np.polyval(c_desc, z)
    for _ in range(iters):
        d = np.polyval(dc_desc, z)
        if d == 0 or fz == 0:
            break
        z_new = z - fz / d
        f_new = np.polyval(c_desc, z_new)
        if abs(f_new) >= abs(fz):
            break
        z, fz = z_new, f_new
    return z


def roots(p, *, tol=1e-10):
    """All roots with multiplicity: companion eigenvalues, then Newton polishing.

    Raises RootFindingError when a polished root misses the residual bound
    |p(r)| <= tol * max|coeffs| * (1 + |r|)**degree.
    """
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no well-defined roots")
    if p.degree == 0:
        return np.zeros(0, dtype=complex)
    c_desc = p.coeffs[::-1]
    dc_desc = np.polyder(c_desc)
    found = np.roots(c_desc).astype(complex)
    polished = np.array([_newton_polish(c_desc, dc_desc, z) for z in found], dtype=complex)
    scale = np.max(np.abs(p.coeffs))
    for r in polished:
        bound = tol * scale * (1 + abs(r)) ** p.degree
        if abs(np.polyval(c_desc, r)) > bound:
            raise RootFindingError(f"root {r} fails the residual bound {bound:.3e}")
    return polished
