"""Random instance generators for tests, the acceptance suite and the corpus.

All generators take a numpy Generator so runs are reproducible from a seed.
"""
import numpy as np

from .circle import AnalyticPolynomial, roots


def _disk_point(rng, rmin, rmax):
    r = rng.uniform(rmin, rmax)
    return r * np.exp(2j * np.pi * rng.uniform())


def random_zeros(rng, m, rmax=0.8):
    return [_disk_point(rng, 0.0, rmax) for _ in range(m)]


def random_outer(rng, degree, rmin=1.3, rmax=4.0):
    """Polynomial with all roots in rmin <= |z| <= rmax and F(0) = 1."""
    rts = [_disk_point(rng, rmin, rmax) for _ in range(degree)]
    p = AnalyticPolynomial.from_roots(rts)
    return p / p.coeffs[0]


def random_polynomial(rng, degree, n_inside, band=1e-3):
    """Random polynomial with exactly n_inside roots in the disk, none near the circle."""
    inside = [_disk_point(rng, 0.0, 1 - 10 * band) for _ in range(n_inside)]
    outside = [_disk_point(rng, 1 + 10 * band, 3.0) for _ in range(degree - n_inside)]
    lead = complex(rng.normal(), rng.normal())
    return AnalyticPolynomial.from_roots(inside + outside, leading=lead)


def hole_correction(b, q, holes):
    """Minimal-norm change to q so that (b*q)^(k) = 0 for every hole k.

    b and q are ascending coefficient arrays; the corrected q has length at
    least max(holes) + 1.
    """
    holes = list(holes)
    if not holes:
        return np.asarray(q, dtype=complex)
    n = max(len(q), holes[-1] + 1)
    qq = np.zeros(n, dtype=complex)
    qq[: len(q)] = q
    L = np.zeros((len(holes), n), dtype=complex)
    for j, k in enumerate(holes):
        for i in range(n):
            if 0 <= k - i < len(b):
                L[j, i] = b[k - i]
    delta = np.linalg.lstsq(L, -(L @ qq), rcond=None)[0]
    return qq + delta


def member_with_zeros(rng, zeros, holes, *, degree=4, margin=1.05, max_tries=500):
    """f = prod (z - a_j) * Q in H^1_K with Q outer (all roots beyond `margin`).

    The inner factor of f is then exactly the Blaschke product on `zeros`.
    Rejection-samples Q; raises RuntimeError when no draw qualifies.
    """
    b = AnalyticPolynomial.from_roots(zeros).coeffs
    for _ in range(max_tries):
        q0 = random_outer(rng, degree, rmin=1.5, rmax=5.0).coeffs
        q = AnalyticPolynomial(hole_correction(b, q0, holes))
        if q.degree <= 0 or np.min(np.abs(roots(q))) > margin:
            return AnalyticPolynomial(np.convolve(b, q.coeffs))
    raise RuntimeError("could not draw an outer cofactor satisfying the holes")


def member_with_inner_degree(rng, m, M, *, kmax=20, rmax=0.8, max_tries=2000):
    """(f, zeros, K): f in H^1_K with M holes in 1..kmax and inner degree exactly m.

    Zeros and holes are redrawn on each attempt, since some combinations
    (many low holes, many zeros) admit almost no outer cofactor.
    """
    for _ in range(max_tries):
        zeros = random_zeros(rng, m, rmax)
        K = random_holes(rng, M, kmax)
        try:
            return member_with_zeros(rng, zeros, K, max_tries=5), zeros, K
        except RuntimeError:
            continue
    raise RuntimeError(f"no instance with m={m}, M={M} found")


def random_holes(rng, M, kmax):
    return sorted(int(k) for k in rng.choice(np.arange(1, kmax + 1), size=M, replace=False))


def constrained_triple(rng, m, M, kmax=30, rmax=0.8):
    """(F, zeros, K) with B*F in H^1_K, where B is the Blaschke product on zeros.

    F = prod (1 - conj(a_j) z) * Q is a polynomial but need not be outer;
    useful for matrix-algebra checks where only membership matters.
    """
    zeros = random_zeros(rng, m, rmax)
    K = random_holes(rng, M, kmax)
    b = AnalyticPolynomial.from_roots(zeros).coeffs
    deg = int(rng.integers(1, 8))
    q0 = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
    q = AnalyticPolynomial(hole_correction(b, q0, K))
    F = q
    for a in zeros:
        F = F * AnalyticPolynomial([1.0, -np.conj(a)])
    return F, zeros, K


def single_hole_instance(rng, k, *, equal=False, size=0.85):
    """f = z*F for the hole set {k}, F outer with F^(k-1) = 0.

    F = 1 + small terms with total coefficient mass below `size` < 1, which
    keeps every root of F outside the closed disk.  With equal=True the
    coefficients at k-2 and k get the same modulus (k >= 3).
    """
    if equal and k < 3:
        raise ValueError("equal-modulus construction needs k >= 3")
    deg = k + int(rng.integers(0, 3))
    c = np.zeros(deg + 1, dtype=complex)
    c[0] = 1.0
    c[1:] = rng.normal(size=deg) + 1j * rng.normal(size=deg)
    c[k - 1] = 0
    if equal:
        c[k] = abs(c[k - 2]) * np.exp(2j * np.pi * rng.uniform())
    mass = np.sum(np.abs(c[1:]))
    c[1:] *= rng.uniform(0.2, size) / mass
    F = AnalyticPolynomial(c)
    return AnalyticPolynomial(np.concatenate([[0], c])), F


def single_hole_general(rng, k, max_tries=1000):
    """f = z*F with F outer and F^(k-1) = 0, drawn from random outer roots.

    Subtracting the z^(k-1) term moves the roots; rejection keeps F outer.
    """
    for _ in range(max_tries):
        F = random_outer(rng, k + int(rng.integers(0, 3)), rmin=1.1, rmax=3.0)
        c = F.padded(F.degree + 1)
        c[k - 1] = 0
        F = AnalyticPolynomial(c)
        if np.min(np.abs(roots(F))) > 1.01:
            return AnalyticPolynomial(np.concatenate([[0], F.coeffs])), F
    raise RuntimeError("rejection sampling failed")
