"""Coefficient tables of F0 = F * prod (1 - conj(a_j) z)**-2 and the block matrix.

For holes k_1 < ... < k_M and m Blaschke zeros the matrix has 2M rows and
2m+1 columns laid out as

    [ A+  B- ]        A+[j, l] = A(k_j+l-m) + A(k_j-l-m),  l = 0..m
    [ B+ -A- ]        A-[j, l] = A(k_j+l-m) - A(k_j-l-m),  l = 1..m

with A = Re C, B = Im C (B+/B- likewise).  Applied to the coefficient vector
of an m-symmetric p it returns (Re g_1..Re g_M, Im g_1..Im g_M), where
g_j is the Fourier coefficient of F0*p at k_j.
"""
from dataclasses import dataclass

import numpy as np

from .circle import RationalAnalytic, rational_taylor_coefficients


@dataclass(frozen=True)
class SpectralHoleSet:
    holes: tuple = ()

    def __post_init__(self):
        hs = tuple(int(k) for k in self.holes)
        if any(k < 1 for k in hs):
            raise ValueError("holes must be positive integers")
        if any(b <= a for a, b in zip(hs, hs[1:])):
            raise ValueError("holes must be strictly increasing")
        object.__setattr__(self, "holes", hs)

    @property
    def M(self):
        return len(self.holes)

    def __iter__(self):
        return iter(self.holes)

    def __len__(self):
        return len(self.holes)


def as_holes(K):
    return K if isinstance(K, SpectralHoleSet) else SpectralHoleSet(tuple(K))


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """C_k for 0 <= k <= window_max; C_k = 0 for k < 0, reads past the window raise."""

    values: np.ndarray

    @property
    def window_max(self):
        return len(self.values) - 1

    def C(self, k):
        k = np.asarray(k)
        if np.any(k > self.window_max):
            raise IndexError(f"C_k requested beyond the stored window {self.window_max}")
        out = np.where(k >= 0, self.values[np.clip(k, 0, None)], 0)
        return out[()] if out.ndim == 0 else out

    def A(self, k):
        return np.real(self.C(k))

    def B(self, k):
        return np.imag(self.C(k))


@dataclass(frozen=True, eq=False)
class ExtremalityMatrix:
    matrix: np.ndarray
    M: int
    m: int

    @property
    def shape(self):
        return self.matrix.shape

    @property
    def a_plus(self):
        return self.matrix[: self.M, : self.m + 1]

    @property
    def b_minus(self):
        return self.matrix[: self.M, self.m + 1 :]

    @property
    def b_plus(self):
        return self.matrix[self.M :, : self.m + 1]

    @property
    def a_minus(self):
        return -self.matrix[self.M :, self.m + 1 :]


def f0_coefficients(F, zeros, window_max):
    F0 = RationalAnalytic(F, tuple((a, 2) for a in zeros))
    return CoefficientTable(rational_taylor_coefficients(F0, max(window_max, 0)))


def assemble_matrix(F, zeros, K, table=None):
    K = as_holes(K)
    zeros = list(zeros)
    m, M = len(zeros), K.M
    if M == 0:
        return ExtremalityMatrix(np.zeros((0, 2 * m + 1)), 0, m)
    if table is None:
        table = f0_coefficients(F, zeros, K.holes[-1])
    k = np.array(K.holes)[:, None]
    l_plus = np.arange(m + 1)[None, :]
    l_minus = np.arange(1, m + 1)[None, :]
    hi_p, lo_p = table.C(k + l_plus - m), table.C(k - l_plus - m)
    hi_m, lo_m = table.C(k + l_minus - m), table.C(k - l_minus - m)
    plus = hi_p + lo_p
    minus = hi_m - lo_m
    top = np.hstack([plus.real, minus.imag])
    bottom = np.hstack([plus.imag, -minus.real])
    return ExtremalityMatrix(np.vstack([top, bottom]), M, m)


def hole_coefficients(table, K, p):
    """Fourier coefficients of F0*p at each hole, by direct convolution."""
    K = as_holes(K)
    c = p.complex_coeffs()
    idx = np.arange(len(c))
    return np.array([np.sum(c * table.C(k - idx)) for k in K.holes], dtype=complex)


def constraint_residual(F, zeros, K, p, table=None):
    K = as_holes(K)
    if p.N != len(zeros):
        raise ValueError(f"p is {p.N}-symmetric but there are {len(zeros)} zeros")
    if K.M == 0:
        return 0.0
    if table is None:
        table = f0_coefficients(F, zeros, K.holes[-1])
    return float(np.max(np.abs(hole_coefficients(table, K, p))))
