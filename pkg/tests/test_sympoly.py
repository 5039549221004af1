import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from hardy_extreme.circle import AnalyticPolynomial, CircleGrid
from hardy_extreme.errors import SymmetryError
from hardy_extreme.factorization import BlaschkeProduct
from hardy_extreme.sympoly import (
    SymmetricPolynomial,
    from_analytic,
    p0_polynomial,
    phi_values,
    real_ratio_check,
    to_analytic,
)

from conftest import poly


def sym(N, *v):
    return SymmetricPolynomial.from_vector(N, v)


def test_to_analytic_examples():
    np.testing.assert_array_equal(to_analytic(sym(0, 1)).coeffs, [2])
    np.testing.assert_array_equal(to_analytic(sym(1, 0, 1, 0)).coeffs, [1, 0, 1])
    np.testing.assert_array_equal(to_analytic(sym(1, 0, 0, 1)).coeffs, [-1j, 0, 1j])


def test_from_analytic_examples():
    np.testing.assert_array_equal(from_analytic(poly(2), 0).vector, [1])
    np.testing.assert_array_equal(from_analytic(poly(0, 1), 1).vector, [0.5, 0, 0])


def test_from_analytic_rejects():
    with pytest.raises(SymmetryError):
        from_analytic(poly(1, 0, 0, 1), 1)
    with pytest.raises(SymmetryError):
        from_analytic(poly(1, 0, 2), 1)


@settings(max_examples=60)
@given(st.integers(0, 8).flatmap(lambda N: st.tuples(
    st.just(N), arrays(float, 2 * N + 1, elements=st.floats(-1e3, 1e3)))))
def test_roundtrip_exact(args):
    N, v = args
    p = SymmetricPolynomial.from_vector(N, v)
    np.testing.assert_array_equal(from_analytic(to_analytic(p), N).vector, v)


def test_symmetry_identity_and_real_on_circle(rng):
    z = CircleGrid(64).nodes
    for N in range(5):
        p = SymmetricPolynomial.from_vector(N, rng.normal(size=2 * N + 1))
        c = p.complex_coeffs()
        np.testing.assert_allclose(c, np.conj(c[::-1]))
        assert np.max(np.abs((z ** (-N) * p(z)).imag)) < 1e-12


def test_p0_examples():
    np.testing.assert_allclose(p0_polynomial(BlaschkeProduct()).vector, [0.5])
    np.testing.assert_allclose(p0_polynomial(BlaschkeProduct((0,))).vector, [0.5, 0, 0])
    p0 = p0_polynomial(BlaschkeProduct((0.5,)))
    np.testing.assert_allclose(p0.vector, [0.625, -0.5, 0], atol=1e-15)
    np.testing.assert_allclose(p0.complex_coeffs(), [-0.5, 1.25, -0.5], atol=1e-15)
    z = CircleGrid(64).nodes
    np.testing.assert_allclose((np.conj(z) * p0(z)).real, np.abs(z - 0.5) ** 2, atol=1e-14)


def test_p0_nonnegative(rng):
    z = CircleGrid(128).nodes
    for _ in range(20):
        m = int(rng.integers(0, 5))
        zeros = [0.9 * rng.uniform() * np.exp(2j * np.pi * rng.uniform()) for _ in range(m)]
        p0 = p0_polynomial(BlaschkeProduct(zeros, np.exp(1j * rng.uniform())))
        assert np.min((z ** (-m) * p0(z)).real) >= -1e-12


def test_real_ratio_examples(rng):
    assert real_ratio_check(sym(0, 0.7), BlaschkeProduct()) == 0
    assert real_ratio_check(sym(1, 0.5, 0, 0), BlaschkeProduct((0,))) < 1e-15
    B = BlaschkeProduct((0.5,))
    p = SymmetricPolynomial.from_vector(1, rng.normal(size=3))
    assert real_ratio_check(p, B) < 1e-10


def test_real_ratio_detects_asymmetric():
    # i * p0 is not symmetric, so the ratio becomes purely imaginary
    B = BlaschkeProduct((0.5,))
    p0 = p0_polynomial(B)
    z = CircleGrid(64).nodes
    ratio = 1j * p0(z) * phi_values(B.zeros, z) / B(z)
    assert np.max(np.abs(ratio.imag)) > 0.1


def test_completeness_dimension(rng):
    """psi = p*Phi for the 2N+1 unit vectors are R-linearly independent; reconstruction recovers p."""
    for N in range(1, 4):
        zeros = [0.7 * rng.uniform() * np.exp(2j * np.pi * rng.uniform()) for _ in range(N)]
        z = CircleGrid(64).nodes
        phi = phi_values(zeros, z)
        cols = []
        for e in np.eye(2 * N + 1):
            psi = SymmetricPolynomial.from_vector(N, e)(z) * phi
            cols.append(np.concatenate([psi.real, psi.imag]))
        assert np.linalg.matrix_rank(np.array(cols).T) == 2 * N + 1

        # build psi from a random symmetric p, recover p from psi / Phi by fitting degree <= 2N
        p = SymmetricPolynomial.from_vector(N, rng.normal(size=2 * N + 1))
        psi = p(z) * phi
        q = np.fft.fft(psi / phi) / len(z)
        recovered = from_analytic(AnalyticPolynomial(np.round(q[: 2 * N + 1], 13)), N, tol=1e-9)
        np.testing.assert_allclose(recovered.vector, p.vector, atol=1e-10)


def test_vector_validation():
    with pytest.raises(ValueError):
        SymmetricPolynomial(1, [1.0], [])
    with pytest.raises(ValueError):
        SymmetricPolynomial.from_vector(2, [1, 2, 3])
