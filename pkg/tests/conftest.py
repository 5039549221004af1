import numpy as np
import pytest

from hardy_extreme.circle import AnalyticPolynomial

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def record():
    """Collect one summary line per acceptance criterion."""

    def _record(number, passed, detail):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {detail}")

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


def series_product(numerator, factors, kmax):
    """Brute-force Taylor coefficients of numerator / prod (1 - conj(a) z)^d.

    Divides by each linear factor one at a time with explicit loops: if
    s = t / (1 - b z) then s_k = t_k + b s_{k-1}.
    """
    s = [0j] * (kmax + 1)
    for i, c in enumerate(numerator):
        if i <= kmax:
            s[i] = complex(c)
    for a, d in factors:
        b = np.conj(a)
        for _ in range(d):
            out = [0j] * (kmax + 1)
            for k in range(kmax + 1):
                out[k] = s[k] + (b * out[k - 1] if k else 0)
            s = out
    return np.array(s)


def poly(*coeffs):
    return AnalyticPolynomial(list(coeffs))
