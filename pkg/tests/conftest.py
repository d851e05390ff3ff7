import sys
import math

import numpy as np
import pytest

from skewinfo import catalog

SQRT3_2 = math.sqrt(3) / 2


@pytest.fixture
def paulis():
    return catalog.pauli_observables()


@pytest.fixture
def spin1_ops():
    return catalog.spin1_observables()


@pytest.fixture
def gen():
    return catalog.SeededGenerator(20240611)


@pytest.fixture
def ex1_theta0():
    """Example 1 state at theta = 0, Bloch vector (sqrt(3)/2, 0, 0)."""
    return catalog.bloch_qubit((SQRT3_2, 0.0, 0.0))


def bloch_sqrt(x, y, z):
    """Closed-form square root of (I + r.sigma)/2, independent of any eigensolver."""
    r = math.sqrt(x * x + y * y + z * z)
    lp, lm = (1 + r) / 2, (1 - r) / 2
    a = (math.sqrt(lp) + math.sqrt(lm)) / 2
    b = (math.sqrt(lp) - math.sqrt(lm)) / 2
    n = np.array([x, y, z]) / r if r > 0 else np.zeros(3)
    return a * np.eye(2) + b * (n[0] * catalog.SIGMA_X + n[1] * catalog.SIGMA_Y + n[2] * catalog.SIGMA_Z)


def direct_skew(sqrt_rho, k):
    """1/2 Tr([S, K]^dag [S, K]) written out by hand."""
    c = sqrt_rho @ k - k @ sqrt_rho
    return 0.5 * np.trace(c.conj().T @ c).real


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
