import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewinfo import catalog
from skewinfo.errors import DimMismatch, NonFiniteEntries, NotHermitian, NotPositiveSemidefinite, NotSquare, SkewInfoError
from skewinfo.linalg import (
    Tolerances,
    as_matrix,
    commutator,
    frobenius_norm,
    hermitian_eig,
    matrix_sqrt_psd,
)

SX, SY, SZ = catalog.SIGMA_X, catalog.SIGMA_Y, catalog.SIGMA_Z


def random_hermitian(rng, d, scale=1.0):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return scale * (g + g.conj().T) / 2


class TestValidation:
    def test_rejects_non_square(self):
        with pytest.raises(NotSquare):
            as_matrix(np.zeros((2, 3)))

    def test_rejects_nan(self):
        with pytest.raises(NonFiniteEntries):
            as_matrix([[1, np.nan], [0, 1]])

    def test_tolerances_must_be_positive(self):
        with pytest.raises(SkewInfoError):
            Tolerances(psd_tol=0.0)
        with pytest.raises(SkewInfoError):
            Tolerances(eq_tol=-1e-9)

    def test_hermiticity_is_relative(self):
        big = 1e6 * SX
        big[0, 1] += 1e-6  # absolute error 1e-6, relative ~7e-13
        hermitian_eig(big)
        with pytest.raises(NotHermitian):
            hermitian_eig(SX + 1e-6 * SZ @ SX)


class TestHermitianEig:
    def test_diagonal(self):
        w, v = hermitian_eig(np.diag([1.0, 2.0]))
        np.testing.assert_allclose(w, [1, 2])
        np.testing.assert_allclose(np.abs(v), np.eye(2))

    def test_bloch_state_spectrum(self):
        w, _ = hermitian_eig(0.5 * (np.eye(2) + math.sqrt(3) / 2 * SX))
        np.testing.assert_allclose(w, [(1 - math.sqrt(3) / 2) / 2, (1 + math.sqrt(3) / 2) / 2], atol=1e-15)
        np.testing.assert_allclose(w, [0.0669872981077807, 0.9330127018922193], atol=1e-15)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_reconstruction_random(self, d):
        rng = np.random.default_rng(d)
        for _ in range(200):
            a = random_hermitian(rng, d, scale=rng.uniform(0.1, 50))
            w, v = hermitian_eig(a)
            assert np.all(np.diff(w) >= 0)
            assert frobenius_norm(v @ np.diag(w) @ v.conj().T - a) < 1e-9 * max(1, frobenius_norm(a))
            assert frobenius_norm(v.conj().T @ v - np.eye(d)) < 1e-10

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.array([[0, 1], [0, 0]]))


class TestSqrt:
    def test_maximally_mixed(self):
        np.testing.assert_allclose(matrix_sqrt_psd(np.eye(2) / 2), np.eye(2) / math.sqrt(2), atol=1e-15)

    def test_projector_is_idempotent(self):
        p = np.diag([1.0, 0.0])
        np.testing.assert_array_equal(matrix_sqrt_psd(p), p)

    def test_bloch_sqrt_spectrum(self):
        a = 0.5 * (np.eye(2) + math.sqrt(3) / 2 * SX)
        w_rho, _ = hermitian_eig(a)
        w, _ = hermitian_eig(matrix_sqrt_psd(a))
        np.testing.assert_allclose(w, np.sqrt(w_rho), atol=1e-15)

    def test_small_negative_eigenvalue_clamped(self):
        s = matrix_sqrt_psd(np.diag([1.0, -1e-12]))
        np.testing.assert_array_equal(s, np.diag([1.0, 0.0]))

    def test_negative_rejected(self):
        with pytest.raises(NotPositiveSemidefinite):
            matrix_sqrt_psd(np.diag([1.0, -1e-6]))

    def test_pure_state_root_is_exact(self):
        psi = np.array([1, 1j, -1]) / math.sqrt(3)
        p = np.outer(psi, psi.conj())
        assert frobenius_norm(matrix_sqrt_psd(p) - p) < 1e-14

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_sqrt_of_square(self, d):
        rng = np.random.default_rng(100 + d)
        for _ in range(100):
            g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            s = matrix_sqrt_psd(g @ g.conj().T)  # random PSD S
            assert frobenius_norm(matrix_sqrt_psd(s @ s) - s) < 1e-7
            assert frobenius_norm(s @ s - g @ g.conj().T) < 1e-8 * max(1, frobenius_norm(g @ g.conj().T))


class TestCommutatorNorm:
    def test_pauli_algebra(self):
        np.testing.assert_allclose(commutator(SX, SY), 2j * SZ)

    def test_self_commutator(self):
        a = np.arange(9).reshape(3, 3) + 1j
        np.testing.assert_array_equal(commutator(a, a), np.zeros((3, 3)))

    def test_diag_sigma_x(self):
        np.testing.assert_array_equal(commutator(np.diag([1.0, 2.0]), SX), np.array([[0, -1], [1, 0]]))

    def test_dim_mismatch(self):
        with pytest.raises(DimMismatch):
            commutator(np.eye(2), np.eye(3))

    def test_norms(self):
        assert frobenius_norm(np.zeros((3, 3))) == 0
        assert frobenius_norm(SX) == pytest.approx(math.sqrt(2), abs=1e-15)

    def test_commutator_norm_bloch(self):
        s = matrix_sqrt_psd(0.5 * (np.eye(2) + math.sqrt(3) / 2 * SX))
        # I(sz) = 1/2 here, so ||i[sqrt(rho), sz]|| = sqrt(2 * 1/2) = 1
        assert frobenius_norm(1j * commutator(s, SZ)) == pytest.approx(1.0, abs=1e-12)


complex_entries = st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 4).flatmap(lambda d: st.lists(complex_entries, min_size=2 * d * d, max_size=2 * d * d)))
def test_norm_and_antisymmetry(entries):
    d = int(math.isqrt(len(entries) // 2))
    a = np.array(entries[: d * d]).reshape(d, d)
    b = np.array(entries[d * d :]).reshape(d, d)
    n2 = np.trace(a.conj().T @ a).real
    assert frobenius_norm(a) ** 2 == pytest.approx(n2, rel=1e-12, abs=1e-300)
    scale = max(1.0, np.abs(a).max() * np.abs(b).max())
    assert np.abs(commutator(a, b) + commutator(b, a)).max() <= 1e-14 * scale
