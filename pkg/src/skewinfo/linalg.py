"""
Dense complex matrix primitives with explicit numerical contracts.

Everything here is a pure function of its inputs. Matrices are plain
``numpy`` arrays of dtype ``complex128``; :func:`as_matrix` is the single
entry point that turns user input into such an array and rejects anything
non-square or non-finite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from .errors import (
    ConvergenceFailure,
    DimMismatch,
    NonFiniteEntries,
    NotHermitian,
    NotPositiveSemidefinite,
    NotSquare,
    SkewInfoError,
)

ComplexMatrix = npt.NDArray[np.complex128]


@dataclass(frozen=True)
class Tolerances:
    """Numerical-contract knobs used by every validator.

    ``herm_tol`` is relative (scaled by ``max(1, ||A||_F)``); the others are
    absolute.
    """

    herm_tol: float = 1e-10
    psd_tol: float = 1e-10
    trace_tol: float = 1e-10
    eq_tol: float = 1e-9
    complete_tol: float = 1e-9

    def __post_init__(self) -> None:
        for name in ("herm_tol", "psd_tol", "trace_tol", "eq_tol", "complete_tol"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0):
                raise SkewInfoError(f"tolerance {name} must be strictly positive, got {value!r}")


DEFAULT_TOL = Tolerances()


def as_matrix(a: npt.ArrayLike) -> ComplexMatrix:
    """Return ``a`` as a square, finite ``complex128`` array (copied)."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise NotSquare(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteEntries("matrix has NaN or Inf entries")
    return m


def check_same_dim(*mats: np.ndarray) -> int:
    dims = {m.shape[0] for m in mats}
    if len(dims) != 1:
        raise DimMismatch(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def frobenius_norm(a: np.ndarray) -> float:
    """Hilbert-Schmidt norm ``sqrt(Tr(A^dag A))``."""
    return float(np.linalg.norm(a, "fro"))


def hs_inner(a: np.ndarray, b: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product ``Tr(A^dag B)``."""
    return complex(np.vdot(a, b))


def commutator(a: np.ndarray, b: np.ndarray) -> ComplexMatrix:
    if a.shape != b.shape:
        raise DimMismatch(f"cannot commute shapes {a.shape} and {b.shape}")
    return a @ b - b @ a


def hermiticity_residual(a: np.ndarray) -> float:
    """``||A - A^dag||_F / max(1, ||A||_F)``."""
    return frobenius_norm(a - a.conj().T) / max(1.0, frobenius_norm(a))


def is_hermitian(a: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> bool:
    return hermiticity_residual(a) <= tol.herm_tol


def require_hermitian(a: np.ndarray, tol: Tolerances = DEFAULT_TOL, what: str = "matrix") -> None:
    res = hermiticity_residual(a)
    if res > tol.herm_tol:
        raise NotHermitian(f"{what} is not Hermitian (relative residual {res:.3e} > {tol.herm_tol:.1e})")


def hermitian_eig(a: npt.ArrayLike, tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, ComplexMatrix]:
    """
    Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    a : array_like
        Square matrix, Hermitian within ``tol.herm_tol`` (relative).
    tol : Tolerances

    Returns
    -------
    eigenvalues : ndarray
        Real eigenvalues in ascending order.
    eigenvectors : ndarray
        Unitary matrix whose columns are the matching eigenvectors.

    Raises
    ------
    NotHermitian
        If the Hermiticity check fails.
    ConvergenceFailure
        If LAPACK does not converge.
    """
    m = as_matrix(a)
    require_hermitian(m, tol)
    m = 0.5 * (m + m.conj().T)
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure is not reproducible on demand
        raise ConvergenceFailure(str(exc)) from exc
    return w, v


def _resolution_floor(w: np.ndarray) -> float:
    # eigh resolves eigenvalues only to about eps * ||A||; anything below is noise.
    scale = max(1.0, float(np.max(np.abs(w)))) if w.size else 1.0
    return 4.0 * w.size * np.finfo(float).eps * scale


def clamp_spectrum(w: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Clamp a PSD spectrum: values in ``[-psd_tol, floor]`` become exactly 0."""
    if w.size and w[0] < -tol.psd_tol:
        raise NotPositiveSemidefinite(f"minimum eigenvalue {w[0]:.3e} < -{tol.psd_tol:.1e}")
    w = w.copy()
    w[w <= _resolution_floor(w)] = 0.0
    return w


def psd_sqrt_from_eig(w: np.ndarray, v: np.ndarray) -> ComplexMatrix:
    s = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (s + s.conj().T)


def matrix_sqrt_psd(a: npt.ArrayLike, tol: Tolerances = DEFAULT_TOL) -> ComplexMatrix:
    """Principal square root of a Hermitian positive-semidefinite matrix.

    Eigenvalues in ``[-psd_tol, 0)`` (and positive values below eigensolver
    resolution) are clamped to zero first, so pure states are handled exactly.
    """
    w, v = hermitian_eig(a, tol)
    return psd_sqrt_from_eig(clamp_spectrum(w, tol), v)
