"""Validated quantum objects and Wigner-Yanase skew information.

The skew information of a state ``rho`` with respect to an operator ``K`` is

    I_rho(K) = 1/2 * Tr([sqrt(rho), K]^dag [sqrt(rho), K]) = 1/2 ||[sqrt(rho), K]||_F^2,

which reduces to ``-1/2 Tr([sqrt(rho), M]^2)`` for Hermitian ``M``.  For a
channel with Kraus operators ``K_i`` it is the sum over ``I_rho(K_i)``; note
that this depends on the Kraus representation supplied.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from .errors import DimMismatch, EmptyList, IncompleteChannel, TraceNotOne
from .linalg import (
    DEFAULT_TOL,
    ComplexMatrix,
    Tolerances,
    as_matrix,
    clamp_spectrum,
    commutator,
    frobenius_norm,
    hermitian_eig,
    psd_sqrt_from_eig,
    require_hermitian,
)

# Squared norms cannot be negative; anything down to this is round-off.
NEGATIVE_CLAMP = 1e-12


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


class DensityState:
    """Hermitian, positive-semidefinite, trace-one matrix with cached square root."""

    __slots__ = ("matrix", "sqrt", "eigenvalues", "dim")

    def __init__(self, matrix: npt.ArrayLike, tol: Tolerances = DEFAULT_TOL):
        m = as_matrix(matrix)
        require_hermitian(m, tol, "density matrix")
        m = 0.5 * (m + m.conj().T)
        trace = float(np.trace(m).real)
        if abs(trace - 1.0) > tol.trace_tol:
            raise TraceNotOne(f"trace {trace!r} deviates from 1 by more than {tol.trace_tol:.1e}")
        w, v = hermitian_eig(m, tol)
        w = clamp_spectrum(w, tol)
        self.matrix: ComplexMatrix = _frozen(m)
        self.sqrt: ComplexMatrix = _frozen(psd_sqrt_from_eig(w, v))
        self.eigenvalues: np.ndarray = _frozen(w)
        self.dim: int = m.shape[0]

    @classmethod
    def from_ket(cls, psi: npt.ArrayLike, tol: Tolerances = DEFAULT_TOL) -> "DensityState":
        psi = np.asarray(psi, dtype=np.complex128).ravel()
        psi = psi / np.linalg.norm(psi)
        return cls(np.outer(psi, psi.conj()), tol)

    def __repr__(self) -> str:
        return f"DensityState(dim={self.dim}, eigenvalues={np.round(self.eigenvalues, 6).tolist()})"


class Observable:
    """Hermitian matrix."""

    __slots__ = ("matrix", "dim")

    def __init__(self, matrix: npt.ArrayLike, tol: Tolerances = DEFAULT_TOL):
        m = as_matrix(matrix)
        require_hermitian(m, tol, "observable")
        self.matrix: ComplexMatrix = _frozen(0.5 * (m + m.conj().T))
        self.dim: int = m.shape[0]

    def __add__(self, other: "Observable") -> "Observable":
        return Observable(self.matrix + other.matrix)

    def __sub__(self, other: "Observable") -> "Observable":
        return Observable(self.matrix - other.matrix)

    def __repr__(self) -> str:
        return f"Observable(dim={self.dim})"


class KrausChannel:
    """Ordered Kraus operators ``K_i`` with ``sum_i K_i^dag K_i = I``.

    The order matters for the permutation-maximised channel bounds, so it is
    kept exactly as given.
    """

    __slots__ = ("kraus", "dim")

    def __init__(self, kraus: Iterable[npt.ArrayLike], tol: Tolerances = DEFAULT_TOL):
        ops = tuple(_frozen(as_matrix(k)) for k in kraus)
        if not ops:
            raise EmptyList("a channel needs at least one Kraus operator")
        dims = {k.shape[0] for k in ops}
        if len(dims) != 1:
            raise DimMismatch(f"Kraus operators of different dimensions: {sorted(dims)}")
        d = dims.pop()
        residual = completeness_residual(ops)
        if residual > tol.complete_tol:
            raise IncompleteChannel(f"||sum K^dag K - I||_F = {residual:.3e} > {tol.complete_tol:.1e}")
        self.kraus: tuple[ComplexMatrix, ...] = ops
        self.dim: int = d

    def __len__(self) -> int:
        return len(self.kraus)

    def apply(self, rho: npt.ArrayLike) -> ComplexMatrix:
        r = np.asarray(rho, dtype=np.complex128)
        return sum(k @ r @ k.conj().T for k in self.kraus)

    def __repr__(self) -> str:
        return f"KrausChannel(dim={self.dim}, n={len(self.kraus)})"


def completeness_residual(kraus: Sequence[np.ndarray]) -> float:
    d = kraus[0].shape[0]
    total = sum(k.conj().T @ k for k in kraus)
    return frobenius_norm(total - np.eye(d))


def _clamp(value: float) -> float:
    if value < 0.0:
        if value < -NEGATIVE_CLAMP:  # pragma: no cover - a squared norm cannot get here
            raise ArithmeticError(f"negative skew information {value!r}")
        return 0.0
    return value


def _skew(sqrt_rho: np.ndarray, k: np.ndarray) -> float:
    c = commutator(sqrt_rho, k)
    return _clamp(0.5 * float(np.vdot(c, c).real))


def skew_operator(rho: DensityState, k: npt.ArrayLike) -> float:
    """``I_rho(K)`` for an arbitrary (not necessarily Hermitian) operator."""
    k = k.matrix if isinstance(k, Observable) else np.asarray(k, dtype=np.complex128)
    if k.shape != (rho.dim, rho.dim):
        raise DimMismatch(f"operator shape {k.shape} does not match state dimension {rho.dim}")
    return _skew(rho.sqrt, k)


def skew_observable(rho: DensityState, m: Observable) -> float:
    """Wigner-Yanase skew information ``-1/2 Tr([sqrt(rho), M]^2)``."""
    if m.dim != rho.dim:
        raise DimMismatch(f"observable dimension {m.dim} != state dimension {rho.dim}")
    return _skew(rho.sqrt, m.matrix)


def skew_channel(rho: DensityState, channel: KrausChannel) -> float:
    if channel.dim != rho.dim:
        raise DimMismatch(f"channel dimension {channel.dim} != state dimension {rho.dim}")
    return sum(_skew(rho.sqrt, k) for k in channel.kraus)
