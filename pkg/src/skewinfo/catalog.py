"""Concrete states, observables and channels, plus seeded random instances.

Spin-1 objects use the basis order ``(|1>, |0>, |-1>)`` throughout; the
angular momentum matrices and :func:`spin1_pure_state` must agree on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OutsideBlochBall, OutsideParameterDomain, ParamOutOfRange
from .linalg import DEFAULT_TOL, Tolerances
from .skew import DensityState, KrausChannel, Observable

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

_S = 1 / math.sqrt(2)
L_X = _S * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.complex128)
L_Y = _S * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=np.complex128)
L_Z = np.diag([1, 0, -1]).astype(np.complex128)

BLOCH_SLACK = 1e-12
QUTRIT_A_MAX = 1 / math.sqrt(3)


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    @property
    def t(self) -> float:
        return self.x**2 + self.y**2 + self.z**2

    @classmethod
    def spherical(cls, radius: float, theta: float, phi: float) -> "BlochVector":
        return cls(
            radius * math.sin(theta) * math.cos(phi),
            radius * math.sin(theta) * math.sin(phi),
            radius * math.cos(theta),
        )


def bloch_qubit(r: BlochVector | tuple[float, float, float], tol: Tolerances = DEFAULT_TOL) -> DensityState:
    """``rho = (I + r . sigma) / 2``."""
    if not isinstance(r, BlochVector):
        r = BlochVector(*map(float, r))
    if not r.t <= 1 + BLOCH_SLACK:
        raise OutsideBlochBall(f"|r|^2 = {r.t!r} > 1")
    return DensityState(0.5 * (np.eye(2) + r.x * SIGMA_X + r.y * SIGMA_Y + r.z * SIGMA_Z), tol)


def example1_state(theta: float) -> DensityState:
    """Qubit with Bloch vector ``(sqrt(3)/2 cos(theta), sqrt(3)/2 sin(theta), 0)``."""
    h = math.sqrt(3) / 2
    return bloch_qubit(BlochVector(h * math.cos(theta), h * math.sin(theta), 0.0))


def pauli_observables() -> list[Observable]:
    return [Observable(SIGMA_X), Observable(SIGMA_Y), Observable(SIGMA_Z)]


def spin1_observables() -> list[Observable]:
    return [Observable(L_X), Observable(L_Y), Observable(L_Z)]


def spin1_pure_state(theta: float, phi: float) -> DensityState:
    """``sin(theta)cos(phi)|1> + sin(theta)sin(phi)|0> + cos(theta)|-1>``."""
    psi = np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)],
        dtype=np.complex128,
    )
    return DensityState(np.outer(psi, psi.conj()))


def qutrit_matrix(a: float, alpha: float, beta: float) -> np.ndarray:
    k = math.sqrt(3) * a * 1j
    u = k * math.cos(alpha)
    v = k * math.sin(alpha) * math.cos(beta)
    w = k * math.sin(alpha) * math.sin(beta)
    return np.array([[1, -u, -v], [u, 1, -w], [v, w, 1]], dtype=np.complex128) / 3


def qutrit_family(a: float, alpha: float, beta: float, tol: Tolerances = DEFAULT_TOL) -> DensityState:
    """
    Qutrit state with off-diagonal entries ``-+ i sqrt(3) a (...)`` / 3.

    Domain: ``|a| <= 1/sqrt(3)``, ``0 < alpha < pi`` (open) and
    ``0 <= beta <= 2 pi``.  Positivity is checked by :class:`DensityState`
    rather than assumed.
    """
    if abs(a) > QUTRIT_A_MAX + BLOCH_SLACK:
        raise OutsideParameterDomain(f"|a| = {abs(a)!r} exceeds 1/sqrt(3)")
    if not 0 < alpha < math.pi:
        raise OutsideParameterDomain(f"alpha = {alpha!r} must lie strictly inside (0, pi)")
    if not 0 <= beta <= 2 * math.pi:
        raise OutsideParameterDomain(f"beta = {beta!r} must lie in [0, 2 pi]")
    return DensityState(qutrit_matrix(a, alpha, beta), tol)


def _check_q(q: float) -> float:
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ParamOutOfRange(f"channel parameter q = {q!r} outside [0, 1]")
    return q


_P0 = np.diag([1, 0]).astype(np.complex128)
_P1 = np.diag([0, 1]).astype(np.complex128)
_K01 = np.array([[0, 1], [0, 0]], dtype=np.complex128)


def phase_damping(q: float) -> KrausChannel:
    q = _check_q(q)
    return KrausChannel([_P0 + math.sqrt(1 - q) * _P1, math.sqrt(q) * _P1])


def amplitude_damping(q: float) -> KrausChannel:
    q = _check_q(q)
    return KrausChannel([_P0 + math.sqrt(1 - q) * _P1, math.sqrt(q) * _K01])


def bit_flip(q: float) -> KrausChannel:
    # Note the convention: q weights the identity element, 1 - q the flip.
    q = _check_q(q)
    return KrausChannel([math.sqrt(q) * np.eye(2), math.sqrt(1 - q) * SIGMA_X])


def identity_channel(dim: int) -> KrausChannel:
    return KrausChannel([np.eye(dim)])


@dataclass
class SeededGenerator:
    """Reproducible random source (numpy ``PCG64`` bit generator).

    One consumer per instance; draws are not thread-safe.
    """

    seed: int
    algorithm: str = "numpy.PCG64"
    _rng: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._rng = np.random.Generator(np.random.PCG64(self.seed))

    @property
    def rng(self) -> np.random.Generator:
        return self._rng

    def complex_normal(self, shape) -> np.ndarray:
        """Standard complex normal entries, ``E|z|^2 = 1``."""
        re = self._rng.standard_normal(shape)
        im = self._rng.standard_normal(shape)
        return (re + 1j * im) / math.sqrt(2)


def random_state(dim: int, gen: SeededGenerator) -> DensityState:
    """Ginibre-induced mixed state ``G G^dag / Tr(G G^dag)``."""
    if dim < 2:
        raise ParamOutOfRange("dim must be at least 2")
    g = gen.complex_normal((dim, dim))
    m = g @ g.conj().T
    return DensityState(m / np.trace(m).real)


def random_pure_state(dim: int, gen: SeededGenerator) -> DensityState:
    return DensityState.from_ket(gen.complex_normal(dim))


def random_observable(dim: int, gen: SeededGenerator) -> Observable:
    g = gen.complex_normal((dim, dim))
    return Observable(0.5 * (g + g.conj().T))


def random_channel(dim: int, n_kraus: int, gen: SeededGenerator) -> KrausChannel:
    """Kraus operators cut from a random isometry ``C^d -> C^(n d)``."""
    g = gen.complex_normal((n_kraus * dim, dim))
    q, r = np.linalg.qr(g)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return KrausChannel([q[i * dim : (i + 1) * dim, :] for i in range(n_kraus)])
