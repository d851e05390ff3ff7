"""
Lower bounds on the sum of skew informations of ``n`` observables.

Three bounds are provided:

``lb_pairwise``
    Pairwise-sum bound (needs ``n > 2``).
``lb_gram``
    ``I_rho(sum M_i) / lambda_max(G)`` with ``G`` the Gram matrix of the
    normalised commutators ``X_i = i[sqrt(rho), M_i] / ||[sqrt(rho), M_i]||``.
``lb_tight``
    ``I_rho(sum M_i)/n + 2/(n^2 (n-1)) * (sum_{i<j} sqrt(I_rho(M_i - M_j)))^2``,
    which is an equality for ``n = 2``.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

import numpy as np

from .errors import DimMismatch, EmptyList, RequiresAtLeastThree, RequiresAtLeastTwo
from .linalg import DEFAULT_TOL, Tolerances, commutator, frobenius_norm, hermitian_eig
from .skew import DensityState, Observable, _skew


def _matrices(rho: DensityState, obs: Sequence[Observable]) -> list[np.ndarray]:
    if len(obs) == 0:
        raise EmptyList("at least one observable is required")
    for m in obs:
        if m.dim != rho.dim:
            raise DimMismatch(f"observable dimension {m.dim} != state dimension {rho.dim}")
    return [m.matrix for m in obs]


def sum_skew(rho: DensityState, obs: Sequence[Observable]) -> float:
    """``sum_i I_rho(M_i)``."""
    mats = _matrices(rho, obs)
    return sum(_skew(rho.sqrt, m) for m in mats)


def lb_pairwise(rho: DensityState, obs: Sequence[Observable]) -> float:
    mats = _matrices(rho, obs)
    n = len(mats)
    if n <= 2:
        raise RequiresAtLeastThree(f"the pairwise-sum bound divides by n - 2; got n = {n}")
    pair = [_skew(rho.sqrt, mats[i] + mats[j]) for i, j in combinations(range(n), 2)]
    root_sum = sum(math.sqrt(v) for v in pair)
    return (sum(pair) - root_sum**2 / (n - 1) ** 2) / (n - 2)


def lb_two_observables(rho: DensityState, m1: Observable, m2: Observable) -> float:
    """Older two-observable bound ``1/2 max{I(M1+M2), I(M1-M2)}``."""
    a, b = _matrices(rho, [m1, m2])
    return 0.5 * max(_skew(rho.sqrt, a + b), _skew(rho.sqrt, a - b))


def gram_matrix(rho: DensityState, obs: Sequence[Observable], tol: Tolerances = DEFAULT_TOL) -> tuple[np.ndarray, list[int]]:
    """Gram matrix ``Tr(X_i X_j)`` over the indices with non-vanishing commutator.

    Returns the (real symmetric) matrix and the retained indices.
    """
    mats = _matrices(rho, obs)
    xs, kept = [], []
    for i, m in enumerate(mats):
        c = commutator(rho.sqrt, m)
        norm = frobenius_norm(c)
        if norm > tol.psd_tol:
            xs.append(1j * c / norm)
            kept.append(i)
    if not xs:
        return np.zeros((0, 0)), kept
    # X_i are Hermitian, so Tr(X_i X_j) = <X_i, X_j>_HS.
    flat = np.array([x.ravel() for x in xs])
    g = (flat.conj() @ flat.T).real
    return 0.5 * (g + g.T), kept


def lb_gram(
    rho: DensityState,
    obs: Sequence[Observable],
    tol: Tolerances = DEFAULT_TOL,
    vanishing: Literal["complete", "drop"] = "complete",
) -> float:
    """
    Eigenvalue bound ``I_rho(sum_i M_i) / lambda_max(G)``.

    ``X_i`` is undefined when ``[sqrt(rho), M_i]`` vanishes. With
    ``vanishing="complete"`` (default) each undefined ``X_i`` is replaced by
    the unit vector that maximises ``lambda_max(G)``, i.e. the bound is the
    one that holds for *every* completion; this gives ``lambda_max = mu + k``
    where ``mu`` is the top eigenvalue over the ``k``-fewer retained vectors
    and agrees with the limit along families approaching the degenerate point.
    ``vanishing="drop"`` removes those indices instead, which is also valid
    and can only give a larger value.
    """
    mats = _matrices(rho, obs)
    g, kept = gram_matrix(rho, obs, tol)
    if not kept:
        return 0.0
    mu = float(hermitian_eig(g, tol)[0][-1])
    lam = mu + (len(mats) - len(kept) if vanishing == "complete" else 0)
    if lam < tol.psd_tol:
        return 0.0
    return _skew(rho.sqrt, sum(mats)) / lam


def lb_tight(rho: DensityState, obs: Sequence[Observable]) -> float:
    mats = _matrices(rho, obs)
    n = len(mats)
    if n < 2:
        raise RequiresAtLeastTwo(f"the difference bound needs n >= 2; got n = {n}")
    root_sum = sum(math.sqrt(_skew(rho.sqrt, mats[i] - mats[j])) for i, j in combinations(range(n), 2))
    return _skew(rho.sqrt, sum(mats)) / n + 2.0 / (n * n * (n - 1)) * root_sum**2


def two_observable_identity(rho: DensityState, m1: Observable, m2: Observable) -> tuple[float, float]:
    """Both sides of ``I(M1) + I(M2) = 1/2 [I(M1+M2) + I(M1-M2)]``."""
    a, b = _matrices(rho, [m1, m2])
    s = rho.sqrt
    lhs = _skew(s, a) + _skew(s, b)
    rhs = 0.5 * (_skew(s, a + b) + _skew(s, a - b))
    return lhs, rhs


@dataclass
class ObservableBoundReport:
    n: int
    sum_skew: float
    lb0: float | None
    lb0_two: float | None
    lb0bar: float
    lb1: float
    slacks: dict[str, float] = field(default_factory=dict)

    def bounds(self) -> dict[str, float | None]:
        return {"lb0": self.lb0, "lb0_two": self.lb0_two, "lb0bar": self.lb0bar, "lb1": self.lb1}

    def violations(self, eq_tol: float = DEFAULT_TOL.eq_tol) -> list[str]:
        """Names of bounds that exceed the sum or fall below zero by more than ``eq_tol``."""
        return [
            name
            for name, value in self.bounds().items()
            if value is not None and (value > self.sum_skew + eq_tol or value < -eq_tol)
        ]

    def to_dict(self) -> dict:
        return {"n": self.n, "sum_skew": self.sum_skew, "bounds": self.bounds(), "slacks": dict(self.slacks)}


def report(rho: DensityState, obs: Sequence[Observable], tol: Tolerances = DEFAULT_TOL) -> ObservableBoundReport:
    n = len(obs)
    if n < 2:
        raise RequiresAtLeastTwo(f"a bound report needs n >= 2; got n = {n}")
    total = sum_skew(rho, obs)
    rep = ObservableBoundReport(
        n=n,
        sum_skew=total,
        lb0=lb_pairwise(rho, obs) if n > 2 else None,
        lb0_two=lb_two_observables(rho, obs[0], obs[1]) if n == 2 else None,
        lb0bar=lb_gram(rho, obs, tol),
        lb1=lb_tight(rho, obs),
    )
    rep.slacks = {name: total - value for name, value in rep.bounds().items() if value is not None}
    return rep


__all__ = [
    "ObservableBoundReport",
    "gram_matrix",
    "lb_gram",
    "lb_pairwise",
    "lb_tight",
    "lb_two_observables",
    "report",
    "sum_skew",
    "two_observable_identity",
]
