"""
Sum uncertainty bounds for ``N`` channels, maximised over Kraus-index permutations.

Each channel ``E_t`` has Kraus operators ``K^t_1..K^t_n`` (shorter lists are
padded with zero operators, which changes neither the channel nor any skew
value).  A permutation tuple ``(pi_1, ..., pi_N)`` pairs ``K^t_{pi_t(i)}``
across channels for every ``i``.

Both multi-channel objectives are sums over ``i``, so relabelling ``i``
by ``pi_1^{-1}`` maps any tuple to one with ``pi_1 = id`` without changing
the value.  The search therefore fixes ``pi_1`` and enumerates the remaining
``(n!)^(N-1)`` tuples in lexicographic order; the first maximiser wins.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

from .errors import BadPermutation, DimMismatch, EmptyList, RequiresAtLeastThree, RequiresAtLeastTwo, SearchSpaceTooLarge
from .linalg import DEFAULT_TOL, Tolerances
from .skew import DensityState, KrausChannel, _skew, skew_channel

PERM_CAP = 10**6

Permutation = tuple[int, ...]


def normalize_kraus_counts(channels: Sequence[KrausChannel]) -> list[KrausChannel]:
    """Pad every Kraus list with zero matrices up to the longest one."""
    if not channels:
        raise EmptyList("no channels given")
    dims = {c.dim for c in channels}
    if len(dims) != 1:
        raise DimMismatch(f"channels act on different dimensions: {sorted(dims)}")
    d = dims.pop()
    n = max(len(c) for c in channels)
    out = []
    for c in channels:
        if len(c) == n:
            out.append(c)
        else:
            out.append(KrausChannel(list(c.kraus) + [np.zeros((d, d))] * (n - len(c))))
    return out


def check_permutation(pi: Sequence[int], n: int) -> Permutation:
    pi = tuple(int(i) for i in pi)
    if sorted(pi) != list(range(n)):
        raise BadPermutation(f"{list(pi)} is not a permutation of 0..{n - 1}")
    return pi


def search_size(n: int, n_channels: int) -> int:
    """Number of permutation tuples visited once ``pi_1`` is fixed."""
    return math.factorial(n) ** (n_channels - 1)


class _Table:
    """Lazily cached skew values of the Kraus combinations the objectives need."""

    def __init__(self, rho: DensityState, channels: Sequence[KrausChannel]):
        self.sqrt = rho.sqrt
        self.ops = [c.kraus for c in channels]
        self._pair: dict[tuple[int, int, int, int, int], float] = {}
        self._total: dict[tuple[int, ...], float] = {}

    def pair(self, t: int, a: int, s: int, b: int, sign: int) -> float:
        """``I_rho(K^t_a + sign * K^s_b)``."""
        key = (t, a, s, b, sign)
        v = self._pair.get(key)
        if v is None:
            v = self._pair[key] = _skew(self.sqrt, self.ops[t][a] + sign * self.ops[s][b])
        return v

    def total(self, idx: tuple[int, ...]) -> float:
        """``I_rho(sum_t K^t_{idx[t]})``."""
        v = self._total.get(idx)
        if v is None:
            v = self._total[idx] = _skew(self.sqrt, sum(self.ops[t][a] for t, a in enumerate(idx)))
        return v


def _prepare(rho: DensityState, channels: Sequence[KrausChannel], min_n: int) -> list[KrausChannel]:
    if len(channels) < min_n:
        exc = RequiresAtLeastThree if min_n == 3 else RequiresAtLeastTwo
        raise exc(f"need at least {min_n} channels, got {len(channels)}")
    chans = normalize_kraus_counts(channels)
    if chans[0].dim != rho.dim:
        raise DimMismatch(f"channel dimension {chans[0].dim} != state dimension {rho.dim}")
    return chans


def _check_tuple(pis: Sequence[Sequence[int]], n_channels: int, n: int) -> list[Permutation]:
    if len(pis) != n_channels:
        raise BadPermutation(f"expected {n_channels} permutations, got {len(pis)}")
    return [check_permutation(p, n) for p in pis]


def _thm3(table: _Table, pis: Sequence[Permutation], n: int) -> float:
    big_n = len(pis)
    pairs = list(combinations(range(big_n), 2))
    linear = 0.0
    squares = 0.0
    for i in range(n):
        vals = [table.pair(t, pis[t][i], s, pis[s][i], 1) for t, s in pairs]
        linear += sum(vals)
        squares += sum(math.sqrt(v) for v in vals) ** 2
    return (linear - squares / (big_n - 1) ** 2) / (big_n - 2)


def _thm4(table: _Table, pis: Sequence[Permutation], n: int) -> float:
    big_n = len(pis)
    pairs = list(combinations(range(big_n), 2))
    first = 0.0
    squares = 0.0
    for i in range(n):
        first += table.total(tuple(p[i] for p in pis))
        squares += sum(math.sqrt(table.pair(t, pis[t][i], s, pis[s][i], -1)) for t, s in pairs) ** 2
    return first / big_n + 2.0 / (big_n * big_n * (big_n - 1)) * squares


def thm3_value(rho: DensityState, channels: Sequence[KrausChannel], pis: Sequence[Sequence[int]]) -> float:
    """Pairwise-sum channel bound for one fixed permutation tuple (``N > 2``)."""
    chans = _prepare(rho, channels, 3)
    n = len(chans[0])
    return _thm3(_Table(rho, chans), _check_tuple(pis, len(chans), n), n)


def thm4_value(rho: DensityState, channels: Sequence[KrausChannel], pis: Sequence[Sequence[int]]) -> float:
    """Difference-based channel bound for one fixed permutation tuple (``N >= 2``)."""
    chans = _prepare(rho, channels, 2)
    n = len(chans[0])
    return _thm4(_Table(rho, chans), _check_tuple(pis, len(chans), n), n)


def _search(
    objective: Callable[[list[Permutation]], float], n: int, n_channels: int, identity_only: bool
) -> tuple[float, list[Permutation]]:
    ident = tuple(range(n))
    if identity_only:
        pis = [ident] * n_channels
        return objective(pis), pis
    size = search_size(n, n_channels)
    if size > PERM_CAP:
        raise SearchSpaceTooLarge(
            f"(n!)^(N-1) = {size} permutation tuples exceeds the cap {PERM_CAP}; pass identity_only=True"
        )
    best, arg = -math.inf, None
    for rest in product(permutations(range(n)), repeat=n_channels - 1):
        pis = [ident, *rest]
        v = objective(pis)
        if v > best:
            best, arg = v, pis
    return best, arg


def thm3_bound(
    rho: DensityState, channels: Sequence[KrausChannel], identity_only: bool = False
) -> tuple[float, list[Permutation]]:
    """
    Maximise the pairwise-sum bound over permutation tuples.

    Returns the maximum and the lexicographically first maximising tuple
    (``pi_1`` is always the identity).
    """
    chans = _prepare(rho, channels, 3)
    n = len(chans[0])
    table = _Table(rho, chans)
    return _search(lambda pis: _thm3(table, pis, n), n, len(chans), identity_only)


def thm4_bound(
    rho: DensityState, channels: Sequence[KrausChannel], identity_only: bool = False
) -> tuple[float, list[Permutation]]:
    """Maximise the difference-based bound over permutation tuples.

    For two channels every tuple gives exactly ``I(E_1) + I(E_2)``.
    """
    chans = _prepare(rho, channels, 2)
    n = len(chans[0])
    table = _Table(rho, chans)
    return _search(lambda pis: _thm4(table, pis, n), n, len(chans), identity_only)


def fu_two_channel(
    rho: DensityState, e1: KrausChannel, e2: KrausChannel, identity_only: bool = False
) -> tuple[float, Permutation, int]:
    """``max_{pi, s} 1/2 sum_i I_rho(K^1_i + s K^2_{pi(i)})`` with one global sign ``s``."""
    chans = _prepare(rho, [e1, e2], 2)
    n = len(chans[0])
    table = _Table(rho, chans)
    candidates = [tuple(range(n))] if identity_only else permutations(range(n))
    if not identity_only and math.factorial(n) > PERM_CAP:
        raise SearchSpaceTooLarge(f"{n}! permutations exceeds the cap {PERM_CAP}; pass identity_only=True")
    best, arg = -math.inf, None
    for pi in candidates:
        for sign in (1, -1):
            v = 0.5 * sum(table.pair(0, i, 1, pi[i], sign) for i in range(n))
            if v > best:
                best, arg = v, (tuple(pi), sign)
    return best, arg[0], arg[1]


def two_channel_identity(
    rho: DensityState, e1: KrausChannel, e2: KrausChannel, pi1: Sequence[int], pi2: Sequence[int]
) -> tuple[float, float]:
    """Both sides of ``I(E1) + I(E2) = 1/2 sum_i [I(K^1_pi1(i) + K^2_pi2(i)) + I(K^1_pi1(i) - K^2_pi2(i))]``."""
    chans = _prepare(rho, [e1, e2], 2)
    n = len(chans[0])
    p1, p2 = check_permutation(pi1, n), check_permutation(pi2, n)
    table = _Table(rho, chans)
    lhs = skew_channel(rho, chans[0]) + skew_channel(rho, chans[1])
    rhs = 0.5 * sum(table.pair(0, p1[i], 1, p2[i], 1) + table.pair(0, p1[i], 1, p2[i], -1) for i in range(n))
    return lhs, rhs


@dataclass
class ChannelBoundReport:
    n_channels: int
    n_kraus: int
    sum_skew: float
    thm3: float | None
    thm3_argmax: list[Permutation] | None
    thm4: float
    thm4_argmax: list[Permutation]
    fu_two: float | None
    fu_two_argmax: tuple[Permutation, int] | None
    search_exhaustive: bool

    def bounds(self) -> dict[str, float | None]:
        return {"fu_two": self.fu_two, "thm3": self.thm3, "thm4": self.thm4}

    def violations(self, eq_tol: float = DEFAULT_TOL.eq_tol) -> list[str]:
        return [
            name
            for name, value in self.bounds().items()
            if value is not None and (value > self.sum_skew + eq_tol or value < -eq_tol)
        ]

    def to_dict(self) -> dict:
        fu = None
        if self.fu_two_argmax is not None:
            fu = {"pi": list(self.fu_two_argmax[0]), "sign": self.fu_two_argmax[1]}
        return {
            "N": self.n_channels,
            "n_kraus": self.n_kraus,
            "sum_skew": self.sum_skew,
            "bounds": self.bounds(),
            "argmax": {
                "thm3": None if self.thm3_argmax is None else [list(p) for p in self.thm3_argmax],
                "thm4": [list(p) for p in self.thm4_argmax],
                "fu_two": fu,
            },
            "search_exhaustive": self.search_exhaustive,
        }


def channel_report(
    rho: DensityState, channels: Sequence[KrausChannel], identity_only: bool = False, tol: Tolerances = DEFAULT_TOL
) -> ChannelBoundReport:
    chans = _prepare(rho, channels, 2)
    big_n, n = len(chans), len(chans[0])
    total = sum(skew_channel(rho, c) for c in chans)
    t3 = thm3_bound(rho, chans, identity_only) if big_n > 2 else (None, None)
    t4 = thm4_bound(rho, chans, identity_only)
    fu = fu_two_channel(rho, chans[0], chans[1], identity_only) if big_n == 2 else None
    return ChannelBoundReport(
        n_channels=big_n,
        n_kraus=n,
        sum_skew=total,
        thm3=t3[0],
        thm3_argmax=t3[1],
        thm4=t4[0],
        thm4_argmax=t4[1],
        fu_two=None if fu is None else fu[0],
        fu_two_argmax=None if fu is None else (fu[1], fu[2]),
        search_exhaustive=not identity_only or math.factorial(n) == 1,
    )
