"""
Randomised and grid-based verification suites.

Each suite returns a JSON-serialisable summary with, per property, the
number of checks, the number of violations, the worst residual seen, the
tolerance it was held to and (on failure) the first violating instance in
matrix-JSON form so it can be replayed through the CLI.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from itertools import combinations, permutations

import numpy as np

from . import catalog, references
from .catalog import BlochVector, SeededGenerator
from .channel_bounds import fu_two_channel, thm3_bound, thm4_bound, two_channel_identity
from .observable_bounds import lb_gram, lb_pairwise, lb_tight, sum_skew, two_observable_identity
from .serialization import channels_to_json, observables_to_json, state_to_json
from .skew import skew_channel

SUITES = ("lemmas", "equalities", "validity", "corollary")


class Check:
    """Accumulates residuals for one property; ``residual > tol`` is a violation."""

    def __init__(self, name: str, tol: float):
        self.name = name
        self.tol = tol
        self.count = 0
        self.violations = 0
        self.worst = 0.0
        self.instance: dict | None = None

    def __call__(self, residual: float, instance: Callable[[], dict] | None = None) -> None:
        self.count += 1
        residual = float(residual)
        if not residual <= self.worst:
            self.worst = residual
        if not residual <= self.tol:
            self.violations += 1
            if self.instance is None and instance is not None:
                self.instance = instance()

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.count > 0

    def summary(self) -> dict:
        return {
            "count": self.count,
            "violations": self.violations,
            "worst": self.worst,
            "tolerance": self.tol,
            "passed": self.passed,
            "instance": self.instance,
        }


def _summary(suite: str, checks: Sequence[Check], **meta) -> dict:
    return {
        "suite": suite,
        **meta,
        "passed": all(c.passed for c in checks),
        "properties": {c.name: c.summary() for c in checks},
    }


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _vectors(gen: SeededGenerator, n: int) -> list[np.ndarray]:
    length = int(gen.rng.integers(1, 17))
    return [gen.complex_normal(length) for _ in range(n)]


def run_lemmas(trials: int, seed: int) -> dict:
    """Vector identities behind the difference bound, on random complex tuples."""
    gen = SeededGenerator(seed)
    lemma1 = Check("lemma1_pair_sums", 1e-10)
    lemma2 = Check("lemma2_pair_differences", 1e-10)
    lemma3 = Check("lemma3_root_sum", 1e-10)
    combined = Check("difference_inequality", 1e-10)
    for k in range(trials):
        n = (3, 4, 5)[k % 3]
        a = _vectors(gen, n)
        sq = [float(np.vdot(v, v).real) for v in a]
        total = sum(a)
        total_sq = float(np.vdot(total, total).real)
        pairs = list(combinations(range(n), 2))
        plus = sum(np.linalg.norm(a[i] + a[j]) ** 2 for i, j in pairs)
        minus_norms = [np.linalg.norm(a[i] - a[j]) for i, j in pairs]
        minus = sum(m * m for m in minus_norms)
        inst = lambda: {"vectors": [[[float(z.real), float(z.imag)] for z in v] for v in a]}  # noqa: E731
        lemma1(_rel(plus, total_sq + (n - 2) * sum(sq)), inst)
        lemma2(_rel(minus, n * sum(sq) - total_sq), inst)
        lemma3(sum(minus_norms) ** 2 - n * (n - 1) / 2 * minus, inst)
        rhs = total_sq / n + 2 / (n * n * (n - 1)) * sum(minus_norms) ** 2
        combined(rhs - sum(sq), inst)
    checks = [lemma1, lemma2, lemma3, combined]
    return _summary("lemmas", checks, trials=trials, seed=seed)


def _random_state(gen: SeededGenerator, d: int, k: int):
    # every fourth instance is pure, to exercise rank-deficient square roots
    return catalog.random_pure_state(d, gen) if k % 4 == 3 else catalog.random_state(d, gen)


def _random_channels(gen: SeededGenerator, d: int, count: int, max_kraus: int = 3):
    return [catalog.random_channel(d, int(gen.rng.integers(1, max_kraus + 1)), gen) for _ in range(count)]


def _obs_instance(rho, obs) -> Callable[[], dict]:
    return lambda: {**state_to_json(rho), **observables_to_json(obs)}


def _chan_instance(rho, chans) -> Callable[[], dict]:
    return lambda: {**state_to_json(rho), **channels_to_json(chans)}


def run_equalities(trials: int, seed: int, dims: Sequence[int] = (2, 3), eq_tol: float = 1e-9) -> dict:
    gen = SeededGenerator(seed)
    two_obs = Check("two_observable_identity", eq_tol)
    saturation = Check("difference_bound_saturation_n2", eq_tol)
    chan_identity = Check("two_channel_identity_all_permutations", eq_tol)
    chan_saturation = Check("thm4_equality_N2", eq_tol)
    for d in dims:
        for k in range(trials):
            rho = _random_state(gen, d, k)
            m1, m2 = catalog.random_observable(d, gen), catalog.random_observable(d, gen)
            lhs, rhs = two_observable_identity(rho, m1, m2)
            two_obs(abs(lhs - rhs), _obs_instance(rho, [m1, m2]))
            saturation(abs(lb_tight(rho, [m1, m2]) - lhs), _obs_instance(rho, [m1, m2]))

            e1, e2 = _random_channels(gen, d, 2)
            n = max(len(e1), len(e2))
            inst = _chan_instance(rho, [e1, e2])
            for p1 in permutations(range(n)):
                for p2 in permutations(range(n)):
                    lhs, rhs = two_channel_identity(rho, e1, e2, p1, p2)
                    chan_identity(abs(lhs - rhs), inst)
            chan_saturation(abs(thm4_bound(rho, [e1, e2])[0] - lhs), inst)
    checks = [two_obs, saturation, chan_identity, chan_saturation]
    return _summary("equalities", checks, trials=trials, seed=seed, dims=list(dims))


def run_validity(
    trials: int, seed: int, dims: Sequence[int] = (2, 3), eq_tol: float = 1e-9, channel_dim: int = 2
) -> dict:
    """Every bound stays below the sum it bounds, on random instances."""
    gen = SeededGenerator(seed)
    obs_checks = {name: Check(f"observables_{name}", eq_tol) for name in ("lb0", "lb0bar", "lb1")}
    chan_checks = {name: Check(f"channels_{name}", eq_tol) for name in ("fu_two", "thm3", "thm4")}
    dominance = Check("thm4_dominates_fu_two", 1e-12)
    nonneg = Check("bounds_nonnegative", eq_tol)

    for d in dims:
        for k in range(trials):
            rho = _random_state(gen, d, k)
            obs = [catalog.random_observable(d, gen) for _ in range(3)]
            total = sum_skew(rho, obs)
            inst = _obs_instance(rho, obs)
            for name, fn in (("lb0", lb_pairwise), ("lb0bar", lb_gram), ("lb1", lb_tight)):
                value = fn(rho, obs)
                obs_checks[name](value - total, inst)
                nonneg(-value, inst)

    for k in range(trials):
        rho = _random_state(gen, channel_dim, k)
        pair = _random_channels(gen, channel_dim, 2)
        total = sum(skew_channel(rho, c) for c in pair)
        inst = _chan_instance(rho, pair)
        fu = fu_two_channel(rho, *pair)[0]
        t4 = thm4_bound(rho, pair)[0]
        chan_checks["fu_two"](fu - total, inst)
        chan_checks["thm4"](t4 - total, inst)
        dominance(fu - t4, inst)

        triple = _random_channels(gen, channel_dim, 3)
        total = sum(skew_channel(rho, c) for c in triple)
        inst = _chan_instance(rho, triple)
        t3, t4 = thm3_bound(rho, triple)[0], thm4_bound(rho, triple)[0]
        chan_checks["thm3"](t3 - total, inst)
        chan_checks["thm4"](t4 - total, inst)
        nonneg(-t4, inst)

    checks = [*obs_checks.values(), *chan_checks.values(), dominance, nonneg]
    return _summary("validity", checks, trials=trials, seed=seed, dims=list(dims))


def run_corollary(n_theta: int = 60, n_phi: int = 30, ts: Sequence[float] = (0.25, 0.5, 0.75, 1.0)) -> dict:
    """Qubit/Pauli case: ``LB1 - LB0 = (1 - sqrt(1 - t)) gamma`` and ``gamma >= sqrt(3) - 4/3``."""
    paulis = catalog.pauli_observables()
    identity = Check("lb1_minus_lb0_equals_gamma_term", 1e-8)
    floor = Check("gamma_lower_bound", 1e-6)
    for t in ts:
        factor = 1 - math.sqrt(1 - t)
        for theta in np.linspace(0.0, math.pi, n_theta):
            for phi in np.linspace(0.0, 2 * math.pi, n_phi, endpoint=False):
                rho = catalog.bloch_qubit(BlochVector.spherical(math.sqrt(t), theta, phi))
                diff = lb_tight(rho, paulis) - lb_pairwise(rho, paulis)
                g = float(references.gamma(theta, phi))
                inst = _obs_instance(rho, paulis)
                identity(abs(diff - factor * g), inst)
                floor(references.GAMMA_MIN - diff / factor, inst)
    return _summary("corollary", [identity, floor], grid=[n_theta, n_phi], t=list(ts))


def run(suite: str, trials: int = 200, seed: int = 7, dims: Sequence[int] = (2, 3), eq_tol: float = 1e-9) -> dict:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if suite == "lemmas":
        return run_lemmas(trials, seed)
    if suite == "equalities":
        return run_equalities(trials, seed, dims, eq_tol)
    if suite == "validity":
        return run_validity(trials, seed, dims, eq_tol)
    if suite == "corollary":
        return run_corollary()
    if suite == "all":
        parts = [run(s, trials, seed, dims, eq_tol) for s in SUITES]
        return {"suite": "all", "passed": all(p["passed"] for p in parts), "suites": {p["suite"]: p for p in parts}}
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join((*SUITES, 'all'))}")
