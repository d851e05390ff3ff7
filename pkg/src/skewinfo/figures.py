"""CSV datasets behind the comparison figures.

Every value is produced by the numerical pipeline (states -> square roots ->
commutators -> bounds); the closed forms in :mod:`skewinfo.references` are
only used by the tests to check these numbers.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import catalog
from .catalog import BlochVector
from .channel_bounds import thm3_bound, thm4_bound
from .errors import SkewInfoError
from .observable_bounds import lb_gram, lb_pairwise, lb_tight, sum_skew
from .skew import DensityState, skew_channel

FIGURES = ("fig1", "fig2", "fig3", "fig4", "fig5")

DEFAULT_RES = {"fig1": (120, 240), "fig2": (400,), "fig3": (90, 90), "fig4": (90, 90), "fig5": (400,)}

HEADERS = {
    "fig1": ("theta", "phi", "gamma"),
    "fig2": ("theta", "sum", "lb1", "lb0", "lb0bar"),
    "fig3": ("theta", "phi", "sum", "lb1", "lb0", "lb0bar"),
    "fig4": ("alpha", "beta", "sum", "lb1", "lb0", "lb0bar"),
    "fig5": ("theta", "sum", "thm3", "thm4"),
}


@dataclass
class FigureSpec:
    figure: str
    res: tuple[int, ...] = ()
    q: float = 0.1
    a: float = catalog.QUTRIT_A_MAX
    slice: bool = False
    out: Path | None = None

    def __post_init__(self) -> None:
        if self.figure not in FIGURES:
            raise SkewInfoError(f"unknown figure {self.figure!r}; choose from {', '.join(FIGURES)}")
        default = DEFAULT_RES[self.figure]
        res = tuple(int(r) for r in self.res) or default
        if len(res) == 1 and len(default) == 2:
            res = (res[0], res[0])
        if len(res) != len(default) or any(r < 2 for r in res):
            raise SkewInfoError(f"{self.figure} needs {len(default)} resolution(s) >= 2, got {res}")
        self.res = res
        if self.slice and self.figure not in ("fig3", "fig4"):
            raise SkewInfoError("only fig3 and fig4 have slice variants")
        catalog._check_q(self.q)


def periodic_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """``n`` points of step ``(hi - lo)/n`` starting at ``lo``; ``hi`` excluded."""
    return lo + (hi - lo) * np.arange(n) / n


def open_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """``n`` equally spaced interior points of ``(lo, hi)``."""
    return np.linspace(lo, hi, n + 2)[1:-1]


def observable_row(rho: DensityState, obs) -> tuple[float, float, float, float]:
    return sum_skew(rho, obs), lb_tight(rho, obs), lb_pairwise(rho, obs), lb_gram(rho, obs)


def fig1_rows(res=DEFAULT_RES["fig1"]):
    """``gamma(theta, phi) = LB1 - LB0`` for pure qubits (``t = 1``) and Pauli observables."""
    paulis = catalog.pauli_observables()
    for theta in periodic_grid(0.0, math.pi, res[0]):
        for phi in periodic_grid(0.0, 2 * math.pi, res[1]):
            rho = catalog.bloch_qubit(BlochVector.spherical(1.0, theta, phi))
            yield theta, phi, lb_tight(rho, paulis) - lb_pairwise(rho, paulis)


def fig2_rows(res=DEFAULT_RES["fig2"]):
    paulis = catalog.pauli_observables()
    for theta in np.linspace(0.0, math.pi, res[0]):
        yield (theta, *observable_row(catalog.example1_state(theta), paulis))


def fig3_rows(res=DEFAULT_RES["fig3"], slice: bool = False):
    ls = catalog.spin1_observables()
    phis = [math.pi / 4] if slice else np.linspace(0.0, 2 * math.pi, res[1])
    for theta in np.linspace(0.0, math.pi, res[0]):
        for phi in phis:
            yield (theta, phi, *observable_row(catalog.spin1_pure_state(theta, phi), ls))


def fig4_rows(res=DEFAULT_RES["fig4"], a: float = catalog.QUTRIT_A_MAX, slice: bool = False):
    ls = catalog.spin1_observables()
    betas = [math.pi / 2] if slice else np.linspace(0.0, 2 * math.pi, res[1])
    for alpha in open_grid(0.0, math.pi, res[0]):
        for beta in betas:
            yield (alpha, beta, *observable_row(catalog.qutrit_family(a, alpha, beta), ls))


def example4_channels(q: float):
    return [catalog.phase_damping(q), catalog.amplitude_damping(q), catalog.bit_flip(q)]


def fig5_rows(res=DEFAULT_RES["fig5"], q: float = 0.1):
    chans = example4_channels(q)
    for theta in np.linspace(0.0, math.pi, res[0]):
        rho = catalog.example1_state(theta)
        total = sum(skew_channel(rho, c) for c in chans)
        yield theta, total, thm3_bound(rho, chans)[0], thm4_bound(rho, chans)[0]


def rows(spec: FigureSpec):
    if spec.figure == "fig1":
        return fig1_rows(spec.res)
    if spec.figure == "fig2":
        return fig2_rows(spec.res)
    if spec.figure == "fig3":
        return fig3_rows(spec.res, spec.slice)
    if spec.figure == "fig4":
        return fig4_rows(spec.res, spec.a, spec.slice)
    return fig5_rows(spec.res, spec.q)


def fmt(value: float) -> str:
    # 12 significant digits; normalise -0 so output is byte-stable.
    text = f"{float(value):.12g}"
    return "0" if text == "-0" else text


def render_csv(spec: FigureSpec) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADERS[spec.figure])
    for row in rows(spec):
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def write_figure(spec: FigureSpec) -> str:
    text = render_csv(spec)
    if spec.out is not None:
        Path(spec.out).write_text(text, newline="")
    return text
