"""Closed-form reference values for the qubit and spin-1 examples.

These are independent of the matrix pipeline and exist so the pipeline can be
tested against them.  All functions accept scalars or numpy arrays.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

GAMMA_MIN = np.sqrt(3) - 4 / 3


def _t(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or np.any(t > 1 + 1e-12):
        raise DomainError("t = |r|^2 must lie in [0, 1]")
    return np.clip(t, 0.0, 1.0)


def _root(v):
    return np.sqrt(np.maximum(v, 0.0))


def pauli_sum(t):
    """``I(sx) + I(sy) + I(sz) = 2 (1 - sqrt(1 - t))`` for a qubit with ``|r|^2 = t``."""
    return 2 * (1 - np.sqrt(1 - _t(t)))


def example1_lb1(theta):
    s, c = np.sin(2 * theta), np.cos(2 * theta)
    return (2 - s) / 6 + (_root(2 + 2 * s) + _root(3 - c) + _root(3 + c)) ** 2 / 36


def example1_lb0(theta):
    s, c = np.sin(2 * theta), np.cos(2 * theta)
    return 2 - s / 2 - (_root(2 - 2 * s) + _root(3 - c) + _root(3 + c)) ** 2 / 16


def example1_lb0bar(theta):
    return (2 - np.sin(2 * theta)) / 4


def _xyz(x, y, z):
    x, y, z = (np.asarray(v, dtype=float) for v in (x, y, z))
    t = _t(x * x + y * y + z * z)
    if np.any(t == 0):
        raise DomainError("the Cartesian forms are undefined at r = 0")
    return x, y, z, t


def _plus_roots(x, y, z, t):
    return _root(1 + (z * z + 2 * x * y) / t) + _root(1 + (y * y + 2 * x * z) / t) + _root(1 + (x * x + 2 * y * z) / t)


def _minus_roots(x, y, z, t):
    return _root(1 + (z * z - 2 * x * y) / t) + _root(1 + (y * y - 2 * x * z) / t) + _root(1 + (x * x - 2 * y * z) / t)


def alpha(x, y, z):
    x, y, z, t = _xyz(x, y, z)
    return np.sqrt(1 - np.sqrt(1 - t)) * _plus_roots(x, y, z, t)


def beta(x, y, z):
    x, y, z, t = _xyz(x, y, z)
    return np.sqrt(1 - np.sqrt(1 - t)) * _minus_roots(x, y, z, t)


def qubit_lb1(x, y, z):
    """Difference bound for Pauli observables in Cartesian Bloch coordinates."""
    x, y, z, t = _xyz(x, y, z)
    return 2 / 3 * (1 - np.sqrt(1 - t)) * (1 - (x * y + x * z + y * z) / t) + alpha(x, y, z) ** 2 / 9


def qubit_lb0(x, y, z):
    """Pairwise-sum bound for Pauli observables in Cartesian Bloch coordinates."""
    x, y, z, t = _xyz(x, y, z)
    return (1 - np.sqrt(1 - t)) * (4 - 2 * (x * y + x * z + y * z) / t) - beta(x, y, z) ** 2 / 4


def gamma_xyz(x, y, z):
    x, y, z, t = _xyz(x, y, z)
    return (
        -10 / 3
        + 4 * (x * y + x * z + y * z) / (3 * t)
        + _plus_roots(x, y, z, t) ** 2 / 9
        + _minus_roots(x, y, z, t) ** 2 / 4
    )


def gamma(theta, phi):
    """``gamma`` on the unit sphere; its minimum is ``sqrt(3) - 4/3``."""
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    plus = (
        _root(1 + ct**2 + 2 * st**2 * cp * sp)
        + _root(1 + st**2 * sp**2 + 2 * st * ct * cp)
        + _root(1 + st**2 * cp**2 + 2 * st * ct * sp)
    )
    minus = (
        _root(1 + ct**2 - 2 * st**2 * cp * sp)
        + _root(1 + st**2 * sp**2 - 2 * st * ct * cp)
        + _root(1 + st**2 * cp**2 - 2 * st * ct * sp)
    )
    return -10 / 3 + 4 / 3 * (st**2 * cp * sp + st * ct * cp + st * ct * sp) + plus**2 / 9 + minus**2 / 4


def spin1_sum(theta, phi):
    """``I(Lx) + I(Ly) + I(Lz)`` for the spin-1 pure state family."""
    st, ct = np.sin(theta), np.cos(theta)
    sp, cp = np.sin(phi), np.cos(phi)
    return 2 - 2 * st**2 * sp**2 * (ct + st * cp) ** 2 - (ct**2 - st**2 * cp**2) ** 2
