"""Matrix JSON interchange format and the named-object shorthand used by the CLI.

Matrix JSON::

    {"dim": d, "entries": [[[re, im], ...], ...]}    # row-major

Wrappers: ``{"rho": M}``, ``{"observable": M}``, ``{"observables": [M, ...]}``,
``{"kraus": [M, ...]}`` and ``{"channels": [{"kraus": [...]}, ...]}``.

Named objects (``name:args``, numbers may use ``pi``, e.g. ``2*pi/3``)::

    states       bloch:x,y,z  example1:theta  spin1:theta,phi
                 qutrit:a,alpha,beta  mixed:d
    observables  pauli  pauli.x|y|z  spin1  spin1.x|y|z
    channels     pd:q  ad:q  bf:q  id:d

Anything ending in ``.json`` (or prefixed with ``@``) is read as a file.
"""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

import numpy as np

from . import catalog
from .errors import ParseError
from .linalg import as_matrix
from .skew import DensityState, KrausChannel, Observable


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    return {"dim": int(m.shape[0]), "entries": [[[float(z.real), float(z.imag)] for z in row] for row in m]}


def matrix_from_json(obj) -> np.ndarray:
    try:
        d = int(obj["dim"])
        rows = obj["entries"]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ParseError(f"entries are not {d}x{d}")
        m = np.array([[complex(float(re_), float(im)) for re_, im in row] for row in rows])
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix JSON: {exc}") from exc
    return as_matrix(m)


def state_to_json(rho: DensityState) -> dict:
    return {"rho": matrix_to_json(rho.matrix)}


def observables_to_json(obs) -> dict:
    return {"observables": [matrix_to_json(o.matrix) for o in obs]}


def channel_to_json(ch: KrausChannel) -> dict:
    return {"kraus": [matrix_to_json(k) for k in ch.kraus]}


def channels_to_json(chans) -> dict:
    return {"channels": [channel_to_json(c) for c in chans]}


_NUMBER = re.compile(r"^\s*(-?)\s*([0-9.eE+\-]+|pi)((?:\s*[*/]\s*(?:[0-9.eE+\-]+|pi))*)\s*$")


def parse_number(text: str) -> float:
    """Float literal optionally multiplied/divided by ``pi`` or other literals."""
    m = _NUMBER.match(text)
    if not m:
        raise ParseError(f"not a number: {text!r}")

    def atom(tok: str) -> float:
        try:
            return math.pi if tok == "pi" else float(tok)
        except ValueError as exc:
            raise ParseError(f"not a number: {text!r}") from exc

    value = atom(m.group(2))
    for op, tok in re.findall(r"([*/])\s*([0-9.eE+\-]+|pi)", m.group(3)):
        value = value * atom(tok) if op == "*" else value / atom(tok)
    return -value if m.group(1) else value


def _args(spec: str, name: str, count: int) -> list[float]:
    parts = [p for p in spec.split(",") if p.strip()] if spec else []
    if len(parts) != count:
        raise ParseError(f"{name} expects {count} argument(s), got {spec!r}")
    return [parse_number(p) for p in parts]


def _is_file(spec: str) -> bool:
    return spec.startswith("@") or spec.endswith(".json")


def _load(spec: str) -> dict:
    path = Path(spec[1:] if spec.startswith("@") else spec)
    try:
        return json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def parse_state(spec: str) -> DensityState:
    if _is_file(spec):
        obj = _load(spec)
        return DensityState(matrix_from_json(obj["rho"] if "rho" in obj else obj))
    name, _, rest = spec.partition(":")
    name = name.strip().lower()
    if name == "bloch":
        return catalog.bloch_qubit(_args(rest, name, 3))
    if name == "example1":
        return catalog.example1_state(*_args(rest, name, 1))
    if name == "spin1":
        return catalog.spin1_pure_state(*_args(rest, name, 2))
    if name == "qutrit":
        return catalog.qutrit_family(*_args(rest, name, 3))
    if name == "mixed":
        d = int(_args(rest, name, 1)[0])
        return DensityState(np.eye(d) / d)
    raise ParseError(f"unknown state spec {spec!r}")


_AXES = {"x": 0, "y": 1, "z": 2}


def parse_observables(spec: str) -> list[Observable]:
    if _is_file(spec):
        obj = _load(spec)
        if "observables" in obj:
            return [Observable(matrix_from_json(m)) for m in obj["observables"]]
        return [Observable(matrix_from_json(obj["observable"] if "observable" in obj else obj))]
    out: list[Observable] = []
    for part in split_targets(spec):
        name, _, axis = part.strip().lower().partition(".")
        family = {"pauli": catalog.pauli_observables, "spin1": catalog.spin1_observables}.get(name)
        if family is None or (axis and axis not in _AXES):
            raise ParseError(f"unknown observable spec {part!r}")
        ops = family()
        out.extend([ops[_AXES[axis]]] if axis else ops)
    return out


def parse_channels(spec: str) -> list[KrausChannel]:
    if _is_file(spec):
        obj = _load(spec)
        if "channels" in obj:
            return [KrausChannel([matrix_from_json(k) for k in c["kraus"]]) for c in obj["channels"]]
        return [KrausChannel([matrix_from_json(k) for k in obj["kraus"]])]
    out: list[KrausChannel] = []
    for part in split_targets(spec):
        name, _, rest = part.strip().partition(":")
        name = name.lower()
        makers = {"pd": catalog.phase_damping, "ad": catalog.amplitude_damping, "bf": catalog.bit_flip}
        if name in makers:
            out.append(makers[name](*_args(rest, name, 1)))
        elif name == "id":
            out.append(catalog.identity_channel(int(_args(rest, name, 1)[0])))
        else:
            raise ParseError(f"unknown channel spec {part!r}")
    return out


def split_targets(spec: str) -> list[str]:
    """Split ``pd:0.1,ad:0.1`` into items; commas inside argument lists are kept."""
    return [p for p in re.split(r",(?=\s*[A-Za-z@])(?!\s*pi\b)", spec) if p.strip()]
