import json
import math

import numpy as np
import pytest

from skewinfo import catalog
from skewinfo.errors import ParseError
from skewinfo.serialization import (
    channels_to_json,
    matrix_from_json,
    matrix_to_json,
    observables_to_json,
    parse_channels,
    parse_number,
    parse_observables,
    parse_state,
    split_targets,
    state_to_json,
)


def test_matrix_round_trip():
    m = np.array([[1 + 2j, -0.5], [3e-17j, math.pi]])
    obj = matrix_to_json(m)
    assert obj["dim"] == 2 and obj["entries"][0][0] == [1.0, 2.0]
    np.testing.assert_array_equal(matrix_from_json(json.loads(json.dumps(obj))), m)


@pytest.mark.parametrize(
    "bad",
    [{"dim": 2, "entries": [[[1, 0]]]}, {"entries": []}, {"dim": 1, "entries": [[["a", 0]]]}, {"dim": 1, "entries": [[1]]}],
)
def test_malformed(bad):
    with pytest.raises(ParseError):
        matrix_from_json(bad)


def test_numbers():
    assert parse_number("0.5") == 0.5
    assert parse_number("pi/3") == pytest.approx(math.pi / 3)
    assert parse_number("-2*pi/3") == pytest.approx(-2 * math.pi / 3)
    assert parse_number("1e-3") == 1e-3
    with pytest.raises(ParseError):
        parse_number("import os")


def test_split():
    assert split_targets("pd:0.1,ad:0.1,bf:0.1") == ["pd:0.1", "ad:0.1", "bf:0.1"]
    assert split_targets("pauli.x,pauli.z") == ["pauli.x", "pauli.z"]


def test_named_objects():
    np.testing.assert_allclose(parse_state("bloch:0,0,1").matrix, np.diag([1, 0]))
    np.testing.assert_allclose(parse_state("example1:pi/3").matrix, catalog.example1_state(math.pi / 3).matrix)
    assert parse_state("mixed:3").dim == 3
    assert parse_state("qutrit:0.5,pi/2,0").dim == 3
    assert parse_state("spin1:pi/4,pi/4").dim == 3
    assert len(parse_observables("pauli")) == 3
    np.testing.assert_array_equal(parse_observables("spin1.z")[0].matrix, catalog.L_Z)
    assert [len(c) for c in parse_channels("pd:0.1,ad:0.1,bf:0.1,id:2")] == [2, 2, 2, 1]
    for bad in ("nope:1", "bloch:1,2"):
        with pytest.raises(ParseError):
            parse_state(bad)
    with pytest.raises(ParseError):
        parse_observables("pauli.w")
    with pytest.raises(ParseError):
        parse_channels("xx:0.1")


def test_files(tmp_path):
    rho = catalog.random_state(2, catalog.SeededGenerator(3))
    (tmp_path / "rho.json").write_text(json.dumps(state_to_json(rho)))
    (tmp_path / "obs.json").write_text(json.dumps(observables_to_json(catalog.pauli_observables())))
    (tmp_path / "ch.json").write_text(json.dumps(channels_to_json([catalog.phase_damping(0.2)])))
    np.testing.assert_array_equal(parse_state(str(tmp_path / "rho.json")).matrix, rho.matrix)
    assert len(parse_observables(str(tmp_path / "obs.json"))) == 3
    assert len(parse_channels("@" + str(tmp_path / "ch.json"))) == 1
    with pytest.raises(ParseError):
        parse_state(str(tmp_path / "missing.json"))
