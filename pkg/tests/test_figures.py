import math

import numpy as np
import pytest

from skewinfo import figures, references
from skewinfo.errors import SkewInfoError
from skewinfo.figures import FigureSpec, render_csv


def _table(text):
    lines = text.splitlines()
    return lines[0].split(","), np.array([[float(v) for v in line.split(",")] for line in lines[1:]])


def test_fig2_first_row():
    header, data = _table(render_csv(FigureSpec("fig2", res=(5,))))
    assert header == ["theta", "sum", "lb1", "lb0", "lb0bar"]
    np.testing.assert_allclose(
        data[0], [0, 1, (6 + 2 * math.sqrt(2)) / 9, (5 - 2 * math.sqrt(2)) / 4, 0.5], atol=1e-11
    )


def test_fig2_matches_closed_forms():
    _, data = _table(render_csv(FigureSpec("fig2", res=(60,))))
    theta = data[:, 0]
    np.testing.assert_allclose(data[:, 1], 1.0, atol=1e-10)
    np.testing.assert_allclose(data[:, 2], references.example1_lb1(theta), atol=1e-10)
    np.testing.assert_allclose(data[:, 3], references.example1_lb0(theta), atol=1e-10)
    np.testing.assert_allclose(data[:, 4], references.example1_lb0bar(theta), atol=1e-10)


def test_fig1_matches_gamma():
    _, data = _table(render_csv(FigureSpec("fig1", res=(12, 24))))
    assert len(data) == 12 * 24
    np.testing.assert_allclose(data[:, 2], references.gamma(data[:, 0], data[:, 1]), atol=1e-9)


def test_fig3_sum_matches_closed_form():
    _, data = _table(render_csv(FigureSpec("fig3", res=(10, 10))))
    np.testing.assert_allclose(data[:, 2], references.spin1_sum(data[:, 0], data[:, 1]), atol=1e-10)
    assert np.all(data[:, 3] >= data[:, 4] - 1e-9)


def test_slices():
    _, d3 = _table(render_csv(FigureSpec("fig3", res=(20,), slice=True)))
    assert d3.shape == (20, 6) and np.all(d3[:, 1] == float(figures.fmt(math.pi / 4)))
    _, d4 = _table(render_csv(FigureSpec("fig4", res=(20,), slice=True)))
    assert d4.shape == (20, 6)
    assert 0 < d4[:, 0].min() and d4[:, 0].max() < math.pi


def test_fig5_shape_and_validity():
    _, data = _table(render_csv(FigureSpec("fig5", res=(30,))))
    assert data.shape == (30, 4)
    assert np.all(data[:, 2] <= data[:, 1] + 1e-9) and np.all(data[:, 3] <= data[:, 1] + 1e-9)


def test_byte_determinism(tmp_path):
    out = tmp_path / "f.csv"
    figures.write_figure(FigureSpec("fig5", res=(25,), out=out))
    first = out.read_bytes()
    figures.write_figure(FigureSpec("fig5", res=(25,), out=out))
    assert out.read_bytes() == first
    assert b"\r" not in first


def test_fmt():
    assert figures.fmt(-0.0) == "0"
    assert figures.fmt(1 / 3) == "0.333333333333"


@pytest.mark.parametrize(
    "kwargs", [{"figure": "fig9"}, {"figure": "fig2", "res": (1,)}, {"figure": "fig2", "slice": True}, {"figure": "fig5", "q": 2.0}]
)
def test_bad_specs(kwargs):
    with pytest.raises(SkewInfoError):
        FigureSpec(**kwargs)
