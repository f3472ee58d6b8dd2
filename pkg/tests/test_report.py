"""Report rendering: grids, delimited tables, figures."""

import pytest

from axial.report import (
    coarse_grid_text,
    delimited_string,
    render_coarse_grid,
    render_hasse,
)
from axial.winterval import coarse_table

from conftest import coxeter, w_interval


def test_coarse_grid_text(g2):
    table = coarse_table(g2)
    lines = coarse_grid_text(table).splitlines()
    assert len(lines) == 3
    assert lines[0].split() == ["2", "1"]
    assert lines[1].split() == ["6", "6"]
    assert lines[2].split() == ["1", "2"]
    # the middle row is indented one box, the top row two
    assert len(lines[0]) - len(lines[0].lstrip()) > \
        len(lines[1]) - len(lines[1].lstrip()) > 0


def test_delimited_output(g2):
    text = delimited_string(coarse_table(g2).csv_rows())
    lines = [l for l in text.splitlines() if l]
    assert lines[0].startswith("row,kind")
    assert len(lines) == 4


def test_render_coarse_grid(tmp_path, g2):
    out = tmp_path / "grid.png"
    render_coarse_grid(coarse_table(g2), out)
    assert out.exists() and out.stat().st_size > 1000
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_render_hasse(tmp_path):
    iv = w_interval("G", 2)
    out = tmp_path / "hasse.png"
    render_hasse(iv, out)
    assert out.exists() and out.stat().st_size > 1000


def test_render_hasse_refuses_large(tmp_path):
    iv = w_interval("G", 2)
    with pytest.raises(ValueError):
        render_hasse(iv, tmp_path / "no.png", max_elements=10)
    assert not (tmp_path / "no.png").exists()
