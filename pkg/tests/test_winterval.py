"""Windowed reflection intervals [1, w] and the coarse census."""

import json
import time
from fractions import Fraction as Q
from importlib import resources

import pytest

from axial.isometry import reflection_length
from axial.poset import complement_map
from axial.winterval import (
    BOTTOM,
    MIDDLE,
    TOP,
    classify_row,
    coarse_table,
    hom_from_isometry,
    hom_inverse,
    hom_mul,
    hom_reflection_length,
    interval_rows,
    isometry_from_hom,
    project_down,
    project_up,
)
from axial.cryst import window_stability

from conftest import coxeter, w_interval


def golden(name: str) -> dict:
    path = resources.files("axial") / "data" / "golden" / name
    return json.loads(path.read_text())


def test_g2_interval_shape(g2):
    iv = w_interval("G", 2)
    iv.check_bounded()
    assert iv.payload[iv.keys[iv.bottom]].is_identity()
    assert iv.payload[iv.keys[iv.top]].key() == g2.w.key()
    assert set(iv.weights) == {0, 1, 2, 3}
    # weights are the exact reflection lengths
    for k in iv.keys:
        assert iv.weight_of(k) == reflection_length(iv.payload[k])


def test_g2_interval_complements(g2):
    iv = w_interval("G", 2)
    # complements may leave the finite window, but those that stay are a
    # partial order-reversing bijection
    comp = complement_map(iv, key_of=lambda u: u.key(), strict=False)
    assert len(comp) > len(iv) // 2
    for k, ck in comp.items():
        assert iv.weight_of(k) + iv.weight_of(ck) == 3  # rank + 1


def test_g2_interval_edges_are_reflections(g2):
    iv = w_interval("G", 2)
    for a, b in iv.hasse_edges():
        quot = iv.payload[a].inverse() * iv.payload[b]
        assert reflection_length(quot) == 1


@pytest.mark.parametrize("letter,rank,bigon",
                         [("G", 2, None), ("C", 2, None), ("A", 2, (2, 1))])
def test_rows_partition_rank2(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    iv = w_interval(letter, rank, bigon)
    rows = interval_rows(cox, iv)
    assert set(rows.values()) == {BOTTOM, MIDDLE, TOP}
    assert rows[iv.keys[iv.bottom]] == BOTTOM
    assert rows[iv.keys[iv.top]] == TOP
    # projections land in the stated rows and bound the element
    for k in iv.keys:
        if rows[k] != MIDDLE:
            continue
        up = project_up(cox, iv, k)
        down = project_down(cox, iv, k)
        assert rows[up] == TOP and rows[down] == BOTTOM
        assert iv.leq(k, up) and iv.leq(down, k)


def test_classify_row_basics(g2):
    assert classify_row(g2.w, g2.direction) == TOP
    from axial.isometry import identity_isometry

    assert classify_row(identity_isometry(g2.rs.ambient_dim),
                        g2.direction) == BOTTOM


def test_hom_round_trip(g2):
    iv = w_interval("G", 2)
    dim = g2.rs.ambient_dim
    for k in iv.keys:
        u = iv.payload[k]
        h = hom_from_isometry(u)
        assert isometry_from_hom(h, dim).key() == u.key()
        assert hom_reflection_length(h) == reflection_length(u)
        hi = hom_inverse(h)
        assert isometry_from_hom(hi, dim).key() == u.inverse().key()
    us = [iv.payload[k] for k in iv.keys[:8]]
    for a in us:
        for b in us:
            assert hom_mul(hom_from_isometry(a), hom_from_isometry(b)) == \
                hom_from_isometry(a * b)


def test_g2_coarse_table_matches_golden_fast(g2):
    t0 = time.monotonic()
    table = coarse_table(g2)
    elapsed = time.monotonic() - t0
    g = golden("coarse_g2.json")
    assert table.json() == {k: v for k, v in g.items() if k != "description"}
    assert elapsed < 1.0


@pytest.mark.parametrize("letter,rank,bigon",
                         [("C", 2, None), ("A", 2, (2, 1)), ("B", 3, None)])
def test_coarse_table_symmetry(letter, rank, bigon):
    table = coarse_table(coxeter(letter, rank, bigon))
    assert table.top == tuple(reversed(table.bottom))
    assert table.bottom[0] == 1
    assert all(v > 0 for v in table.bottom + table.middle + table.top)


@pytest.mark.parametrize("letter,rank,bigon",
                         [("G", 2, None), ("C", 2, None), ("A", 2, (2, 1))])
def test_coarse_census_window_stable(letter, rank, bigon):
    from axial.rootdata import EuclideanType, build_root_system

    rs = build_root_system(EuclideanType(letter, rank, bigon))
    assert window_stability(rs)


def test_coarse_csv_rows(g2):
    rows = coarse_table(g2).csv_rows()
    assert rows[0][0] == "row"
    assert len(rows) == 4
