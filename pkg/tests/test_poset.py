"""Graded bounded posets: order queries, lattice checks, bowtie detection."""

from fractions import Fraction as Q
from itertools import combinations

import pytest

from axial.poset import (
    Interval,
    complement_map,
    interval_from_order,
    interval_json,
    project_to,
)


def boolean_lattice(n: int) -> Interval:
    """Subsets of {0..n-1} ordered by inclusion."""
    subsets = []
    for size in range(n + 1):
        for c in combinations(range(n), size):
            subsets.append((frozenset(c), Q(size), set(c)))
    return interval_from_order(subsets, lambda a, b: a <= b)


def bowtie_poset() -> Interval:
    """Bottom, top, and a four-element bowtie in between."""
    elems = [("bot", Q(0), None), ("a", Q(1), None), ("b", Q(1), None),
             ("c", Q(2), None), ("d", Q(2), None), ("top", Q(3), None)]
    below = {("bot", x) for x in "abcd"} | {("bot", "top"), ("bot", "bot")}
    below |= {(x, "top") for x in "abcd"}
    below |= {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}
    below |= {(x, x) for x in "abcd"} | {("top", "top")}
    return interval_from_order(elems, lambda a, b: (a, b) in below)


def test_boolean_lattice_is_lattice():
    B = boolean_lattice(3)
    assert len(B) == 8
    B.check_bounded()
    assert B.is_lattice()
    assert B.find_bowtie() is None
    assert B.meet(frozenset({0, 1}), frozenset({1, 2})) == frozenset({1})
    assert B.join(frozenset({0}), frozenset({2})) == frozenset({0, 2})
    assert B.leq(frozenset(), frozenset({1}))
    assert not B.leq(frozenset({0}), frozenset({1}))
    assert sorted(B.rank_counts().items()) == [(0, 1), (1, 3), (2, 3), (3, 1)]


def test_boolean_lattice_atoms_and_edges():
    B = boolean_lattice(3)
    assert sorted(len(a) for a in B.atoms()) == [1, 1, 1]
    edges = B.hasse_edges()
    assert len(edges) == 12  # 3 + 6 + 3 cover relations
    for a, b in edges:
        assert B.leq(a, b) and len(b) == len(a) + 1


def test_bowtie_detected():
    P = bowtie_poset()
    P.check_bounded()
    bt = P.find_bowtie()
    assert bt is not None
    assert {bt.a, bt.b, bt.c, bt.d} == {"a", "b", "c", "d"}
    assert bt.kind in ("join", "meet")
    assert not P.is_lattice()
    assert P.join("a", "b") is None
    assert P.meet("c", "d") is None


def test_bowtie_restriction():
    P = bowtie_poset()
    assert P.find_bowtie(restrict=["bot", "a", "c", "top"]) is None


def test_complement_map_dihedral():
    from axial.garside import dihedral_interval

    iv = dihedral_interval(5)
    comp = complement_map(iv)  # asserts bijectivity and order reversal
    assert set(comp) == set(iv.keys)
    top = iv.payload[iv.keys[iv.top]]
    for k, ck in comp.items():
        assert iv.payload[k] * iv.payload[ck] == top


def test_project_to_extrema():
    B = boolean_lattice(3)
    got = project_to(B, frozenset({0, 1}),
                     [frozenset(), frozenset({0})], upward=False)
    assert got == frozenset({0})
    got = project_to(B, frozenset({0}),
                     [frozenset({0, 1}), frozenset(range(3))], upward=True)
    assert got == frozenset({0, 1})


def test_interval_json_round_trips():
    import json

    B = boolean_lattice(2)
    payload = interval_json(B, label_str=lambda k: "".join(map(str, sorted(k))))
    assert json.loads(json.dumps(payload)) == payload
    assert len(payload["elements"]) == 4
    assert payload["bottom"] != payload["top"]


def test_weights_must_grade_covers():
    B = boolean_lattice(2)
    for a, b in B.hasse_edges():
        assert B.weight_of(b) - B.weight_of(a) > 0
    assert B.weight_of(B.keys[B.bottom]) == 0
