"""Root systems, extended diagrams, and horizontal decompositions."""

import json
from importlib import resources

import pytest

from axial.linalg import dot, vscale
from axial.rootdata import (
    EuclideanType,
    bond_order,
    build_root_system,
    coroot,
    extended_diagram,
    horizontal_decomposition,
    reflect_vector,
    root_system_json,
)

ALL_TYPES = [
    ("G", 2, None),
    ("C", 2, None),
    ("A", 2, (2, 1)),
    ("B", 3, None),
    ("C", 3, None),
    ("A", 3, (2, 2)),
    ("A", 3, (3, 1)),
    ("D", 4, None),
    ("F", 4, None),
    ("B", 4, None),
    ("C", 4, None),
    ("A", 4, (3, 2)),
    ("A", 4, (4, 1)),
    ("E", 6, None),
    ("E", 7, None),
    ("E", 8, None),
]


def golden(name: str) -> dict:
    path = resources.files("axial") / "data" / "golden" / name
    return json.loads(path.read_text())


@pytest.mark.parametrize("letter,rank,bigon", ALL_TYPES[:13])
def test_root_system_closed_under_reflection(letter, rank, bigon):
    rs = build_root_system(EuclideanType(letter, rank, bigon))
    vectors = {r.vector for r in rs.roots} | {vscale(-1, r.vector) for r in rs.roots}
    for a in rs.roots:
        for b in rs.roots:
            assert reflect_vector(a.vector, b.vector) in vectors


def test_illegal_types_rejected():
    with pytest.raises(ValueError):
        EuclideanType("B", 2)
    with pytest.raises(ValueError):
        EuclideanType("E", 5)
    with pytest.raises(ValueError):
        EuclideanType("A", 3, (3, 2))
    with pytest.raises(ValueError):
        EuclideanType("C", 3, (2, 2))


def test_type_strings():
    assert str(EuclideanType("A", 3, (2, 2))) == "A3(2,2)"
    assert str(EuclideanType("A", 3)) == "A3"
    assert str(EuclideanType("G", 2)) == "G2"


def test_coroot_pairing_is_integral():
    for letter, rank, bigon in ALL_TYPES[:7]:
        rs = build_root_system(EuclideanType(letter, rank, bigon))
        for a in rs.roots:
            for b in rs.roots:
                v = dot(coroot(a), b.vector)
                assert v.denominator == 1


@pytest.mark.parametrize("letter,rank,bigon", ALL_TYPES[:13])
def test_extended_diagram_connected(letter, rank, bigon):
    rs = build_root_system(EuclideanType(letter, rank, bigon))
    dia = extended_diagram(rs)
    seen = {dia.vertices[0]}
    frontier = [dia.vertices[0]]
    while frontier:
        v = frontier.pop()
        for u in dia.neighbors(v):
            if u not in seen:
                seen.add(u)
                frontier.append(u)
    assert seen == set(dia.vertices)
    assert dia.extending_vertex in dia.vertices
    assert dia.vertical_vertex in dia.vertices


def test_bond_orders_dihedral():
    rs = build_root_system(EuclideanType("G", 2))
    dia = extended_diagram(rs)
    orders = sorted(
        bond_order(dia.vertex_roots[i], dia.vertex_roots[j])
        for i in dia.vertices
        for j in dia.vertices
        if i < j and j in dia.neighbors(i)
    )
    assert 6 in orders
    assert dia.edge_labels


@pytest.mark.parametrize("letter,rank,bigon", ALL_TYPES)
def test_horizontal_decomposition_matches_table(letter, rank, bigon):
    t = EuclideanType(letter, rank, bigon)
    rs = build_root_system(t)
    names = [name for name, _ in horizontal_decomposition(rs)]
    assert names == golden("horizontal.json")["components"][str(t)]


def test_root_system_json_shape(g2=None):
    rs = build_root_system(EuclideanType("G", 2))
    payload = root_system_json(rs, extended_diagram(rs))
    blob = json.dumps(payload)
    assert json.loads(blob) == payload
    assert payload["type"] == "G2"
