"""Coxeter elements: axis geometry, generator families, factorizations."""

from fractions import Fraction as Q

import pytest

from axial.isometry import reflection_length
from axial.linalg import dot, is_zero_vec, vscale, vsub
from axial.rootdata import EuclideanType

from conftest import coxeter

RANK2 = [("G", 2, None), ("C", 2, None), ("A", 2, (2, 1))]
RANK3 = [("B", 3, None), ("C", 3, None), ("A", 3, (2, 2)), ("A", 3, (3, 1))]


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + RANK3)
def test_axis_is_invariant_line(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    w, nu = cox.w, cox.direction
    # the linear part fixes the direction, and the axis maps to itself
    assert w.apply_vector(nu) == nu
    p0 = cox.axis_point(Q(0))
    p1 = w(p0)
    assert not is_zero_vec(vsub(p1, p0))
    diff = vsub(p1, p0)
    # displacement along the axis is a positive multiple of nu
    ratio = next(d / n for d, n in zip(diff, nu) if n != 0)
    assert ratio > 0
    assert diff == vscale(ratio, nu)


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + RANK3)
def test_period_power_is_translation(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    wp = cox.w
    for _ in range(cox.period_p - 1):
        wp = wp * cox.w
    assert wp.is_translation()
    assert dot(wp.translate, cox.direction) > 0


def test_coxeter_element_is_product_of_all_simples(g2):
    # full reflection length: rank + 1 for a hyperbolic Coxeter element
    assert reflection_length(g2.w) == g2.rs.type.rank + 1
    assert not g2.w.is_translation()


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + RANK3)
def test_generator_families_partition(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    # vertical reflections, horizontal reflections, translations
    for label in cox.R_V:
        iso = cox.label_isometry(label)
        assert reflection_length(iso) == 1
        assert not cox.is_horizontal_root(cox.root_by_index(label.root).vector)
    for label in cox.R_H:
        iso = cox.label_isometry(label)
        assert reflection_length(iso) == 1
        assert cox.is_horizontal_root(cox.root_by_index(label.root).vector)
    for t in cox.T:
        assert t.is_translation()
        assert dot(t.translate, cox.direction) != 0


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + RANK3)
def test_interval_generators_multiply_below_w(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    n = cox.rs.type.rank
    for label, iso in cox.interval_generators():
        quot = iso.inverse() * cox.w
        assert reflection_length(iso) + reflection_length(quot) == n + 1
        assert cox.label_isometry(label).key() == iso.key()


@pytest.mark.parametrize("letter,rank,bigon", RANK2 + RANK3)
def test_horizontal_factorization_reconstructs(letter, rank, bigon):
    cox = coxeter(letter, rank, bigon)
    t, letters = cox.horizontal_factorization()
    from axial.isometry import reflection

    assert t.is_translation()
    assert len(letters) == cox.rank - 1
    u = t
    for root, level in letters:
        u = u * reflection(root, level)
    assert u.key() == cox.w.key()


def test_axial_points_spacing(g2):
    idxs = sorted(g2.axial_points)
    assert len(idxs) >= 3
    s_values = [g2.axial_s[i] for i in idxs]
    gaps = {b - a for a, b in zip(s_values, s_values[1:])}
    # consecutive axial points advance along the axis by one constant gap
    assert all(gap > 0 for gap in gaps)
    assert gaps == {g2.axial_gap}


def test_bfs_reflection_length_matches_formula_rank2():
    cox = coxeter("C", 2)
    import random

    rng = random.Random(3)
    refls = cox.nearby_reflections(2)
    from axial.isometry import identity_isometry

    for _ in range(15):
        u = identity_isometry(cox.rs.ambient_dim)
        for _ in range(rng.randrange(0, 3)):
            u = u * rng.choice(refls)
        got = cox.bfs_reflection_length(u, radius=3)
        assert got == reflection_length(u)
