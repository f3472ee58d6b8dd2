"""Euclidean isometries: group laws, invariants, reflection length."""

import random
from fractions import Fraction as Q

from axial.isometry import (
    identity_isometry,
    invariants,
    is_elliptic,
    mov_dim,
    reflection,
    reflection_length,
    translation,
)
from axial.linalg import dot, vec, vscale

from conftest import coxeter


def test_reflection_is_involution():
    r = reflection(vec(1, -1, 0), Q(2))
    assert (r * r).is_identity()
    assert r.check_orthogonal()
    assert not r.is_identity()


def test_reflection_fixes_its_hyperplane():
    alpha = vec(1, -1, 0)
    r = reflection(alpha, Q(3))
    # points x with x . alpha = 3 are fixed
    x = vec(3, 0, 5)
    assert dot(x, alpha) == 3
    assert r(x) == x
    # the normal direction is negated
    assert r.apply_vector(alpha) == vscale(-1, alpha)


def test_translation_and_identity():
    t = translation(vec(1, 2, -3))
    assert t.is_translation() and not t.is_identity()
    assert (t * t.inverse()).is_identity()
    e = identity_isometry(3)
    assert e.is_identity() and reflection_length(e) == 0
    # a translation displaces every point by the same vector: its move-set is
    # a single point, and two reflections suffice to build it
    assert mov_dim(t) == 0 and not is_elliptic(t)
    assert reflection_length(t) == 2


def test_group_laws_random_products():
    rng = random.Random(7)
    cox = coxeter("C", 2)
    refls = cox.nearby_reflections(2)
    for _ in range(30):
        a, b, c = (rng.choice(refls) for _ in range(3))
        assert ((a * b) * c).key() == (a * (b * c)).key()
        u = a * b * c
        assert (u * u.inverse()).is_identity()
        assert u.check_orthogonal()


def test_reflection_length_formula_small_products():
    rng = random.Random(11)
    cox = coxeter("C", 2)
    refls = cox.nearby_reflections(2)
    for _ in range(50):
        k = rng.randrange(0, 4)
        u = identity_isometry(cox.rs.ambient_dim)
        for _ in range(k):
            u = u * rng.choice(refls)
        l = reflection_length(u)
        assert l <= k
        assert (l - k) % 2 == 0  # parity matches the product length


def test_invariants_of_reflection():
    r = reflection(vec(1, -1, 0))
    inv = invariants(r)
    assert inv.mov_dim == 1
    assert is_elliptic(r)
    assert reflection_length(r) == 1
