"""Exact euclidean isometries and their basic invariants.

An isometry is a pair (A, t) acting as x -> Ax + t with A exactly orthogonal.
Composition follows function composition, right to left:
(A1,t1)*(A2,t2) = (A1 A2, A1 t2 + t1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .linalg import (
    AffineSubspace,
    Mat,
    Vec,
    affine_solve,
    dot,
    identity_mat,
    is_zero_vec,
    mat_json,
    mat_sub,
    matmul,
    matvec,
    project_onto,
    rank,
    rat_str,
    transpose,
    vadd,
    vec_json,
    vscale,
    vsub,
    zero_vec,
)
from .rootdata import Root, coroot


@dataclass(frozen=True)
class Isometry:
    linear: Mat
    translate: Vec
    word: tuple = ()

    def __post_init__(self):
        m = len(self.translate)
        if len(self.linear) != m or any(len(r) != m for r in self.linear):
            raise ValueError("dimension mismatch")

    @property
    def dim(self) -> int:
        return len(self.translate)

    def __call__(self, x: Vec) -> Vec:
        return vadd(matvec(self.linear, x), self.translate)

    def apply_vector(self, v: Vec) -> Vec:
        return matvec(self.linear, v)

    def __mul__(self, other: "Isometry") -> "Isometry":
        return Isometry(
            matmul(self.linear, other.linear),
            vadd(matvec(self.linear, other.translate), self.translate),
            self.word + other.word,
        )

    def inverse(self) -> "Isometry":
        ainv = transpose(self.linear)  # orthogonal
        return Isometry(ainv, vscale(-1, matvec(ainv, self.translate)),
                        tuple(reversed(self.word)))

    def key(self) -> tuple:
        """Canonical dedup key: the exact (linear, translate) data."""
        return (self.linear, self.translate)

    def is_identity(self) -> bool:
        return self.linear == identity_mat(self.dim) and is_zero_vec(self.translate)

    def is_translation(self) -> bool:
        return self.linear == identity_mat(self.dim)

    def check_orthogonal(self) -> bool:
        return matmul(transpose(self.linear), self.linear) == identity_mat(self.dim)

    def json(self) -> dict:
        out = {"linear": mat_json(self.linear), "translate": vec_json(self.translate)}
        if self.word:
            out["word"] = [str(w) for w in self.word]
        return out


def identity_isometry(m: int) -> Isometry:
    return Isometry(identity_mat(m), zero_vec(m))


def translation(v: Vec) -> Isometry:
    return Isometry(identity_mat(len(v)), tuple(v))


def reflection(alpha, k=0, word: tuple = ()) -> Isometry:
    """The reflection fixing the hyperplane {x : x . alpha = k} pointwise."""
    if isinstance(alpha, Root):
        a = alpha.vector
        av = coroot(alpha)
    else:
        a = tuple(alpha)
        av = vscale(Q(2) / dot(a, a), a)
    k = Q(k)
    m = len(a)
    lin = tuple(
        tuple((Q(1) if i == j else Q(0)) - av[i] * a[j] for j in range(m))
        for i in range(m)
    )
    return Isometry(lin, vscale(k, av), word)


@dataclass(frozen=True)
class IsometryInvariants:
    mov: AffineSubspace
    min_set: AffineSubspace
    elliptic: bool
    min_translation: Vec

    @property
    def mov_dim(self) -> int:
        return self.mov.dim


def invariants(u: Isometry) -> IsometryInvariants:
    """Move-set, minimal translation vector, min-set and the elliptic flag."""
    m = u.dim
    AmI = mat_sub(u.linear, identity_mat(m))
    cols = transpose(AmI)
    mov = AffineSubspace.from_data(u.translate, cols)
    mu = vsub(u.translate, project_onto(cols, u.translate))
    elliptic = is_zero_vec(mu)
    # min set: all x with (A - I)x = mu - t
    sol = affine_solve(AmI, vsub(mu, u.translate))
    if sol is None:
        raise AssertionError("min-set cannot be empty")
    return IsometryInvariants(mov=mov, min_set=sol, elliptic=elliptic, min_translation=mu)


def mov_dim(u: Isometry) -> int:
    return rank(mat_sub(u.linear, identity_mat(u.dim)))


def is_elliptic(u: Isometry) -> bool:
    return invariants(u).elliptic


def reflection_length(u: Isometry) -> int:
    """dim mov(u) for elliptic u, dim mov(u) + 2 for hyperbolic u."""
    inv = invariants(u)
    return inv.mov_dim + (0 if inv.elliptic else 2)
