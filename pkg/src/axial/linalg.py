"""Exact rational linear algebra and affine geometry.

All coordinates are `fractions.Fraction` values; there is no floating point
anywhere in the engine.  Vectors are tuples of Fractions, matrices are tuples
of row tuples.  Affine subspaces carry a canonical representation (reduced
row-echelon direction basis, base point reduced modulo the directions) so that
equality of subspaces is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

Vec = tuple[Q, ...]
Mat = tuple[Vec, ...]


def vec(*entries) -> Vec:
    """Build a vector of Fractions from ints/strings/Fractions."""
    return tuple(Q(e) for e in entries)


def zero_vec(m: int) -> Vec:
    return (Q(0),) * m


def unit_vec(m: int, i: int) -> Vec:
    return tuple(Q(1) if j == i else Q(0) for j in range(m))


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(tuple(Q(e) for e in row) for row in rows)


def identity_mat(m: int) -> Mat:
    return tuple(unit_vec(m, i) for i in range(m))


def zero_mat(rows: int, cols: int) -> Mat:
    return ((Q(0),) * cols,) * rows


def dot(x: Vec, y: Vec) -> Q:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Q(0))


def vadd(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Vec, y: Vec) -> Vec:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Vec) -> Vec:
    c = Q(c)
    return tuple(c * a for a in x)


def vneg(x: Vec) -> Vec:
    return tuple(-a for a in x)


def is_zero_vec(x: Vec) -> bool:
    return all(a == 0 for a in x)


def matvec(A: Mat, x: Vec) -> Vec:
    if A and len(A[0]) != len(x):
        raise ValueError("dimension mismatch")
    return tuple(dot(row, x) for row in A)


def matmul(A: Mat, B: Mat) -> Mat:
    if A and B and len(A[0]) != len(B):
        raise ValueError("dimension mismatch")
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def transpose(A: Mat) -> Mat:
    if not A:
        return ()
    return tuple(zip(*A))


def mat_sub(A: Mat, B: Mat) -> Mat:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def rref(rows: Sequence[Vec]) -> Mat:
    """Reduced row-echelon form with leftmost pivots, zero rows dropped.

    Pivot entries are 1 with zeros above and below, so the result is a
    canonical basis of the row space.
    """
    work = [list(r) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    piv_r = 0
    for c in range(ncols):
        sel = None
        for r in range(piv_r, len(work)):
            if work[r][c] != 0:
                sel = r
                break
        if sel is None:
            continue
        work[piv_r], work[sel] = work[sel], work[piv_r]
        p = work[piv_r][c]
        work[piv_r] = [e / p for e in work[piv_r]]
        for r in range(len(work)):
            if r != piv_r and work[r][c] != 0:
                f = work[r][c]
                work[r] = [e - f * pe for e, pe in zip(work[r], work[piv_r])]
        piv_r += 1
        if piv_r == len(work):
            break
    out = [tuple(r) for r in work[:piv_r] if any(e != 0 for e in r)]
    return tuple(out)


def rank(A: Sequence[Vec]) -> int:
    return len(rref(A))


def pivot_columns(R: Mat) -> list[int]:
    cols = []
    for row in R:
        for c, e in enumerate(row):
            if e != 0:
                cols.append(c)
                break
    return cols


def row_space_contains(R: Mat, x: Vec) -> bool:
    """Whether x lies in the span of the rref rows R."""
    resid = list(x)
    for row in R:
        c = next((i for i, e in enumerate(row) if e != 0), None)
        if c is None:
            continue
        f = resid[c]
        if f != 0:
            for i, e in enumerate(row):
                resid[i] -= f * e
    return all(e == 0 for e in resid)


@dataclass(frozen=True)
class AffineSubspace:
    """An affine subspace in canonical form.

    `directions` is a reduced row-echelon basis of the direction space and
    `base` has a zero entry in every pivot column of `directions`, so two
    equal subspaces have identical representations.
    """

    base: Vec
    directions: Mat

    @staticmethod
    def from_data(base: Vec, directions: Sequence[Vec]) -> "AffineSubspace":
        R = rref(directions)
        b = list(base)
        for row in R:
            c = next(i for i, e in enumerate(row) if e != 0)
            f = b[c]
            if f != 0:
                for i, e in enumerate(row):
                    b[i] -= f * e
        return AffineSubspace(tuple(b), R)

    @property
    def ambient_dim(self) -> int:
        return len(self.base)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def contains(self, x: Vec) -> bool:
        return row_space_contains(self.directions, vsub(x, self.base))

    def translate(self, v: Vec) -> "AffineSubspace":
        return AffineSubspace.from_data(vadd(self.base, v), self.directions)

    def equations(self) -> tuple[Mat, Vec]:
        """Return (A, b) with the subspace equal to {x : Ax = b}."""
        normals = orthogonal_complement(self.directions, self.ambient_dim)
        A = tuple(normals)
        b = tuple(dot(n, self.base) for n in normals)
        return A, b


def point_subspace(x: Vec) -> AffineSubspace:
    return AffineSubspace.from_data(x, ())


def full_subspace(m: int) -> AffineSubspace:
    return AffineSubspace.from_data(zero_vec(m), identity_mat(m))


def affine_solve(A: Mat, b: Vec) -> AffineSubspace | None:
    """Exact solution set {x : Ax = b} in canonical form, or None if empty."""
    if len(A) != len(b):
        raise ValueError("dimension mismatch")
    if not A:
        raise ValueError("empty system has no ambient dimension")
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R = rref(tuple(tuple(r) for r in aug))
    part = [Q(0)] * ncols
    pivots = []
    for row in R:
        c = next(i for i, e in enumerate(row) if e != 0)
        if c == ncols:
            return None
        pivots.append(c)
        part[c] = row[ncols]
    null_basis = _nullspace_from_rref(tuple(tuple(row[:ncols]) for row in R), ncols, pivots)
    return AffineSubspace.from_data(tuple(part), null_basis)


def _nullspace_from_rref(R: Mat, ncols: int, pivots: list[int]) -> Mat:
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * ncols
        v[f] = Q(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return tuple(basis)


def nullspace(A: Sequence[Vec], ncols: int | None = None) -> Mat:
    """Canonical basis of {x : Ax = 0}."""
    if ncols is None:
        if not A:
            raise ValueError("ambient dimension required for empty matrix")
        ncols = len(A[0])
    R = rref(A)
    return _nullspace_from_rref(R, ncols, pivot_columns(R))


def orthogonal_complement(U: Sequence[Vec], ambient_dim: int | None = None) -> Mat:
    """Canonical basis of the orthogonal complement of span(U)."""
    if ambient_dim is None:
        if not U:
            raise ValueError("ambient dimension required for empty family")
        ambient_dim = len(U[0])
    if not U:
        return identity_mat(ambient_dim)
    return rref(nullspace(U, ambient_dim))


def affine_intersect(S1: AffineSubspace, S2: AffineSubspace) -> AffineSubspace | None:
    """Exact intersection of two affine subspaces, or None if empty."""
    if S1.ambient_dim != S2.ambient_dim:
        raise ValueError("dimension mismatch")
    A1, b1 = S1.equations()
    A2, b2 = S2.equations()
    A = A1 + A2
    b = b1 + b2
    if not A:
        return full_subspace(S1.ambient_dim)
    return affine_solve(A, b)


def project_onto(U: Sequence[Vec], x: Vec) -> Vec:
    """Orthogonal projection of x onto span(U)."""
    basis = [v for v in rref(U)]
    if not basis:
        return zero_vec(len(x))
    # Gram-Schmidt without normalization keeps everything rational.
    ortho: list[Vec] = []
    for v in basis:
        w = v
        for u in ortho:
            w = vsub(w, vscale(dot(w, u) / dot(u, u), u))
        if not is_zero_vec(w):
            ortho.append(w)
    out = zero_vec(len(x))
    for u in ortho:
        out = vadd(out, vscale(dot(x, u) / dot(u, u), u))
    return out


def rat_str(x: Q) -> str:
    """Serialize a rational as "p/q", or "p" when q = 1."""
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_parse(s: str) -> Q:
    return Q(s)


def vec_json(x: Vec) -> list[str]:
    return [rat_str(e) for e in x]


def mat_json(A: Mat) -> list[list[str]]:
    return [vec_json(row) for row in A]
