"""Intervals [1, w] below a Coxeter element in the reflection-length order.

Two builders share the same expansion rule (multiply by a reflection lying
below the current complement):

* `build_w_interval` materializes the interval elements inside the generator
  window of a `CoxeterElement`, with labeled cover edges, as a `poset.Interval`.
* `coarse_table` classifies the whole (infinite) interval into the three coarse
  rows, counting translation-conjugacy families in the middle row.  It runs on
  scaled-integer homogeneous matrices so that large ranks stay tractable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q

from .coxeter import CoxeterElement, GeneratorLabel, HREFL, VREFL
from .isometry import Isometry, identity_isometry, invariants, reflection, reflection_length
from .linalg import Vec, dot
from .poset import Interval
from .rootdata import Root, coroot

BOTTOM, MIDDLE, TOP = "bottom", "middle", "top"


def classify_row(u: Isometry, nu: Vec) -> str:
    """Coarse row of an interval element relative to the axis direction nu."""
    inv = invariants(u)
    if not inv.elliptic:
        return TOP
    return BOTTOM if u.apply_vector(nu) == nu else MIDDLE


def reflections_below_elliptic(cox: CoxeterElement, v: Isometry) -> list[tuple[Root, Q]]:
    """Arrangement reflections r with Fix(v) inside the hyperplane of r."""
    inv = invariants(v)
    fix = inv.min_set
    out = []
    for root in cox.horizontal_roots + cox.vertical_roots:
        a = root.vector
        if any(dot(a, d) != 0 for d in fix.directions):
            continue
        k = dot(a, fix.base)
        if k.denominator != 1:
            continue
        out.append((root, k))
    return out


def reflections_below_hyperbolic(cox: CoxeterElement, v: Isometry,
                                 mod_period: bool) -> list[tuple[Root, Q]]:
    """Arrangement reflections r with additive length below a hyperbolic v.

    With `mod_period` the vertical levels run over one full residue system of
    the period shift (enough to hit every translation-conjugacy family once);
    otherwise they run over the whole generator window.
    """
    return _hyperbolic_candidates(cox, hom_from_isometry(v), mod_period)


def _scaled_ints(vec) -> tuple[tuple[int, ...], int]:
    den = 1
    for e in vec:
        den = den * e.denominator // math.gcd(den, e.denominator)
    return tuple(int(e * den) for e in vec), den


def _root_hom_data(cox: CoxeterElement, root: Root):
    """Cached integer data per root: reflection at level 0 as a homogeneous
    matrix, plus the scaled-integer coroot and root vectors."""
    cache = cox.__dict__.setdefault("_refl_hom_cache", {})
    key = id(root)
    if key not in cache:
        cnum, cden = _scaled_ints(coroot(root))
        anum, aden = _scaled_ints(root.vector)
        cache[key] = (hom_from_isometry(reflection(root, 0)),
                      cnum, cden, anum, aden)
    return cache[key]


def _family_lengths(p0: Hom, cnum: tuple[int, ...], cden: int,
                    ks: range) -> list[int]:
    """Reflection lengths of the isometries obtained from p0 by adding
    k * (cnum / cden) to the translate part, one per k.

    The moved-space linear block is shared across the family, so a single
    fraction-free elimination answers every k: the length is the linear rank
    plus 0 or 2 according to whether the shifted translate column stays in
    the column space (elliptic) or leaves it (hyperbolic).
    """
    s, rows = p0
    m = len(rows) - 1
    work = []
    for i in range(m):
        lin = [(rows[i][j] - (s if i == j else 0)) * cden for j in range(m)]
        base = rows[i][m] * cden
        step = s * cnum[i]
        work.append(lin + [base + k * step for k in ks])
    r = 0
    for c in range(m):
        sel = next((i for i in range(r, m) if work[i][c] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(r + 1, m):
            if work[i][c] != 0:
                f, p = work[i][c], work[r][c]
                work[i] = [e * p - f * pe for e, pe in zip(work[i], work[r])]
        r += 1
    out = []
    for idx in range(len(ks)):
        c = m + idx
        elliptic = all(work[i][c] == 0 for i in range(r, m))
        out.append(r + (0 if elliptic else 2))
    return out


def _root_window(cox: CoxeterElement, root: Root, mod_period: bool) -> range:
    """Candidate levels for one hyperplane family (state-independent)."""
    cache = cox.__dict__.setdefault("_root_ks_cache", {})
    key = (id(root), mod_period)
    if key not in cache:
        a = root.vector
        c = dot(a, cox.axis_base)
        per = dot(a, cox.direction)
        if per == 0:
            ks = range(math.floor(c) - 1, math.ceil(c) + 2)
        elif mod_period:
            if per.denominator != 1:
                raise AssertionError("vertical period shift must be integral")
            ks = range(math.ceil(c), math.ceil(c) + int(per))
        else:
            cw = cox.window_mult
            ks = range(math.ceil(c + per * -cw), math.floor(c + per * cw) + 1)
        cache[key] = ks
    return cache[key]


def _refl_mul_hom(anum: tuple[int, ...], aden: int, cnum: tuple[int, ...],
                  cden: int, h: Hom) -> Hom:
    """Left product (reflection at level 0) * h as a rank-one update."""
    s, rows = h
    m = len(rows) - 1
    proj = [sum(anum[l] * rows[l][j] for l in range(m)) for j in range(m + 1)]
    d = aden * cden
    new = [[rows[i][j] * d - cnum[i] * proj[j] for j in range(m + 1)]
           for i in range(m)]
    new.append([e * d for e in rows[m]])
    return _hom_norm(s * d, new)


def _hyperbolic_candidates(cox: CoxeterElement, v_hom: Hom,
                           mod_period: bool) -> list[tuple[Root, Q]]:
    lv = hom_reflection_length(v_hom)
    out = []
    for root in cox.horizontal_roots + cox.vertical_roots:
        ks = _root_window(cox, root, mod_period)
        if len(ks) == 0:
            continue
        _, cnum, cden, anum, aden = _root_hom_data(cox, root)
        p0 = _refl_mul_hom(anum, aden, cnum, cden, v_hom)
        for k, length in zip(ks, _family_lengths(p0, cnum, cden, ks)):
            if length == lv - 1:
                out.append((root, Q(k)))
    return out


def _hom_fixed_space(h: Hom):
    """Fixed affine subspace of an elliptic isometry in integer form.

    Returns (directions, base_num, base_den) with integer direction vectors
    spanning the linear part of the fixed space and a rational base point
    base_num / base_den; None when there is no fixed point.
    """
    s, rows = h
    m = len(rows) - 1
    work = [[rows[i][j] - (s if i == j else 0) for j in range(m)]
            + [-rows[i][m]] for i in range(m)]
    piv: list[tuple[int, int]] = []
    r = 0
    for c in range(m):
        sel = next((i for i in range(r, m) if work[i][c] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(m):
            if i != r and work[i][c] != 0:
                f, p = work[i][c], work[r][c]
                work[i] = [e * p - f * pe for e, pe in zip(work[i], work[r])]
        piv.append((r, c))
        r += 1
    if any(work[i][m] != 0 for i in range(r, m)):
        return None
    pivot_cols = {c for (_, c) in piv}
    scale = 1
    for (i, c) in piv:
        p = abs(work[i][c])
        scale = scale * p // math.gcd(scale, p)
    base = [0] * m
    for (i, c) in piv:
        base[c] = work[i][m] * (scale // abs(work[i][c])) * (1 if work[i][c] > 0 else -1)
    dirs = []
    for f in range(m):
        if f in pivot_cols:
            continue
        d = [0] * m
        d[f] = scale
        for (i, c) in piv:
            d[c] = -work[i][f] * (scale // abs(work[i][c])) * (1 if work[i][c] > 0 else -1)
        g = 0
        for e in d:
            g = math.gcd(g, e)
        dirs.append(tuple(e // (g or 1) for e in d))
    return dirs, tuple(base), scale


def _elliptic_candidates(cox: CoxeterElement, v_hom: Hom) -> list[tuple[Root, Q]]:
    """Arrangement reflections whose hyperplane contains the fixed space of an
    elliptic complement; integer counterpart of `reflections_below_elliptic`."""
    fix = _hom_fixed_space(v_hom)
    if fix is None:
        raise AssertionError("elliptic complement must have a fixed point")
    dirs, base_num, base_den = fix
    out = []
    for root in cox.horizontal_roots + cox.vertical_roots:
        _, _, _, anum, aden = _root_hom_data(cox, root)
        if any(sum(x * y for x, y in zip(anum, d)) != 0 for d in dirs):
            continue
        num = sum(x * y for x, y in zip(anum, base_num))
        den = aden * base_den
        if num % den:
            continue
        out.append((root, Q(num // den)))
    return out


def _classify_row_hom(h: Hom, nu_num: tuple[int, ...]) -> str:
    d, ell = _hom_lengths(h)
    if not ell:
        return TOP
    s, rows = h
    m = len(rows) - 1
    for i in range(m):
        if sum(rows[i][j] * nu_num[j] for j in range(m)) != s * nu_num[i]:
            return MIDDLE
    return BOTTOM


def _expansion_candidates(cox: CoxeterElement, v: Isometry,
                          mod_period: bool) -> list[tuple[Root, Q]]:
    """Necessary candidates for reflections dividing the complement v.

    Every reflection genuinely below v passes these tests, but a candidate may
    still fail to divide v inside the discrete group; the two-sided complement
    certificate applied afterwards removes such candidates exactly.
    """
    if invariants(v).elliptic:
        return reflections_below_elliptic(cox, v)
    return reflections_below_hyperbolic(cox, v, mod_period=mod_period)


def build_w_interval(cox: CoxeterElement) -> Interval:
    """The elements of [1, w] whose reflections stay inside the window.

    Phase 1 grows candidate levels by right-multiplication with admissible
    window reflections; phase 2 keeps an element of candidate level j exactly
    when its complement is a candidate at level n+1-j.  A kept element is then
    certified: it is a product of j group reflections whose complement is a
    product of n+1-j group reflections, which forces additive length on both
    sides.
    """
    w = cox.w
    n1 = cox.rank + 1
    labels = {(g.root, g.k): g for g in cox.R_H + cox.R_V}
    root_idx = {id(r): cox.rs.root_index(r.vector)
                for r in cox.horizontal_roots + cox.vertical_roots}
    refl_cache: dict[tuple, Isometry] = {}
    ident = identity_isometry(w.dim)
    elements: dict[tuple, tuple[Isometry, int]] = {ident.key(): (ident, 0)}
    edges: list[tuple[tuple, tuple, GeneratorLabel]] = []
    frontier = [ident]
    for j in range(n1):
        nxt = []
        for u in frontier:
            v = u.inverse() * w
            v_hom = hom_from_isometry(v)
            _, ell = _hom_lengths(v_hom)
            cands = (_elliptic_candidates(cox, v_hom) if ell
                     else _hyperbolic_candidates(cox, v_hom, mod_period=False))
            for root, k in cands:
                lab = labels.get((root_idx[id(root)], k))
                if lab is None:
                    continue  # reflection falls outside the materialized window
                r = refl_cache.get((id(root), k))
                if r is None:
                    r = refl_cache[(id(root), k)] = reflection(root, k)
                x = u * r
                if hom_reflection_length(hom_from_isometry(x)) != j + 1:
                    continue
                kx = x.key()
                if kx not in elements:
                    elements[kx] = (x, j + 1)
                    nxt.append(x)
                elif elements[kx][1] != j + 1:
                    raise AssertionError("interval element found at two levels")
                edges.append((u.key(), kx, lab))
        frontier = nxt
    # certification: keep x iff its complement is reachable at the co-level
    certified = {
        key for key, (iso, lvl) in elements.items()
        if elements.get((iso.inverse() * w).key(), (None, -1))[1] == n1 - lvl
    }
    if w.key() not in certified or ident.key() not in certified:
        raise AssertionError("interval endpoints failed certification")
    items = [(key, Q(lvl), iso) for key, (iso, lvl) in elements.items()
             if key in certified]
    kept_edges: list[tuple[tuple, tuple, GeneratorLabel | None]] = [
        (a, b, lab) for (a, b, lab) in edges if a in certified and b in certified
    ]
    # exact order completion between adjacent levels: u <= v iff u^{-1} v is a
    # group reflection (at any level, including outside the window); this
    # recovers relations whose connecting reflections were not materialized
    known = {(a, b) for (a, b, _) in kept_edges}
    refl_linears = {
        reflection(root, 0).linear: root
        for root in cox.vertical_roots + cox.horizontal_roots
    }
    certs = [(key, iso, lvl) for key, (iso, lvl) in elements.items()
             if key in certified]
    for ku, u, lu in certs:
        ui = u.inverse()
        for kv, v, lv in certs:
            if lv != lu + 1 or (ku, kv) in known:
                continue
            x = ui * v
            root = refl_linears.get(x.linear)
            if root is None:
                continue
            k = dot(root.vector, x.translate) / 2
            if k.denominator == 1 and x.key() == reflection(root, k).key():
                kept_edges.append((ku, kv, None))
    return Interval(items, kept_edges)


def interval_rows(cox: CoxeterElement, interval: Interval) -> dict:
    """Coarse row of every interval element (cached on the interval)."""
    cached = getattr(interval, "_row_map", None)
    if cached is None:
        cached = {k: classify_row(interval.payload[k], cox.direction)
                  for k in interval.keys}
        interval._row_map = cached
    return cached


def project_up(cox: CoxeterElement, interval: Interval, key):
    """Unique minimal top-row element above a middle-row element (identity on
    the top row itself)."""
    rows = interval_rows(cox, interval)
    if rows[key] == TOP:
        return key
    from .poset import project_to
    return project_to(interval, key,
                      [k for k, r in rows.items() if r == TOP], upward=True)


def project_down(cox: CoxeterElement, interval: Interval, key):
    """Unique maximal bottom-row element below a middle-row element (identity
    on the bottom row itself)."""
    rows = interval_rows(cox, interval)
    if rows[key] == BOTTOM:
        return key
    from .poset import project_to
    return project_to(interval, key,
                      [k for k, r in rows.items() if r == BOTTOM], upward=False)


# -- coarse table ---------------------------------------------------------


@dataclass(frozen=True)
class CoarseTable:
    """Row/length census of [1, w]: element counts in the bottom and top rows,
    translation-conjugacy family counts in the middle row."""

    rank: int
    bottom: tuple[int, ...]  # lengths 0 .. n-1
    middle: tuple[int, ...]  # lengths 1 .. n
    top: tuple[int, ...]  # lengths 2 .. n+1

    def json(self) -> dict:
        return {
            "rank": self.rank,
            "bottom": list(self.bottom),
            "middle": list(self.middle),
            "top": list(self.top),
        }

    def csv_rows(self) -> list[list[str]]:
        n = self.rank
        rows = [["row", "kind"] + [str(l) for l in range(n + 2)]]
        pad = lambda pre, vals, post: pre + [str(v) for v in vals] + post
        rows.append(["top", "elements"] + pad(["", ""], self.top, []))
        rows.append(["middle", "families"] + pad([""], self.middle, [""]))
        rows.append(["bottom", "elements"] + pad([], self.bottom, ["", ""]))
        return rows


# scaled-integer homogeneous matrices: (scale, rows) represents rows / scale,
# with the last homogeneous row equal to (0, ..., 0, scale).
Hom = tuple[int, tuple[tuple[int, ...], ...]]


def _hom_norm(scale: int, rows: list[list[int]]) -> Hom:
    g = scale
    for r in rows:
        for e in r:
            g = math.gcd(g, e)
    if g > 1:
        rows = [[e // g for e in r] for r in rows]
        scale //= g
    return scale, tuple(tuple(r) for r in rows)


def hom_from_isometry(u: Isometry) -> Hom:
    m = u.dim
    den = 1
    for row in u.linear:
        for e in row:
            den = den * e.denominator // math.gcd(den, e.denominator)
    for e in u.translate:
        den = den * e.denominator // math.gcd(den, e.denominator)
    rows = [[int(e * den) for e in row] + [int(t * den)]
            for row, t in zip(u.linear, u.translate)]
    rows.append([0] * m + [den])
    return _hom_norm(den, rows)


def isometry_from_hom(h: Hom, dim: int) -> Isometry:
    s, rows = h
    lin = tuple(tuple(Q(e, s) for e in row[:dim]) for row in rows[:dim])
    t = tuple(Q(row[dim], s) for row in rows[:dim])
    return Isometry(lin, t)


def hom_inverse(h: Hom) -> Hom:
    """Inverse isometry; uses orthogonality of the linear part (A^-1 = A^T)."""
    s, rows = h
    m = len(rows) - 1
    new = [[rows[j][i] * s for j in range(m)]
           + [-sum(rows[j][i] * rows[j][m] for j in range(m))]
           for i in range(m)]
    new.append([0] * m + [s * s])
    return _hom_norm(s * s, new)


def hom_mul(a: Hom, b: Hom) -> Hom:
    sa, A = a
    sb, B = b
    n = len(A)
    Bt = list(zip(*B))
    rows = [[sum(x * y for x, y in zip(ra, cb)) for cb in Bt] for ra in A]
    return _hom_norm(sa * sb, rows)


def hom_key_mod_shift(h: Hom, nu_num: tuple[int, ...], nu_den: int) -> tuple[str, Hom]:
    """Canonical key modulo conjugation by the period translation.

    Conjugating by the translation along nu adds delta = (I - A) nu to the
    translate part; the key normalizes the translate modulo integer multiples
    of delta (trivial for elements commuting with the translation).
    """
    s, rows = h
    m = len(rows) - 1
    delta = []
    for i in range(m):
        acc = s * nu_num[i]
        for j in range(m):
            acc -= rows[i][j] * nu_num[j]
        delta.append(acc)  # scaled by s * nu_den
    pivot = next((i for i in range(m) if delta[i] != 0), None)
    if pivot is None:
        return "stable", h
    # shift count: floor(t_pivot / delta_pivot) with t scaled by s, delta by s*nu_den
    num = rows[pivot][m] * nu_den
    den = delta[pivot]
    k = num // den  # floor division, correct for either sign of den
    if k == 0:
        return "shifted", h
    new_rows = [[e * nu_den for e in row] for row in rows]
    for i in range(m):
        new_rows[i][m] -= k * delta[i]
    return "shifted", _hom_norm(s * nu_den, new_rows)


def _hom_lengths(h: Hom) -> tuple[int, bool]:
    """(dim mov, elliptic) from the scaled-integer representation."""
    s, rows = h
    m = len(rows) - 1
    work = [[rows[i][j] - (s if i == j else 0) for j in range(m)] + [rows[i][m]]
            for i in range(m)]
    # fraction-free elimination; compare rank with and without the last column
    rank_a = 0
    rank_aug = 0
    cols = m + 1
    r = 0
    for c in range(cols):
        sel = next((i for i in range(r, m) if work[i][c] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        for i in range(r + 1, m):
            if work[i][c] != 0:
                f, p = work[i][c], work[r][c]
                work[i] = [e * p - f * pe for e, pe in zip(work[i], work[r])]
        r += 1
        if c < m:
            rank_a = r
        rank_aug = r
    return rank_a, rank_aug == rank_a


def hom_reflection_length(h: Hom) -> int:
    d, ell = _hom_lengths(h)
    return d + (0 if ell else 2)


def coarse_table(cox: CoxeterElement) -> CoarseTable:
    """Exact census of [1, w] by coarse row and reflection length.

    Enumerates one representative per translation-conjugacy family in the
    middle row (bottom and top rows are family-stable elementwise), expanding
    each representative by the reflections below its complement.
    """
    n = cox.rank
    n1 = n + 1
    dim = cox.rs.ambient_dim
    nu_den = 1
    for e in cox.direction:
        nu_den = nu_den * e.denominator // math.gcd(nu_den, e.denominator)
    nu_num = tuple(int(e * nu_den) for e in cox.direction)

    refl_hom: dict[tuple[int, Q], Hom] = {}

    def refl(root: Root, k: Q) -> Hom:
        key = (cox.rs.root_index(root.vector), k)
        if key not in refl_hom:
            refl_hom[key] = hom_from_isometry(reflection(root, k))
        return refl_hom[key]

    ident = hom_from_isometry(identity_isometry(dim))
    ident_key = hom_key_mod_shift(ident, nu_num, nu_den)
    seen: dict[tuple[str, Hom], int] = {ident_key: 0}
    frontier = [ident_key]
    w_hom = hom_from_isometry(cox.w)

    def complement(h: Hom) -> Hom:
        return hom_mul(hom_inverse(h), w_hom)

    # phase 1: candidate orbit representatives, level by level
    for j in range(n1):
        nxt = []
        for state in frontier:
            v_hom = complement(state[1])
            d, ell = _hom_lengths(v_hom)
            if d + (0 if ell else 2) != n1 - j:
                raise AssertionError("candidate with non-complementary length")
            if ell:
                cands = _elliptic_candidates(cox, v_hom)
            else:
                cands = _hyperbolic_candidates(cox, v_hom, mod_period=True)
            for root, k in cands:
                x_hom = hom_mul(state[1], refl(root, k))
                if hom_reflection_length(x_hom) != j + 1:
                    continue
                key = hom_key_mod_shift(x_hom, nu_num, nu_den)
                if key in seen:
                    if seen[key] != j + 1:
                        raise AssertionError("interval element found at two levels")
                    continue
                seen[key] = j + 1
                nxt.append(key)
        frontier = nxt

    # phase 2: keep representatives whose complement is reachable at the co-level
    counts: dict[tuple[str, int], int] = {}
    top_seen = 0
    for key, lvl in seen.items():
        comp_key = hom_key_mod_shift(complement(key[1]), nu_num, nu_den)
        if seen.get(comp_key, -1) != n1 - lvl:
            continue
        row = _classify_row_hom(key[1], nu_num)
        if (row == MIDDLE) != (key[0] == "shifted"):
            raise AssertionError("row and family-stability disagree")
        counts[(row, lvl)] = counts.get((row, lvl), 0) + 1
        if lvl == n1:
            top_seen += 1
            if row != TOP:
                raise AssertionError("top element must be hyperbolic")
    if top_seen != 1:
        raise AssertionError("interval must have a unique top")
    bottom = tuple(counts.get((BOTTOM, l), 0) for l in range(n))
    middle = tuple(counts.get((MIDDLE, l), 0) for l in range(1, n1))
    top = tuple(counts.get((TOP, l), 0) for l in range(2, n1 + 1))
    for l in range(n1 + 1):
        total = counts.get((BOTTOM, l), 0) + counts.get((MIDDLE, l), 0) + counts.get((TOP, l), 0)
        if total == 0:
            raise AssertionError("empty interval level")
    return CoarseTable(rank=n, bottom=bottom, middle=middle, top=top)
