"""Coxeter elements of euclidean reflection groups.

Builds w as a product of the n+1 chamber reflections (simple roots at level 0
plus the highest root at level 1), computes the axis, period, axial points and
axial vertices within a window, and the generator families R_H (horizontal
reflections), R_V (vertical reflections fixing an axial vertex) and T (pure
translations below w).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction as Q

from .isometry import (
    Isometry,
    identity_isometry,
    invariants,
    mov_dim,
    reflection,
    reflection_length,
    translation,
)
from .linalg import (
    AffineSubspace,
    Mat,
    Vec,
    affine_intersect,
    dot,
    is_zero_vec,
    orthogonal_complement,
    rref,
    row_space_contains,
    vadd,
    vneg,
    vscale,
    vsub,
    zero_vec,
)
from .rootdata import (
    EuclideanType,
    ExtendedDiagram,
    Root,
    RootSystem,
    build_root_system,
    coroot,
    extended_diagram,
)

HREFL, VREFL, DIAG_TRANS, FACT_TRANS = "HRefl", "VRefl", "DiagTrans", "FactTrans"


@dataclass(frozen=True)
class GeneratorLabel:
    """A labeled generator: a reflection r_{alpha,k} or a translation."""

    kind: str
    root: int  # index into the root system's root list
    k: Q  # hyperplane level (reflections) or shift multiple (translations)
    axial: int | None  # axial point index for vertical reflections
    weight: Q

    def __str__(self) -> str:
        tag = {HREFL: "h", VREFL: "v", DIAG_TRANS: "t", FACT_TRANS: "f"}[self.kind]
        ax = "" if self.axial is None else f"@{self.axial}"
        return f"{tag}[{self.root},{self.k}]{ax}"

    def json(self) -> dict:
        from .linalg import rat_str

        return {
            "kind": self.kind,
            "root": self.root,
            "index": rat_str(self.k),
            "weight": rat_str(self.weight),
        }


class WindowExhausted(RuntimeError):
    """A kept element needed a generator outside the materialized window."""


def conjugate(g: Isometry, u: Isometry) -> Isometry:
    return g * u * g.inverse()


class CoxeterElement:
    """A Coxeter element w of Cox(X~_n) together with its axial geometry."""

    def __init__(self, rs: RootSystem, order: tuple[int, ...] | None = None,
                 window_mult: int = 2):
        self.rs = rs
        self.diagram = extended_diagram(rs)
        self.rank = rs.type.rank
        self.window_mult = window_mult
        if order is None:
            order = default_order(rs)
        n = self.rank
        if sorted(order) != list(range(n + 1)):
            raise ValueError("order must be a permutation of the n+1 chamber reflections")
        self.order = tuple(order)
        self.simple_gens = chamber_generators(rs)
        w = identity_isometry(rs.ambient_dim)
        for i in order:
            w = w * self.simple_gens[i]
        self.w = w
        self._setup_span()
        self._setup_axis()
        self._setup_axial_points()
        self._setup_axial_vertices()
        self._setup_reflection_families()
        self._setup_translations()

    # -- geometry ---------------------------------------------------------

    def _setup_span(self):
        m = self.rs.ambient_dim
        self.root_span = rref([r.vector for r in self.rs.roots])
        self.span_complement = orthogonal_complement(self.root_span, m)
        self.euclid_space = AffineSubspace.from_data(zero_vec(m), self.root_span)

    def _setup_axis(self):
        inv = invariants(self.w)
        if inv.elliptic:
            raise ValueError("coxeter element must be hyperbolic")
        axis = affine_intersect(inv.min_set, self.euclid_space)
        if axis is None or axis.dim != 1:
            raise AssertionError("coxeter axis must be a line")
        # period: smallest power of w with trivial linear part
        p = 1
        power = self.w
        while not power.is_translation():
            power = power * self.w
            p += 1
            if p > 1000:
                raise AssertionError("runaway period computation")
        self.period_p = p
        self.period_translation = power.translate  # nu, one full period along the axis
        self.axis = axis
        self.axis_base = axis.base
        self.direction = self.period_translation
        if is_zero_vec(self.direction):
            raise AssertionError("period translation cannot be zero")

    def axis_point(self, s: Q) -> Vec:
        return vadd(self.axis_base, vscale(s, self.direction))

    def is_horizontal_root(self, alpha: Vec) -> bool:
        return dot(alpha, self.direction) == 0

    def canonical_root_sign(self, alpha: Vec) -> Vec:
        """Fix a sign: vertical roots point along the axis, horizontal ones lex-positive."""
        d = dot(alpha, self.direction)
        if d != 0:
            return alpha if d > 0 else vneg(alpha)
        return alpha if alpha > vneg(alpha) else vneg(alpha)

    def _setup_axial_points(self):
        """Crossing parameters of vertical hyperplanes with the axis, indexed so
        that x_0 is the first crossing at parameter s >= 0."""
        c = self.window_mult
        pad = Q(1, 100)
        s_lo, s_hi = Q(-(c + 1)), Q(c + 1)
        crossings: set[Q] = set()
        seen_roots = set()
        self.vertical_roots: list[Root] = []
        self.horizontal_roots: list[Root] = []
        for r in self.rs.roots:
            a = self.canonical_root_sign(r.vector)
            if a in seen_roots:
                continue
            seen_roots.add(a)
            root = Root(a, r.squared_length)
            d = dot(a, self.direction)
            if d == 0:
                self.horizontal_roots.append(root)
                continue
            self.vertical_roots.append(root)
            base_val = dot(a, self.axis_base)
            k_lo = math.ceil(base_val + d * s_lo - pad)
            k_hi = math.floor(base_val + d * s_hi + pad)
            for k in range(k_lo, k_hi + 1):
                s = (Q(k) - base_val) / d
                if s_lo <= s <= s_hi:
                    crossings.add(s)
        svals = sorted(crossings)
        gaps = {svals[i + 1] - svals[i] for i in range(len(svals) - 1)}
        if len(gaps) != 1:
            raise AssertionError("axial points must be equally spaced")
        self.axial_gap = gaps.pop()
        per = Q(1) / self.axial_gap
        if per.denominator != 1:
            raise AssertionError("axial spacing must divide the period")
        self.points_per_period = int(per)
        first = min(s for s in svals if s >= 0)
        self.axial_s = {}
        for s in svals:
            idx = (s - first) / self.axial_gap
            if idx.denominator != 1:
                raise AssertionError("non-integral axial index")
            self.axial_s[int(idx)] = s
        q = self.points_per_period
        self.window_indices = range(-c * q, c * q + 1)
        for i in self.window_indices:
            if i not in self.axial_s:
                raise WindowExhausted(f"axial index {i} outside materialized range")
        self.axial_points = {i: self.axis_point(self.axial_s[i]) for i in self.window_indices}

    # -- chambers ---------------------------------------------------------

    def _fundamental_chamber_vertices(self) -> list[Vec]:
        """Vertices of the fundamental simplex (in the euclidean span)."""
        m = self.rs.ambient_dim
        simples = [r.vector for r in self.rs.simple_roots]
        high = self.rs.highest_root.vector
        verts = []
        for skip in range(self.rank + 1):
            rows, rhs = [], []
            for j, a in enumerate(simples):
                if j != skip:
                    rows.append(a)
                    rhs.append(Q(0))
            if skip != self.rank:
                rows.append(high)
                rhs.append(Q(1))
            for cvec in self.span_complement:
                rows.append(cvec)
                rhs.append(Q(0))
            from .linalg import affine_solve

            sol = affine_solve(tuple(rows), tuple(rhs))
            if sol is None or sol.dim != 0:
                raise AssertionError("chamber vertex is not a point")
            verts.append(sol.base)
        return verts

    def _fold_to_fundamental(self, x: Vec) -> tuple[Vec, list[Isometry]]:
        """Reflect x into the closed fundamental chamber; return image and word."""
        simples = [r for r in self.rs.simple_roots]
        high = self.rs.highest_root
        word: list[Isometry] = []
        z = x
        guard = 0
        while True:
            moved = False
            for a in simples:
                if dot(a.vector, z) < 0:
                    r = reflection(a, 0)
                    z = r(z)
                    word.append(r)
                    moved = True
                    break
            if not moved and dot(high.vector, z) > 1:
                r = reflection(high, 1)
                z = r(z)
                word.append(r)
                moved = True
            if not moved:
                return z, word
            guard += 1
            if guard > 200000:
                raise AssertionError("chamber folding did not terminate")

    def _setup_axial_vertices(self):
        self.fundamental_vertices = self._fundamental_chamber_vertices()
        self.segment_vertices: dict[int, tuple[Vec, ...]] = {}
        vertex_set: set[Vec] = set()
        idx = sorted(self.window_indices)
        for i in idx[:-1]:
            mid_s = (self.axial_s[i] + self.axial_s[i + 1]) / 2
            mid = self.axis_point(mid_s)
            z, word = self._fold_to_fundamental(mid)
            verts = []
            for v in self.fundamental_vertices:
                y = v
                for r in reversed(word):
                    y = r(y)
                verts.append(y)
            self.segment_vertices[i] = tuple(sorted(verts))
            vertex_set.update(verts)
        self.axial_vertices = sorted(vertex_set)

    # -- generator families ----------------------------------------------

    def _setup_reflection_families(self):
        self.R_H: list[GeneratorLabel] = []
        for root in self.horizontal_roots:
            cval = dot(root.vector, self.axis_base)
            if cval.denominator == 1:
                raise AssertionError("axis lies inside a horizontal hyperplane")
            lo = math.floor(cval)
            ridx = self._canon_root_index(root.vector)
            for k in (lo, lo + 1):
                self.R_H.append(GeneratorLabel(HREFL, ridx, Q(k), None, Q(1)))
        self.R_H.sort(key=lambda g: (g.root, g.k))
        # vertical reflections whose hyperplane contains an axial vertex
        labels: dict[tuple[int, Q], int] = {}
        for i in self.window_indices:
            for root in self.vertical_roots:
                for v in self._vertices_near(i):
                    kv = dot(root.vector, v)
                    if kv.denominator != 1:
                        continue
                    s = (kv - dot(root.vector, self.axis_base)) / dot(root.vector, self.direction)
                    j = (s - self.axial_s[0]) / self.axial_gap
                    if j.denominator != 1:
                        raise AssertionError("vertical hyperplane misses the axial grid")
                    if int(j) == i:
                        labels[(self._canon_root_index(root.vector), kv)] = i
        self.R_V: list[GeneratorLabel] = [
            GeneratorLabel(VREFL, ridx, kv, ax, Q(1)) for (ridx, kv), ax in sorted(labels.items())
        ]

    def _vertices_near(self, i: int) -> set[Vec]:
        out: set[Vec] = set()
        for seg in (i - 1, i):
            if seg in self.segment_vertices:
                out.update(self.segment_vertices[seg])
        return out

    def _canon_root_index(self, alpha: Vec) -> int:
        return self.rs.root_index(self.canonical_root_sign(alpha))

    def root_by_index(self, ridx: int) -> Root:
        return self.rs.roots[ridx]

    def label_isometry(self, g: GeneratorLabel) -> Isometry:
        if g.kind in (HREFL, VREFL):
            return reflection(self.root_by_index(g.root), g.k, word=(g,))
        raise ValueError("only reflection labels are materialized here")

    def interval_generators(self) -> list[tuple[GeneratorLabel, Isometry]]:
        return [(g, self.label_isometry(g)) for g in self.R_H + self.R_V]

    # -- translations below w --------------------------------------------

    def _setup_translations(self):
        n = self.rank
        out = []
        for root in self.vertical_roots:
            cr = coroot(root)
            for j in range(-12, 13):
                if j == 0:
                    continue
                t = translation(vscale(j, cr))
                v = t.inverse() * self.w
                inv = invariants(v)
                if inv.elliptic and inv.mov.dim == n - 1:
                    out.append(t)
        self.T = sorted(out, key=lambda t: t.translate)

    # -- derived operations ----------------------------------------------

    def horizontal_factorization(self) -> tuple[Isometry, list[tuple[Root, Q]]]:
        """w = t . (product of n-1 horizontal reflections), t a pure translation in T.

        Returns the translation and the reflection letters as (root, level)
        pairs, in product order.
        """
        if not self.T:
            raise AssertionError("no pure translations below w")
        t = self.T[0]
        wh = t.inverse() * self.w
        inv = invariants(wh)
        if not inv.elliptic or not all(
            self.is_horizontal_root(d) or is_zero_vec(d) for d in inv.mov.directions
        ):
            raise AssertionError("horizontal part is not a horizontal elliptic")
        letters = factor_elliptic(self, wh)
        check = t
        for root, k in letters:
            check = check * reflection(root, k)
        if check.key() != self.w.key():
            raise AssertionError("horizontal factorization does not multiply back to w")
        return t, letters

    def bfs_reflection_length(self, u: Isometry, radius: int, pad: int = 3) -> int | None:
        """Cayley-graph distance over all arrangement reflections near the window.

        Independent oracle for the closed-form reflection length; returns None
        if u is not reached within the radius.
        """
        gens = self.nearby_reflections(pad)
        frontier = {identity_isometry(self.rs.ambient_dim).key(): identity_isometry(self.rs.ambient_dim)}
        seen = {next(iter(frontier))}
        target = u.key()
        if target in frontier:
            return 0
        current = list(frontier.values())
        for dist in range(1, radius + 1):
            nxt = []
            for x in current:
                for g in gens:
                    y = x * g
                    ky = y.key()
                    if ky in seen:
                        continue
                    seen.add(ky)
                    if ky == target:
                        return dist
                    nxt.append(y)
            current = nxt
        return None

    def nearby_reflections(self, pad: int) -> list[Isometry]:
        gens = []
        for root in self.vertical_roots + self.horizontal_roots:
            base_val = dot(root.vector, self.axis_base)
            for k in range(math.floor(base_val) - pad, math.ceil(base_val) + pad + 1):
                gens.append(reflection(root, k))
        return gens

    def convexity_check(self, r: GeneratorLabel, alpha: Root) -> bool:
        """Whether the axial vertices on r's hyperplane lie between two
        consecutive alpha-hyperplanes."""
        a = alpha.vector
        r_root = self.root_by_index(r.root).vector
        r_iso = self.label_isometry(r)
        if dot(a, self.direction) <= 0 or dot(r_iso.apply_vector(a), self.direction) >= 0:
            raise ValueError("alpha must cross from positive to negative under r")
        vals = [
            dot(a, v)
            for v in self.axial_vertices
            if dot(r_root, v) == r.k
        ]
        if not vals:
            raise ValueError("reflection hyperplane contains no axial vertex in window")
        lo, hi = min(vals), max(vals)
        k = math.floor(lo)
        if lo == k and hi == k:
            return True
        return Q(k) <= lo and hi <= Q(k + 1)


def chamber_generators(rs: RootSystem) -> list[Isometry]:
    """Reflections in the facets of the fundamental chamber, with labels."""
    gens = []
    for i, a in enumerate(rs.simple_roots):
        gens.append(reflection(a, 0, word=(("s", i),)))
    gens.append(reflection(rs.highest_root, 1, word=(("s", rs.type.rank),)))
    return gens


def factor_elliptic(cox: CoxeterElement, u: Isometry) -> list[tuple[Root, Q]]:
    """Factor an elliptic element into dim mov(u) reflections of the arrangement.

    Greedy: repeatedly pick the first arrangement reflection whose hyperplane
    contains Fix(u) and whose root lies in mov(u).  Letters are returned as
    (root, level) pairs whose reflections multiply to u left-to-right.
    """
    out: list[tuple[Root, Q]] = []
    cur = u
    guard = 0
    while not cur.is_identity():
        inv = invariants(cur)
        if not inv.elliptic:
            raise AssertionError("element must stay elliptic while factoring")
        fix = inv.min_set
        found = None
        for root in cox.horizontal_roots + cox.vertical_roots:
            a = root.vector
            if not row_space_contains(inv.mov.directions, a):
                continue
            kv = dot(a, fix.base)
            if kv.denominator != 1:
                continue
            if any(dot(a, d) != 0 for d in fix.directions):
                continue
            found = (root, kv)
            break
        if found is None:
            raise AssertionError("no arrangement reflection below the elliptic element")
        out.append(found)
        cur = reflection(found[0], found[1]) * cur  # peel from the left: u = r * (r u)
        guard += 1
        if guard > cox.rank + 2:
            raise AssertionError("elliptic factorization did not terminate")
    # out holds r1..rk with u = r1 r2 ... rk
    return out


def default_order(rs: RootSystem) -> tuple[int, ...]:
    """Default multiplication order for the chamber reflections.

    For type A the order is chosen (by bounded search, then verified) so that
    the horizontal root system realizes the requested bigon class; all other
    types have a single class and use the diagram order.
    """
    n = rs.type.rank
    if rs.type.letter != "A" or n == 1:
        return tuple(range(n + 1))
    p, q = rs.type.bigon
    want = sorted([p - 1, q - 1])
    for perm in itertools.permutations(range(n + 1)):
        if perm[0] != min(perm):
            continue  # cyclic rotations give conjugate elements; fix the first slot
        sizes = _horizontal_component_sizes(rs, perm)
        if sizes is not None and sorted(sizes) == [s for s in want if s > 0]:
            return perm
    raise AssertionError("no order realizes the requested bigon class")


def _horizontal_component_sizes(rs: RootSystem, order) -> list[int] | None:
    gens = chamber_generators(rs)
    w = identity_isometry(rs.ambient_dim)
    for i in order:
        w = w * gens[i]
    p = 1
    power = w
    while not power.is_translation():
        power = power * w
        p += 1
        if p > 200:
            return None
    nu = power.translate
    if is_zero_vec(nu):
        return None
    horiz = [r.vector for r in rs.roots if dot(r.vector, nu) == 0]
    if not horiz:
        return []
    # connected components under non-orthogonality, sizes in simple-rank terms
    comps = []
    pool = set(horiz)
    while pool:
        seed = pool.pop()
        comp = {seed}
        changed = True
        while changed:
            changed = False
            for v in list(pool):
                if any(dot(v, u) != 0 for u in comp):
                    comp.add(v)
                    pool.discard(v)
                    changed = True
        comps.append(comp)
    sizes = []
    for comp in comps:
        rk = len(rref(sorted(comp)))
        sizes.append(rk)
    return sizes
