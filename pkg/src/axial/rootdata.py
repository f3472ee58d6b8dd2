"""Crystallographic root systems and extended Dynkin diagrams.

Builds the standard integer/half-integer realizations of the irreducible
euclidean types, their coroots, extended diagrams with extending and vertical
vertices, and the horizontal decomposition obtained by deleting the vertical
vertex from the ordinary diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q

from .linalg import Mat, Vec, dot, rref, vadd, vneg, vscale, vsub, vec_json

LEGAL_LETTERS = "ABCDEFG"


@dataclass(frozen=True)
class EuclideanType:
    """An irreducible euclidean type X_n, with a bigon parameter for type A."""

    letter: str
    rank: int
    bigon: tuple[int, int] | None = None

    def __post_init__(self):
        letter, n = self.letter, self.rank
        legal = (
            (letter == "A" and n >= 1)
            or (letter == "B" and n >= 3)
            or (letter == "C" and n >= 2)
            or (letter == "D" and n >= 4)
            or (letter == "E" and n in (6, 7, 8))
            or (letter == "F" and n == 4)
            or (letter == "G" and n == 2)
        )
        if not legal:
            raise ValueError(f"illegal euclidean type {letter}{n}")
        if letter == "A":
            bigon = self.bigon if self.bigon is not None else (n, 1)
            p, q = bigon
            if p < 1 or q < 1 or p + q != n + 1:
                raise ValueError(f"bigon parameter {bigon} must be positive with p+q={n + 1}")
            object.__setattr__(self, "bigon", (p, q))
        elif self.bigon is not None:
            raise ValueError("bigon parameter only applies to type A")

    def __str__(self) -> str:
        s = f"{self.letter}{self.rank}"
        if self.letter == "A" and self.bigon != (self.rank, 1):
            s += "({},{})".format(*self.bigon)
        return s


@dataclass(frozen=True)
class Root:
    vector: Vec
    squared_length: Q

    def __post_init__(self):
        if all(e == 0 for e in self.vector):
            raise ValueError("root vector must be nonzero")


def coroot(r: Root) -> Vec:
    """The coroot 2a/(a.a) of a root a."""
    return vscale(Q(2) / r.squared_length, r.vector)


def reflect_vector(alpha: Vec, beta: Vec) -> Vec:
    """Reflect beta in the hyperplane orthogonal to alpha."""
    c = Q(2) * dot(alpha, beta) / dot(alpha, alpha)
    return vsub(beta, vscale(c, alpha))


def _simple_roots(t: EuclideanType) -> tuple[list[Vec], int]:
    """Simple roots in the standard realization, plus the ambient dimension."""
    n = t.rank
    e = lambda i, m: tuple(Q(1) if j == i else Q(0) for j in range(m))
    if t.letter == "A":
        m = n + 1
        simples = [vsub(e(i, m), e(i + 1, m)) for i in range(n)]
    elif t.letter == "B":
        m = n
        simples = [vsub(e(i, m), e(i + 1, m)) for i in range(n - 1)] + [e(n - 1, m)]
    elif t.letter == "C":
        m = n
        simples = [vsub(e(i, m), e(i + 1, m)) for i in range(n - 1)] + [vscale(2, e(n - 1, m))]
    elif t.letter == "D":
        m = n
        simples = [vsub(e(i, m), e(i + 1, m)) for i in range(n - 1)]
        simples.append(vadd(e(n - 2, m), e(n - 1, m)))
    elif t.letter == "G":
        m = 3
        simples = [
            vsub(e(0, m), e(1, m)),
            vadd(vscale(-2, e(0, m)), vadd(e(1, m), e(2, m))),
        ]
    elif t.letter == "F":
        m = 4
        simples = [
            vsub(e(1, m), e(2, m)),
            vsub(e(2, m), e(3, m)),
            e(3, m),
            vscale(Q(1, 2), vsub(e(0, m), vadd(e(1, m), vadd(e(2, m), e(3, m))))),
        ]
    else:  # E6, E7, E8 inside dimension 8
        m = 8
        half = Q(1, 2)
        a1 = tuple([half, -half, -half, -half, -half, -half, -half, half])
        a2 = vadd(e(0, m), e(1, m))
        chain = [vsub(e(i + 1, m), e(i, m)) for i in range(6)]  # a3..a8 = e2-e1 .. e7-e6
        simples = [a1, a2] + chain[: n - 2]
    return simples, m


def _closure(simples: list[Vec]) -> list[Vec]:
    """Close the simple roots under reflection in each other (finite system)."""
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simples:
                r = reflect_vector(alpha, beta)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    roots |= {vneg(r) for r in set(roots)}
    return sorted(roots)


@dataclass(frozen=True)
class RootSystem:
    type: EuclideanType
    ambient_dim: int
    roots: tuple[Root, ...]
    simple_roots: tuple[Root, ...]
    highest_root: Root
    simple_coords: dict = field(compare=False, repr=False)

    def root_index(self, v: Vec) -> int:
        return self._index[v]

    def __post_init__(self):
        object.__setattr__(self, "_index", {r.vector: i for i, r in enumerate(self.roots)})


def _express_in_simples(simples: list[Vec], v: Vec) -> tuple[Q, ...] | None:
    """Coefficients of v in the simple basis, or None if outside the span."""
    gram = [[dot(a, b) for b in simples] for a in simples]
    rhs = [dot(a, v) for a in simples]
    aug = rref(tuple(tuple(row) + (r,) for row, r in zip(gram, rhs)))
    coeffs = [Q(0)] * len(simples)
    for row in aug:
        c = next(i for i, x in enumerate(row) if x != 0)
        coeffs[c] = row[-1]
    # Verify (v may have a component outside the simple span).
    recon = tuple(sum((c * s[i] for c, s in zip(coeffs, simples)), Q(0)) for i in range(len(v)))
    return tuple(coeffs) if recon == tuple(v) else None


def build_root_system(t: EuclideanType) -> RootSystem:
    """Standard realization of the root system for a legal euclidean type."""
    simples, m = _simple_roots(t)
    vectors = _closure(simples)
    coords: dict[Vec, tuple[Q, ...]] = {}
    for v in vectors:
        c = _express_in_simples(simples, v)
        if c is None or not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise AssertionError("closure produced a non-root vector")
        coords[v] = c
    highest = max(vectors, key=lambda v: (sum(coords[v]), v))
    mk = lambda v: Root(v, dot(v, v))
    return RootSystem(
        type=t,
        ambient_dim=m,
        roots=tuple(mk(v) for v in vectors),
        simple_roots=tuple(mk(s) for s in simples),
        highest_root=mk(highest),
        simple_coords=coords,
    )


def bond_order(alpha: Root, beta: Root) -> int:
    """The Coxeter order m(s,t) for reflections in two distinct root lines."""
    num = 4 * dot(alpha.vector, beta.vector) ** 2
    den = alpha.squared_length * beta.squared_length
    c = num / den
    table = {Q(0): 2, Q(1): 3, Q(2): 4, Q(3): 6}
    if c not in table:
        raise ValueError("root pair outside the crystallographic angle set")
    return table[c]


@dataclass(frozen=True)
class ExtendedDiagram:
    """Extended Dynkin diagram: simple-root vertices 0..n-1 plus extending vertex n."""

    type: EuclideanType
    vertices: tuple[int, ...]
    vertex_roots: tuple[Root, ...]
    edge_labels: dict
    extending_vertex: int
    vertical_vertex: int

    def neighbors(self, v: int) -> list[int]:
        return sorted(u for (a, b) in self.edge_labels for u in (a, b) if v in (a, b) and u != v)


def _vertical_vertex_index(t: EuclideanType) -> int:
    """Vertical vertex (0-based simple index) per the diagram figures."""
    n = t.rank
    if t.letter == "A":
        if n == 1:
            return 0
        return t.bigon[0] - 1
    if t.letter == "B":
        return n - 2  # long root on the double bond, next to the short end
    if t.letter == "C":
        return n - 1  # long root at the non-extending double-bond end
    if t.letter == "D":
        return n - 3  # branch vertex
    if t.letter == "E":
        return 3  # branch vertex (Bourbaki alpha_4)
    if t.letter == "F":
        return 1  # long root on the double bond (Bourbaki alpha_2)
    return 1  # G2: the long simple root


def extended_diagram(rs: RootSystem) -> ExtendedDiagram:
    t = rs.type
    n = t.rank
    ext_root = Root(vneg(rs.highest_root.vector), rs.highest_root.squared_length)
    vroots = tuple(rs.simple_roots) + (ext_root,)
    edges: dict[tuple[int, int], int] = {}
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            if t.letter == "A" and n == 1:
                mij = 0  # infinite bond of the rank-1 euclidean diagram
            else:
                mij = bond_order(vroots[i], vroots[j])
            if mij != 2:
                edges[(i, j)] = mij
    return ExtendedDiagram(
        type=t,
        vertices=tuple(range(n + 1)),
        vertex_roots=vroots,
        edge_labels=edges,
        extending_vertex=n,
        vertical_vertex=_vertical_vertex_index(t),
    )


def _component_split(diagram: ExtendedDiagram) -> list[list[int]]:
    """Connected components of the ordinary diagram minus the vertical vertex."""
    t = diagram.type
    drop = {diagram.extending_vertex, diagram.vertical_vertex}
    keep = [v for v in diagram.vertices if v not in drop]
    adj = {v: set() for v in keep}
    for (a, b) in diagram.edge_labels:
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    comps = []
    seen: set[int] = set()
    for v in keep:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for x in adj[u]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        comps.append(sorted(comp))
    return comps


def horizontal_decomposition(rs: RootSystem, diagram: ExtendedDiagram | None = None):
    """Irreducible components left after deleting the vertical vertex.

    Returns a list of (component_type_string, component_roots) where each
    component is a type-A subsystem; the list is sorted by component size.
    """
    if diagram is None:
        diagram = extended_diagram(rs)
    comps = _component_split(diagram)
    out = []
    for comp in comps:
        comp_simples = [diagram.vertex_roots[v] for v in comp]
        span = rref([r.vector for r in comp_simples])
        from .linalg import row_space_contains

        comp_roots = tuple(
            r for r in rs.roots if row_space_contains(span, r.vector)
        )
        size = len(comp)
        if len(comp_roots) != size * (size + 1):
            raise AssertionError("horizontal component is not of type A")
        out.append((f"A{size}", comp_roots))
    out.sort(key=lambda cr: (len(cr[1]), cr[0]))
    return out


def root_system_json(rs: RootSystem, diagram: ExtendedDiagram) -> dict:
    return {
        "type": str(rs.type),
        "ambient_dim": rs.ambient_dim,
        "roots": [vec_json(r.vector) for r in rs.roots],
        "simples": [vec_json(r.vector) for r in rs.simple_roots],
        "extending": diagram.extending_vertex,
        "vertical": diagram.vertical_vertex,
        "edges": [[i, j, m] for (i, j), m in sorted(diagram.edge_labels.items())],
    }
