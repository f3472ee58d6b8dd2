"""The middle group Z^n x| Sym_n and type-B noncrossing partitions.

Elements are pairs (shift, perm) acting on Z^n by x -> shift + perm(x), where
perm moves the entry in position i to position perm[i].  The special element
(e_1, n-cycle) plays the role of a Coxeter element; its interval under the
generators {coordinate translations, shifted transpositions} is isomorphic to
the lattice of type-B noncrossing partitions, which this module also
enumerates independently as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q

from .poset import Interval

Blocks = frozenset  # frozenset of frozensets of nonzero ints in [-n, n]


@dataclass(frozen=True, order=True)
class MidElement:
    """(shift, perm): x -> shift + perm(x), with perm(x)[perm[i]] = x[i]."""

    shift: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.shift))):
            raise ValueError("perm must be a permutation of the coordinates")

    @property
    def n(self) -> int:
        return len(self.shift)

    def __call__(self, x: tuple[int, ...]) -> tuple[int, ...]:
        y = [0] * self.n
        for i, xi in enumerate(x):
            y[self.perm[i]] = xi
        return tuple(s + yi for s, yi in zip(self.shift, y))

    def __mul__(self, other: "MidElement") -> "MidElement":
        return MidElement(self(other.shift), tuple(self.perm[p] for p in other.perm))

    def inverse(self) -> "MidElement":
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        shift = tuple(-self.shift[self.perm[i]] for i in range(self.n))
        return MidElement(shift, tuple(inv))

    def is_identity(self) -> bool:
        return all(s == 0 for s in self.shift) and all(p == i for i, p in enumerate(self.perm))


def mid_identity(n: int) -> MidElement:
    return MidElement((0,) * n, tuple(range(n)))


def translation_gen(n: int, i: int) -> MidElement:
    return MidElement(tuple(1 if j == i else 0 for j in range(n)), tuple(range(n)))


def transposition_gen(n: int, i: int, j: int, k: int = 0) -> MidElement:
    """The conjugate (k(e_i - e_j), (i j)) of the plain transposition."""
    if i == j:
        raise ValueError("transposition needs distinct coordinates")
    shift = [0] * n
    shift[i], shift[j] = k, -k
    perm = list(range(n))
    perm[i], perm[j] = j, i
    return MidElement(tuple(shift), tuple(perm))


def special_element(n: int) -> MidElement:
    """t_1 . (1 2) (2 3) ... (n-1 n): acts by (x_1..x_n) -> (x_n + 1, x_1, .., x_{n-1})."""
    w = translation_gen(n, 0)
    for i in range(n - 1):
        w = w * transposition_gen(n, i, i + 1)
    return w


def vertical_displacement(u: MidElement) -> int:
    """Coordinate sum of the image of the origin; a homomorphism to Z."""
    return sum(u.shift)


def center_generator(n: int) -> MidElement:
    """The central translation by (1, .., 1)."""
    return MidElement((1,) * n, tuple(range(n)))


def center_check(n: int, max_shift: int = 2) -> bool:
    """The central translation commutes with every generator, and the
    single-coordinate translations do not centralize (for n >= 2)."""
    z = center_generator(n)
    if not all(z * g == g * z for g in mid_generators(n, max_shift)):
        return False
    if n >= 2:
        t1 = translation_gen(n, 0)
        r = transposition_gen(n, 0, 1)
        if t1 * r == r * t1:
            return False
    return True


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    c = 0
    for i in range(len(perm)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return c


# -- signed permutations and noncrossing partitions -----------------------


def signed_action(u: MidElement) -> dict[int, int]:
    """Action on {+-1, .., +-n} through reduction of the shift modulo 2."""
    n = u.n
    out = {}
    for i in range(1, n + 1):
        img = u.perm[i - 1] + 1
        sign = -1 if u.shift[img - 1] % 2 else 1
        out[i] = sign * img
        out[-i] = -sign * img
    return out


def orbit_blocks(u: MidElement) -> Blocks:
    """Orbits of the signed action on {+-1, .., +-n}."""
    act = signed_action(u)
    seen: set[int] = set()
    blocks = []
    for start in act:
        if start in seen:
            continue
        orb = []
        x = start
        while x not in seen:
            seen.add(x)
            orb.append(x)
            x = act[x]
        blocks.append(frozenset(orb))
    return frozenset(blocks)


def _circle_pos(x: int, n: int) -> int:
    # circular order 1, 2, .., n, -1, -2, .., -n
    return x - 1 if x > 0 else n - x - 1


def is_noncrossing_b(blocks: Blocks, n: int) -> bool:
    """Negation-invariant partition of {+-1..+-n} with noncrossing blocks."""
    cover = sorted(x for b in blocks for x in b)
    if cover != [x for x in range(-n, n + 1) if x != 0]:
        return False
    block_set = set(blocks)
    zero_blocks = 0
    for b in blocks:
        neg = frozenset(-x for x in b)
        if neg == b:
            zero_blocks += 1
        elif neg not in block_set:
            return False
    if zero_blocks > 1:
        return False
    pos = {b: sorted(_circle_pos(x, n) for x in b) for b in blocks}
    for a in blocks:
        pa = pos[a]
        if len(pa) < 2:
            continue
        for b in blocks:
            if b == a:
                continue
            arcs = set()
            for p in pos[b]:
                arc = 0
                for q in pa:
                    if p > q:
                        arc += 1
                arcs.add(arc % len(pa))
                if len(arcs) > 1:
                    return False
    return True


def ncb_enumerate(n: int) -> list[Blocks]:
    """All type-B noncrossing partitions, by brute force over set partitions."""
    universe = [x for x in range(1, n + 1)] + [-x for x in range(1, n + 1)]
    out = []

    def rec(idx: int, blocks: list[list[int]]):
        if idx == len(universe):
            cand = frozenset(frozenset(b) for b in blocks)
            if is_noncrossing_b(cand, n):
                out.append(cand)
            return
        x = universe[idx]
        for b in blocks:
            b.append(x)
            rec(idx + 1, blocks)
            b.pop()
        blocks.append([x])
        rec(idx + 1, blocks)
        blocks.pop()

    rec(0, [])
    return sorted(set(out), key=lambda bs: sorted(sorted(b) for b in bs))


def ncb_count(n: int) -> int:
    return math.comb(2 * n, n)


def clockwise_successor_map(blocks: Blocks, n: int) -> dict[int, int]:
    """The signed map sending each label to the next one clockwise around its
    block (circle order 1, .., n, -1, .., -n)."""
    out: dict[int, int] = {}
    for b in blocks:
        ordered = sorted(b, key=lambda x: _circle_pos(x, n))
        for i, x in enumerate(ordered):
            out[x] = ordered[(i + 1) % len(ordered)]
    return out


def ncb_meet(p: Blocks, q: Blocks, n: int) -> Blocks:
    """Common refinement; always noncrossing and centrally symmetric."""
    blocks = set()
    for a in p:
        for b in q:
            c = a & b
            if c:
                blocks.add(frozenset(c))
    out = frozenset(blocks)
    if not is_noncrossing_b(out, n):
        raise AssertionError("refinement of noncrossing partitions must be noncrossing")
    return out


# -- the interval below the special element -------------------------------


def mid_generators(n: int, max_shift: int = 2) -> list[MidElement]:
    gens = [translation_gen(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(-max_shift, max_shift + 1):
                gens.append(transposition_gen(n, i, j, k))
    return gens


def build_special_interval(n: int, max_shift: int = 2) -> Interval:
    """The interval [1, special] as a graded poset with unit generator weights.

    Candidate levels come from two-sided reachability: an element is kept at
    level j exactly when it is a product of j generators and its complement is
    a product of n - j generators, which certifies additive length.
    """
    w = special_element(n)
    gens = mid_generators(n, max_shift)
    ident = mid_identity(n)
    levels: dict[MidElement, int] = {ident: 0}
    edges_raw: list[tuple[MidElement, MidElement, MidElement]] = []
    frontier = [ident]
    for j in range(n):
        nxt = []
        for u in frontier:
            for g in gens:
                x = u * g
                if any(abs(s) > max_shift for s in x.shift):
                    continue
                if n - cycle_count(x.perm) > j + 1:
                    continue
                comp = x.inverse() * w
                if n - cycle_count(comp.perm) > n - j - 1:
                    continue
                if x not in levels:
                    levels[x] = j + 1
                    nxt.append(x)
                elif levels[x] != j + 1:
                    continue  # shorter route exists; not at this level
                edges_raw.append((u, x, g))
        frontier = nxt
    certified = {u for u, lvl in levels.items()
                 if levels.get(u.inverse() * w, -1) == n - lvl}
    if w not in certified or ident not in certified:
        raise AssertionError("interval endpoints failed certification")
    items = [(u, Q(levels[u]), u) for u in certified]
    edges = [(a, b, g) for (a, b, g) in edges_raw if a in certified and b in certified]
    return Interval(items, edges)


def interval_ncb_map(interval: Interval) -> dict[Blocks, MidElement]:
    """Partition attached to each interval element; fails if not bijective."""
    cached = getattr(interval, "_ncb_map", None)
    if cached is not None:
        return cached
    out: dict[Blocks, MidElement] = {}
    for key in interval.keys:
        u: MidElement = interval.payload[key]
        blocks = orbit_blocks(u)
        if blocks in out:
            raise AssertionError("two interval elements share a partition")
        out[blocks] = u
    interval._ncb_map = out
    return out


def element_from_ncb(interval: Interval, blocks: Blocks) -> MidElement:
    return interval_ncb_map(interval)[blocks]


def ncb_from_element(u: MidElement) -> Blocks:
    return orbit_blocks(u)


def ncb_complement(interval: Interval, blocks: Blocks) -> Blocks:
    """Partition of the left complement u^-1 w; an order-reversing bijection."""
    u = element_from_ncb(interval, blocks)
    w: MidElement = interval.payload[interval.keys[interval.top]]
    return orbit_blocks(u.inverse() * w)


def ncb_join(interval: Interval, p: Blocks, q: Blocks) -> Blocks:
    """Join as complement of the refinement of the complements."""
    n = interval.payload[interval.keys[interval.top]].n
    comp = ncb_meet(ncb_complement(interval, p), ncb_complement(interval, q), n)
    inverse = getattr(interval, "_ncb_comp_inv", None)
    if inverse is None:
        inverse = {ncb_complement(interval, blocks): blocks
                   for blocks in interval_ncb_map(interval)}
        interval._ncb_comp_inv = inverse
    return inverse[comp]


def edge_label_set(interval: Interval) -> set[MidElement]:
    """Distinct generators labeling the cover edges of the interval."""
    return set(interval.edge_labels.values())
