"""Hurwitz action, dual presentations, and left-greedy normal forms.

Three layers built on the interval machinery:

* the Hurwitz action of the braid group on minimal reflection
  factorizations (moves, orbit closure, transitivity checks);
* dual presentations read off an interval: generators are the atoms,
  relations are the cyclic factorization equalities of the rank-2
  elements, with a calibrated human-readable naming scheme for the
  rank-2 euclidean case;
* Garside normal forms Delta^n u_1 .. u_k over a verified finite
  lattice of simples, with complements and conjugation by Delta.

Composition is right-to-left everywhere (functions); a displayed word
"ab" denotes the product a*b in that operator order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import Any, Callable, Hashable, Iterable

from .coxeter import CoxeterElement, WindowExhausted
from .isometry import Isometry, reflection
from .linalg import dot, rat_str
from .midnc import MidElement
from .poset import Interval
from .rootdata import Root

SUBSCRIPT = str.maketrans("0123456789-", "₀₁₂₃₄"
                          "₅₆₇₈₉₋")


def subscript(n: int) -> str:
    return str(n).translate(SUBSCRIPT)


# -- signed permutations (finite type-B reflection groups) -----------------


@dataclass(frozen=True, order=True)
class SignedPerm:
    """A signed permutation of 1..n, stored as the images of 1..n.

    The element acts on {+-1, .., +-n} with g(-i) = -g(i); composition is
    right-to-left like every other group in this package.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(abs(v) for v in self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("images must be a signed permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1] if i > 0 else -self.images[-i - 1]

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        return SignedPerm(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "SignedPerm":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            if v > 0:
                inv[v - 1] = i + 1
            else:
                inv[-v - 1] = -(i + 1)
        return SignedPerm(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))


def signed_identity(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(1, n + 1)))


def b_reflections(n: int) -> dict[str, SignedPerm]:
    """The n^2 reflections of the signed permutation group on n letters."""
    out: dict[str, SignedPerm] = {}
    for i in range(1, n + 1):
        img = list(range(1, n + 1))
        img[i - 1] = -i
        out[f"t{subscript(i)}"] = SignedPerm(tuple(img))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for sign in (1, -1):
                img = list(range(1, n + 1))
                img[i - 1], img[j - 1] = sign * j, sign * i
                name = f"r{subscript(i)}{subscript(j)}" + ("" if sign == 1 else "(1)")
                out[name] = SignedPerm(tuple(img))
    return out


def b_coxeter_element(n: int) -> SignedPerm:
    """The signed n-cycle 1 -> 2 -> .. -> n -> -1."""
    return SignedPerm(tuple(range(2, n + 1)) + (-1,))


# -- Hurwitz action --------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """An ordered factorization; the product of the letters (left-to-right
    in operator order) is the target."""

    letters: tuple

    @property
    def target(self):
        prod = self.letters[0]
        for x in self.letters[1:]:
            prod = prod * x
        return prod


def hurwitz_move(letters: tuple, i: int, inverse: bool = False) -> tuple:
    """Replace the subword ab at positions i, i+1 by (aba^-1)a; the inverse
    move replaces it by b(b^-1 a b).  The product is unchanged."""
    a, b = letters[i], letters[i + 1]
    if inverse:
        pair = (b, b.inverse() * a * b)
    else:
        pair = (a * b * a.inverse(), a)
    return letters[:i] + pair + letters[i + 2:]


def hurwitz_orbit(letters: tuple, canon: Callable[[tuple], tuple] = lambda t: t,
                  key: Callable[[Any], Hashable] = lambda r: r,
                  max_size: int = 2_000_000) -> set[tuple]:
    """BFS closure of a factorization under Hurwitz moves.

    Returns the set of keyed canonical letter tuples; `canon` reduces a
    factorization to a canonical representative (e.g. modulo the period
    shift) and `key` turns one letter into a hashable value."""
    def keyed(f: tuple) -> tuple:
        return tuple(key(r) for r in f)

    start = canon(letters)
    seen = {keyed(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for f in frontier:
            for i in range(len(f) - 1):
                for inv in (False, True):
                    g = canon(hurwitz_move(f, i, inv))
                    gk = keyed(g)
                    if gk not in seen:
                        seen.add(gk)
                        nxt.append(g)
                        if len(seen) > max_size:
                            raise AssertionError("hurwitz orbit exceeded size bound")
        frontier = nxt
    return seen


def minimal_factorizations(target, letters: Iterable, length: int) -> set[tuple]:
    """All ways to write the target as an ordered product of `length` letters
    (brute force; letters must be closed enough to contain every minimal
    factorization, e.g. all reflections of a finite group)."""
    pool = list(letters)
    out = set()
    for combo in itertools.product(pool, repeat=length):
        prod = combo[0]
        for x in combo[1:]:
            prod = prod * x
        if prod == target:
            out.add(combo)
    return out


def _reflection_identifier(cox: CoxeterElement):
    """Map an isometry to its (root, level) when it is a group reflection."""
    linears = {reflection(root, 0).linear: root
               for root in cox.vertical_roots + cox.horizontal_roots}

    def ident(u: Isometry) -> tuple[Root, Q] | None:
        root = linears.get(u.linear)
        if root is None:
            return None
        k = dot(root.vector, u.translate) / 2
        if k.denominator != 1:
            return None
        return (root, k) if u.key() == reflection(root, k).key() else None

    return ident


def w_chain_factorizations(cox: CoxeterElement, interval: Interval) -> list[tuple]:
    """Minimal reflection factorizations of w visible in the windowed interval:
    maximal chains whose consecutive quotients are group reflections."""
    ident = _reflection_identifier(cox)
    by_level: dict[Q, list] = {}
    for k in interval.keys:
        by_level.setdefault(interval.weight_of(k), []).append(k)
    n1 = cox.rank + 1
    out: dict[tuple, tuple] = {}

    def rec(key, letters):
        lvl = interval.weight_of(key)
        if lvl == n1:
            out[tuple(r.key() for r in letters)] = tuple(letters)
            return
        u = interval.payload[key]
        for nk in by_level.get(lvl + 1, ()):
            if not interval.leq(key, nk):
                continue
            r = u.inverse() * interval.payload[nk]
            if ident(r) is None:
                continue
            letters.append(r)
            rec(nk, letters)
            letters.pop()

    rec(interval.keys[interval.bottom], [])
    return list(out.values())


def period_canonicalizer(cox: CoxeterElement) -> Callable[[tuple], tuple]:
    """Canonical form of a reflection factorization modulo conjugation by
    powers of the period translation w^p (the vertical shift symmetry)."""
    wp = cox.w
    for _ in range(cox.period_p - 1):
        wp = wp * cox.w
    wpi = wp.inverse()
    ident = _reflection_identifier(cox)
    nu = cox.direction

    def power(m: int) -> Isometry | None:
        if m == 0:
            return None
        g = wp if m > 0 else wpi
        pw = g
        for _ in range(abs(m) - 1):
            pw = pw * g
        return pw

    def canon(letters: tuple) -> tuple:
        # re-center first: conjugation by w^(p m) shifts the level of a
        # reflection with root alpha by m (alpha . nu), so solve for the m
        # that brings the first vertical letter's level near zero
        center = 0
        for r in letters:
            rk = ident(r)
            if rk is None:
                continue
            root, k = rk
            d = dot(root.vector, nu)
            if d != 0:
                center = round(-k / d)
                break
        best = None
        for m in range(center - 2, center + 3):
            g = power(m)
            cand = letters if g is None else tuple(
                g * r * g.inverse() for r in letters)
            keyed = tuple(r.key() for r in cand)
            if best is None or keyed < best[0]:
                best = (keyed, cand)
        return best[1]

    return canon


# -- presentations ---------------------------------------------------------

Word = tuple[str, ...]


@dataclass
class Presentation:
    """Generators and relations; each relation is a chain of equal words."""

    generators: tuple[str, ...]
    relations: tuple[tuple[Word, ...], ...]
    naming: dict[str, Any] = field(default_factory=dict, repr=False)

    def text(self) -> str:
        lines = [" = ".join("".join(w) for w in rel) for rel in self.relations]
        return "generators: " + ", ".join(self.generators) + "\n" + "\n".join(lines)

    def json(self) -> dict:
        return {
            "generators": [{"name": g} for g in self.generators],
            "relations": [[list(w) for w in rel] for rel in self.relations],
        }


def dual_presentation(interval: Interval, namer: Callable[[Any], str | None],
                      key_of: Callable[[Any], Hashable] = lambda u: u,
                      payload_of: Callable[[Any], Any] = lambda p: p,
                      sort_key: Callable[[str], Any] = lambda s: s) -> Presentation:
    """Presentation with the atoms as generators and the factorization
    equalities of two-atom products as relations.

    Every product of two atoms contributes the chain of all its two-atom
    factorizations visible in the interval; words are ordered by the sort
    key of their left letter.  Relations are sound by construction: both
    letters of every word multiply to the same interval element.
    """
    atoms = interval.atoms()
    naming: dict[str, Any] = {}
    names: dict[Hashable, str] = {}
    atom_payload: dict[Hashable, Any] = {}
    for k in atoms:
        p = payload_of(interval.payload[k])
        name = namer(p)
        if name is None:
            raise AssertionError("atom without a printable name")
        names[k] = name
        naming[name] = p
        atom_payload[k] = p
    atom_set = set(atoms)
    relations = []
    seen = set()
    for v in interval.keys:
        pv = payload_of(interval.payload[v])
        wv = interval.weight_of(v)
        words = []
        for ak in atoms:
            if not interval.leq(ak, v) or ak == v:
                continue
            a = atom_payload[ak]
            b = a.inverse() * pv
            bk = key_of(b)
            if bk not in atom_set:
                continue
            if interval.weight_of(ak) + interval.weight_of(bk) != wv:
                continue
            words.append((names[ak], names[bk]))
        if len(words) < 2:
            continue
        words.sort(key=lambda w: sort_key(w[0]))
        rel = tuple(words)
        if rel not in seen:
            seen.add(rel)
            relations.append(rel)
    gens = tuple(sorted(names.values(), key=sort_key))
    return Presentation(gens, tuple(relations), naming)


def merge_presentations(parts: Iterable[Presentation]) -> Presentation:
    """Union on canonical generator names with relation deduplication."""
    gens: dict[str, Any] = {}
    relations: list[tuple[Word, ...]] = []
    seen = set()
    order: list[str] = []
    for p in parts:
        for g in p.generators:
            if g not in gens:
                gens[g] = p.naming.get(g)
                order.append(g)
        for rel in p.relations:
            if rel not in seen:
                seen.add(rel)
                relations.append(rel)
    return Presentation(tuple(sorted(order)), tuple(relations), gens)


def mid_namer(u: MidElement) -> str | None:
    """Names for the Mid(B_n) generators: t_i for unit translations and
    r_ij (with the conjugating shift in parentheses) for transpositions."""
    moved = [i for i, p in enumerate(u.perm) if p != i]
    if not moved:
        if sum(1 for s in u.shift if s != 0) != 1:
            return None
        i = next(i for i, s in enumerate(u.shift) if s != 0)
        return f"t{subscript(i + 1)}" if u.shift[i] == 1 else None
    if len(moved) != 2:
        return None
    i, j = moved
    if u.perm[i] != j or any(s != 0 for idx, s in enumerate(u.shift) if idx not in moved):
        return None
    k = u.shift[i]
    tag = "" if k == 0 else f"({k})"
    return f"r{subscript(i + 1)}{subscript(j + 1)}{tag}"


def isometry_namer(cox: CoxeterElement) -> Callable[[Isometry], str | None]:
    """Neutral names for interval atoms: reflections by (root index, level),
    translations by their vector."""
    ident = _reflection_identifier(cox)

    def namer(u: Isometry) -> str | None:
        if u.is_translation():
            return "t[" + ",".join(rat_str(c) for c in u.translate) + "]"
        rk = ident(u)
        if rk is None:
            return None
        root, k = rk
        return f"r[{cox.rs.root_index(root.vector)},{rat_str(k)}]"

    return namer


@dataclass(frozen=True)
class AxialNaming:
    """Letter/subscript scheme for rank-2 euclidean dual generators.

    Vertical reflection lines are lettered in ascending order of the slope
    of their fixed line relative to the axis frame (axis direction nu
    vertical, the lexicographically positive horizontal root direction
    horizontal); the horizontal line takes the next letter with -/+ level
    subscripts.  Vertical subscripts are axial point indices shifted by a
    fixed offset, calibrated so that the axis-parallel root line lands on
    even subscripts and the slope-minimal line on subscripts 1 mod 4.
    """

    letters: dict[tuple, str]  # root vector -> letter
    offset: int
    horizontal_letter: str
    horizontal_levels: tuple[Q, Q]  # (minus level, plus level)


def axial_naming(cox: CoxeterElement) -> AxialNaming:
    if cox.rank != 2 or len(cox.horizontal_roots) != 1:
        raise ValueError("axial naming requires a rank-2 type with one horizontal line")
    h = cox.horizontal_roots[0].vector
    nu = cox.direction
    lines = sorted((-Q(dot(a.vector, h)) / dot(a.vector, nu), a.vector)
                   for a in cox.vertical_roots)
    letters = {a: ch for (_, a), ch in zip(lines, "abcdefghijklm")}
    hletter = "abcdefghijklm"[len(lines)]
    # calibrate the subscript offset: slope-minimal line on 1 mod 4
    a_line = lines[0][1]
    res = {g.axial % 4 for g in cox.R_V
           if cox.rs.roots[g.root].vector == a_line}
    if len(res) != 1:
        raise AssertionError("slope-minimal line must sit on a single residue class")
    need = (1 - res.pop()) % 4
    offset = need if need <= 1 else need - 4  # smallest absolute representative
    hlevels = sorted({g.k for g in cox.R_H})
    if len(hlevels) != 2:
        raise AssertionError("expected exactly two horizontal reflection levels")
    return AxialNaming(letters, offset, hletter, (hlevels[0], hlevels[1]))


def axial_namer(cox: CoxeterElement) -> Callable[[Isometry], str | None]:
    naming = axial_naming(cox)
    ident = _reflection_identifier(cox)
    nu = cox.direction
    s0 = cox.axial_s[0]

    def namer(u: Isometry) -> str | None:
        rk = ident(u)
        if rk is None:
            return None
        root, k = rk
        a = root.vector
        if dot(a, nu) == 0:
            if k == naming.horizontal_levels[0]:
                return naming.horizontal_letter + "₋"
            if k == naming.horizontal_levels[1]:
                return naming.horizontal_letter + "₊"
            return None
        s = (k - dot(a, cox.axis_base)) / dot(a, nu)
        i = (s - s0) / cox.axial_gap
        if i.denominator != 1:
            return None
        return naming.letters[a] + subscript(int(i) + naming.offset)

    return namer


def axial_sort_key(name: str) -> tuple:
    """Letter ascending, then subscript descending; - before + for the
    horizontal pair."""
    letter, sub = name[0], name[1:]
    if sub == "₋":
        return (letter, 0, 0)
    if sub == "₊":
        return (letter, 0, 1)
    digits = {s: str(d) for d, s in enumerate("₀₁₂₃₄₅₆₇₈₉")}
    digits["₋"] = "-"
    val = int("".join(digits[c] for c in sub))
    return (letter, -val, 0)


def w_dual_presentation(cox: CoxeterElement, interval: Interval,
                        axial: bool | None = None) -> Presentation:
    """Dual presentation of the windowed reflection interval, with the
    calibrated axial naming in rank 2 and neutral names otherwise."""
    if axial is None:
        axial = cox.rank == 2 and len(cox.horizontal_roots) == 1
    if axial:
        return dual_presentation(interval, axial_namer(cox),
                                 key_of=lambda u: u.key(),
                                 sort_key=axial_sort_key)
    return dual_presentation(interval, isometry_namer(cox),
                             key_of=lambda u: u.key())


def combined_presentation(data) -> Presentation:
    """Union of the translation-, factor- and reflection-interval
    presentations, merged on canonical generator names."""
    cox = data.cox
    namer = isometry_namer(cox)
    parts = [
        dual_presentation(data.subinterval("D"), namer, key_of=lambda u: u.key()),
        dual_presentation(data.factor.interval, namer, key_of=lambda u: u.key(),
                          payload_of=lambda p: p[1]),
        dual_presentation(data.w_interval, namer, key_of=lambda u: u.key()),
    ]
    return merge_presentations(parts)


def dihedral_interval(m: int) -> Interval:
    """[1, w] for the dihedral group of order 2m, w a rotation by one step.

    Elements are realized as permutations of Z/m via Mid-style signed maps:
    the rotation sends x to x+1 and the reflection s_k sends x to k-x.
    """

    @dataclass(frozen=True, order=True)
    class Dihedral:
        rot: int
        flip: bool
        m: int

        def __mul__(self, other):
            if self.flip:
                return Dihedral((self.rot - other.rot) % self.m,
                                not other.flip, self.m)
            return Dihedral((self.rot + other.rot) % self.m, other.flip, self.m)

        def inverse(self):
            if self.flip:
                return self
            return Dihedral((-self.rot) % self.m, False, self.m)

    ident = Dihedral(0, False, m)
    w = Dihedral(1, False, m)
    refls = [Dihedral(k, True, m) for k in range(m)]
    elements = [(ident, Q(0), ident), (w, Q(2), w)]
    elements += [(r, Q(1), r) for r in refls]
    edges = []
    for r in refls:
        edges.append((ident, r, r))
        edges.append((r, w, r.inverse() * w))
    return Interval(elements, edges)


def dihedral_presentation(m: int) -> Presentation:
    """The dual dihedral presentation: letters in descending mirror position
    so the relation chain reads ab = bc = .. = (last)(first)."""
    iv = dihedral_interval(m)

    def namer(r):
        return "abcdefghijklmnopqrstuvwxyz"[(m - 1 - r.rot) % m]

    return dual_presentation(iv, namer)


# -- Garside normal forms --------------------------------------------------


class GarsideData:
    """A verified finite lattice of simples with Delta = top.

    Payloads must form a group under * / inverse(); `key_of` maps a payload
    to its interval key.  Complements and conjugation by Delta are
    precomputed and checked: u * lcomp(u) = Delta, and conjugation by Delta
    is a poset automorphism of the simples (edge labels need not be
    preserved).
    """

    def __init__(self, simples: Interval, key_of: Callable[[Any], Hashable] = lambda u: u):
        simples.check_bounded()
        if simples.find_bowtie() is not None:
            raise AssertionError("simples must form a lattice")
        self.iv = simples
        self.key_of = key_of
        self.bottom_key = simples.keys[simples.bottom]
        self.top_key = simples.keys[simples.top]
        self.one = simples.payload[self.bottom_key]
        self.delta = simples.payload[self.top_key]
        self.lcomp: dict[Hashable, Hashable] = {}
        self.conj: dict[Hashable, Hashable] = {}
        dinv = self.delta.inverse()
        for k in simples.keys:
            u = simples.payload[k]
            c = u.inverse() * self.delta
            ck = key_of(c)
            if ck not in simples.index:
                raise AssertionError("left complement escaped the simples")
            self.lcomp[k] = ck
            t = dinv * u * self.delta
            tk = key_of(t)
            if tk not in simples.index:
                raise AssertionError("conjugation by Delta escaped the simples")
            self.conj[k] = tk
        self.conj_inv = {v: k for k, v in self.conj.items()}
        if len(self.conj_inv) != len(self.conj):
            raise AssertionError("conjugation by Delta must be a bijection")
        self._check_conj_automorphism()

    def _check_conj_automorphism(self):
        iv = self.iv
        perm = [iv.index[self.conj[k]] for k in iv.keys]
        up = iv.up_sets()
        for i in range(len(iv.keys)):
            image = 0
            m = up[i]
            while m:
                j = (m & -m).bit_length() - 1
                image |= 1 << perm[j]
                m &= m - 1
            if image != up[perm[i]]:
                raise AssertionError("conjugation by Delta must preserve the order")

    # -- key-level operations ---------------------------------------------

    def payload(self, key: Hashable):
        return self.iv.payload[key]

    def mul_key(self, a: Hashable, b: Hashable) -> Hashable:
        k = self.key_of(self.payload(a) * self.payload(b))
        if k not in self.iv.index:
            raise AssertionError("product of simples is not simple")
        return k

    def quot_key(self, a: Hashable, b: Hashable) -> Hashable:
        """Key of a^-1 b (requires the quotient to be simple)."""
        k = self.key_of(self.payload(a).inverse() * self.payload(b))
        if k not in self.iv.index:
            raise AssertionError("quotient of simples is not simple")
        return k

    def meet_key(self, a: Hashable, b: Hashable) -> Hashable:
        m = self.iv.meet(a, b)
        if m is None:
            raise AssertionError("lattice meet is missing")
        return m


def simple_pair_factorizations(G: GarsideData, key: Hashable) -> list[tuple]:
    """All weight-additive two-simple factorizations of a simple."""
    iv = G.iv
    out = []
    wz = iv.weight_of(key)
    for ak in iv.keys:
        if not iv.leq(ak, key):
            continue
        bk = G.quot_key(ak, key)
        if iv.weight_of(ak) + iv.weight_of(bk) == wz:
            out.append((ak, bk))
    return out


def rewriting_class(G: GarsideData, word: tuple) -> set[tuple]:
    """Closure of a positive word under the monoid rewriting moves: adjacent
    pair substitution through a common weight-additive product, merging an
    additive adjacent pair into one simple, and splitting a letter.  Two
    positive words are equal in the interval monoid exactly when they are
    connected by these moves (an independent oracle for normal forms)."""
    pair_cache: dict[Hashable, list[tuple]] = {}

    def pairs(z: Hashable) -> list[tuple]:
        if z not in pair_cache:
            pair_cache[z] = simple_pair_factorizations(G, z)
        return pair_cache[z]

    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for f in frontier:
            moves = []
            for i in range(len(f) - 1):
                u, v = f[i], f[i + 1]
                prod = G.key_of(G.payload(u) * G.payload(v))
                if prod not in G.iv.index:
                    continue
                wsum = G.iv.weight_of(u) + G.iv.weight_of(v)
                if G.iv.weight_of(prod) != wsum:
                    continue
                moves.append(f[:i] + (prod,) + f[i + 2:])
                for a, b in pairs(prod):
                    moves.append(f[:i] + (a, b) + f[i + 2:])
            for i in range(len(f)):
                for a, b in pairs(f[i]):
                    moves.append(f[:i] + (a, b) + f[i + 1:])
            for g in moves:
                g = tuple(x for x in g if x != G.bottom_key)
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class NormalForm:
    """Delta^power u_1 .. u_k with no u_i in {1, Delta}, left-greedy."""

    power: int
    simples: tuple

    def display(self, name: Callable[[Hashable], str] = str) -> str:
        parts = []
        if self.power:
            parts.append(f"D^{self.power}" if self.power != 1 else "D")
        parts.extend(name(u) for u in self.simples)
        return " ".join(parts) if parts else "1"


def _sweep(G: GarsideData, power: int, lst: list) -> tuple[int, list]:
    changed = True
    guard = 0
    while changed:
        changed = False
        for i in range(len(lst) - 1):
            u, v = lst[i], lst[i + 1]
            if v == G.bottom_key:
                continue
            s = G.meet_key(G.lcomp[u], v)
            if s != G.bottom_key:
                lst[i] = G.mul_key(u, s)
                lst[i + 1] = G.quot_key(s, v)
                changed = True
        guard += 1
        if guard > 4 * (len(lst) + 2) * (len(lst) + 2):
            raise AssertionError("normal form sweep did not stabilize")
    while lst and lst[0] == G.top_key:
        power += 1
        lst.pop(0)
    lst = [k for k in lst if k != G.bottom_key]
    return power, lst


def garside_nf(word: Iterable[tuple[Hashable, int]], G: GarsideData) -> NormalForm:
    """Left-greedy normal form of a product of simples and inverse simples.

    The word is a list of (simple key, +1/-1).  Inverse letters use
    u^-1 = lcomp(u) Delta^-1 and Delta^-1 is pushed to the front by
    conjugation, so the running form is always Delta^n u_1 .. u_k.
    """
    power = 0
    lst: list = []
    for key, exp in word:
        if key not in G.iv.index:
            raise ValueError("word contains a non-simple letter")
        if exp == 1:
            lst.append(key)
        elif exp == -1:
            power -= 1
            lst = [G.conj_inv[k] for k in lst]
            lst.append(G.conj_inv[G.lcomp[key]])
        else:
            raise ValueError("exponents must be +1 or -1")
        power, lst = _sweep(G, power, lst)
    power, lst = _sweep(G, power, lst)
    return NormalForm(power, tuple(lst))


def nf_value(nf: NormalForm, G: GarsideData):
    """Multiply a normal form back out in the underlying group."""
    val = G.one
    d = G.delta if nf.power >= 0 else G.delta.inverse()
    for _ in range(abs(nf.power)):
        val = val * d
    for k in nf.simples:
        val = val * G.payload(k)
    return val


def conj_by_delta(G: GarsideData, key: Hashable) -> Hashable:
    """The simple Delta^-1 u Delta (a poset automorphism of the simples)."""
    return G.conj[key]


def nf_conjugate(G: GarsideData, nf: NormalForm) -> NormalForm:
    """Termwise Delta-conjugate; left-greediness is preserved."""
    return NormalForm(nf.power, tuple(G.conj[k] for k in nf.simples))
