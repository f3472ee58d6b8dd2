"""Graded intervals and lattice checks.

An `Interval` is a finite graded poset presented by weight-additive generator
edges: u -> u.g whenever both endpoints belong to the interval and the weight
is additive.  The partial order is the reachability closure of these edges.
Order data is held as big-integer bitsets, which keeps meet/join and the
exhaustive bowtie (lattice failure) search fast even for intervals with
thousands of elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Any, Hashable, Iterable


@dataclass(frozen=True)
class Bowtie:
    """Witness of a lattice failure: a and b admit two minimal upper bounds
    (or dually two maximal lower bounds) c and d."""

    a: Hashable
    b: Hashable
    c: Hashable
    d: Hashable
    kind: str  # "join" or "meet"


class Interval:
    """A graded interval with explicit elements and weight-additive edges."""

    def __init__(self, elements: Iterable[tuple[Hashable, Q, Any]],
                 edges: Iterable[tuple[Hashable, Hashable, Any]]):
        elems = sorted(((Q(w), k, d) for (k, w, d) in elements))
        self.keys = tuple(k for (_, k, _) in elems)
        self.weights = tuple(w for (w, _, _) in elems)
        self.payload = {k: d for (_, k, d) in elems}
        self.index = {k: i for i, k in enumerate(self.keys)}
        n = len(self.keys)
        self.succ: list[list[int]] = [[] for _ in range(n)]
        self.pred: list[list[int]] = [[] for _ in range(n)]
        self.edge_labels: dict[tuple[int, int], Any] = {}
        for (a, b, lab) in edges:
            i, j = self.index[a], self.index[b]
            if self.weights[i] >= self.weights[j]:
                raise ValueError("edges must strictly increase weight")
            if (i, j) not in self.edge_labels:
                self.succ[i].append(j)
                self.pred[j].append(i)
            self.edge_labels[(i, j)] = lab
        self._up: list[int] | None = None
        self._down: list[int] | None = None

    # -- basic structure --------------------------------------------------

    def __len__(self) -> int:
        return len(self.keys)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.keys) - 1

    def weight_of(self, key: Hashable) -> Q:
        return self.weights[self.index[key]]

    def rank_counts(self) -> dict[Q, int]:
        out: dict[Q, int] = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out

    def check_bounded(self) -> None:
        wts = self.weights
        if wts.count(wts[0]) != 1 or wts.count(wts[-1]) != 1:
            raise AssertionError("interval must have unique bottom and top")

    # -- order relation ----------------------------------------------------

    def up_sets(self) -> list[int]:
        """up[i] has bit j set iff i <= j (reachability over edges)."""
        if self._up is None:
            n = len(self.keys)
            up = [0] * n
            for i in range(n - 1, -1, -1):
                m = 1 << i
                for j in self.succ[i]:
                    m |= up[j]
                up[i] = m
            self._up = up
        return self._up

    def down_sets(self) -> list[int]:
        if self._down is None:
            n = len(self.keys)
            down = [0] * n
            for i in range(n):
                m = 1 << i
                for j in self.pred[i]:
                    m |= down[j]
                down[i] = m
            self._down = down
        return self._down

    def leq(self, a: Hashable, b: Hashable) -> bool:
        i, j = self.index[a], self.index[b]
        return bool(self.up_sets()[i] >> j & 1)

    def _extreme(self, mask: int, want_min: bool) -> list[int]:
        """Indices of minimal (or maximal) weight among the bits of mask."""
        best: Q | None = None
        out: list[int] = []
        i = 0
        while mask:
            if mask & 1:
                w = self.weights[i]
                if best is None or (w < best if want_min else w > best):
                    best, out = w, [i]
                elif w == best:
                    out.append(i)
            mask >>= 1
            i += 1
        return out

    def join(self, a: Hashable, b: Hashable) -> Hashable | None:
        """Least upper bound, or None if it does not exist."""
        i, j = self.index[a], self.index[b]
        up = self.up_sets()
        common = up[i] & up[j]
        if common == 0:
            return None
        cands = self._extreme(common, want_min=True)
        if len(cands) != 1:
            return None
        m = cands[0]
        return self.keys[m] if common & ~up[m] == 0 else None

    def meet(self, a: Hashable, b: Hashable) -> Hashable | None:
        """Greatest lower bound, or None if it does not exist."""
        i, j = self.index[a], self.index[b]
        down = self.down_sets()
        common = down[i] & down[j]
        if common == 0:
            return None
        cands = self._extreme(common, want_min=False)
        if len(cands) != 1:
            return None
        m = cands[0]
        return self.keys[m] if common & ~down[m] == 0 else None

    # -- lattice check -----------------------------------------------------

    def find_bowtie(self, restrict: Iterable[Hashable] | None = None) -> Bowtie | None:
        """Exhaustive search for a pair without a join (dually, without a meet).

        `restrict` limits the *pair* search to the given elements; bounds are
        still sought in the whole interval.  Returns None when every checked
        pair has both a join and a meet.
        """
        idxs = (range(len(self.keys)) if restrict is None
                else sorted(self.index[k] for k in restrict))
        up, down = self.up_sets(), self.down_sets()
        for pos, i in enumerate(idxs):
            for j in idxs[pos + 1:]:
                w = self._bound_failure(i, j, up, want_min=True, kind="join")
                if w is None:
                    w = self._bound_failure(i, j, down, want_min=False, kind="meet")
                if w is not None:
                    return w
        return None

    def _bound_failure(self, i: int, j: int, rel: list[int],
                       want_min: bool, kind: str) -> Bowtie | None:
        common = rel[i] & rel[j]
        if common == 0:
            return None  # unbounded pairs cannot witness a bowtie
        cands = self._extreme(common, want_min=want_min)
        if len(cands) > 1:
            return Bowtie(self.keys[i], self.keys[j], self.keys[cands[0]],
                          self.keys[cands[1]], kind)
        m = cands[0]
        rest = common & ~rel[m]
        if rest:
            other = self._extreme(rest, want_min=want_min)[0]
            return Bowtie(self.keys[i], self.keys[j], self.keys[m],
                          self.keys[other], kind)
        return None

    def is_lattice(self) -> bool:
        self.check_bounded()
        return self.find_bowtie() is None

    # -- covers and extrema ------------------------------------------------

    def atoms(self) -> list[Hashable]:
        """Elements whose only strict lower bound is the bottom."""
        down = self.down_sets()
        bot = self.bottom
        return [self.keys[i] for i in range(len(self.keys))
                if i != bot and down[i] == (1 << i) | (1 << bot)]

    def hasse_edges(self) -> list[tuple[Hashable, Hashable]]:
        """Cover relations of the order (for rendering)."""
        up = self.up_sets()
        n = len(self.keys)
        out = []
        for i in range(n):
            above = up[i] & ~(1 << i)
            m = above
            covers = above
            while m:
                j = (m & -m).bit_length() - 1
                covers &= ~(up[j] & ~(1 << j))
                m &= m - 1
            m = covers
            while m:
                j = (m & -m).bit_length() - 1
                out.append((self.keys[i], self.keys[j]))
                m &= m - 1
        return out


def complement_map(interval: Interval, key_of=lambda u: u,
                   strict: bool = True) -> dict[Hashable, Hashable]:
    """The map u -> u^-1 w on keys; asserted injective and order-reversing.

    Payloads must support `inverse()` and `*`; `key_of` turns a payload back
    into an interval key.  With `strict` every complement must be present (a
    complete finite interval); without it, elements whose complement was not
    materialized in a finite window are skipped and the checks cover the rest.
    """
    top_payload = interval.payload[interval.keys[interval.top]]
    out: dict[Hashable, Hashable] = {}
    for k in interval.keys:
        v = interval.payload[k].inverse() * top_payload
        kv = key_of(v)
        if kv not in interval.index:
            if strict:
                raise AssertionError("complement left the interval")
            continue
        out[k] = kv
    if len(set(out.values())) != len(out):
        raise AssertionError("complement map must be a bijection")
    up, down = interval.up_sets(), interval.down_sets()
    comp_idx = {interval.index[a]: interval.index[b] for a, b in out.items()}
    for i, ci in comp_idx.items():
        m = up[i]
        j = 0
        while m:
            if m & 1 and j in comp_idx and not (down[ci] >> comp_idx[j]) & 1:
                raise AssertionError("complement map must reverse the order")
            m >>= 1
            j += 1
    return out


def project_to(interval: Interval, key: Hashable,
               targets: Iterable[Hashable], upward: bool) -> Hashable:
    """Unique minimum of up-set(key) among targets (dually, unique maximum of
    the down-set); raises when the extremum is not unique."""
    rel = interval.up_sets() if upward else interval.down_sets()
    i = interval.index[key]
    mask = 0
    for t in targets:
        mask |= 1 << interval.index[t]
    mask &= rel[i]
    if mask == 0:
        raise AssertionError("projection target set is empty")
    cands = interval._extreme(mask, want_min=upward)
    if len(cands) != 1:
        raise AssertionError("projection extremum must be unique")
    m = cands[0]
    if mask & ~(rel[m]) != 0:
        raise AssertionError("projection extremum must bound the whole set")
    return interval.keys[m]


def interval_json(interval: Interval, label_str=str, row_of=None) -> dict:
    """Poset JSON: elements with weights (and rows when classified), labeled
    covers, bottom and top ids."""
    from .linalg import rat_str

    elements = []
    for i, k in enumerate(interval.keys):
        entry = {"id": i, "key": str(k), "weight": rat_str(interval.weights[i])}
        if row_of is not None:
            entry["row"] = row_of(k)
        elements.append(entry)
    covers = [[i, j, None if lab is None else label_str(lab)]
              for (i, j), lab in sorted(interval.edge_labels.items())]
    return {"elements": elements, "covers": covers,
            "bottom": interval.bottom, "top": interval.top}


def interval_from_order(elements: Iterable[tuple[Hashable, Q, Any]],
                        leq) -> Interval:
    """Build an Interval directly from a comparison predicate (small oracles)."""
    elems = sorted(((Q(w), k, d) for (k, w, d) in elements))
    edges = []
    for (wi, ki, _) in elems:
        for (wj, kj, _) in elems:
            if wi < wj and leq(ki, kj):
                edges.append((ki, kj, None))
    return Interval([(k, w, d) for (w, k, d) in elems], edges)
