"""List allocation instances, allocations, verification, sub-weight enumeration.

Box indices are 0-based everywhere inside the library; the serialization
layer converts to the 1-based external convention.

An alpha function is a dict mapping unordered box pairs (i, j) with i < j to
positive ints; absent pairs mean 0 (crossing between those boxes is
forbidden).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from .multigraph import MultiGraph

Alpha = Dict[Tuple[int, int], int]
PairVec = Tuple[int, ...]


def normalize_alpha(alpha: Alpha, r: int) -> Alpha:
    """Canonical form: keys sorted pairs i < j inside [r], zero values dropped."""
    out: Alpha = {}
    for (i, j), value in alpha.items():
        if i == j:
            raise ValueError(f"alpha pair ({i},{j}) is not a pair of distinct boxes")
        a, b = (i, j) if i < j else (j, i)
        if not (0 <= a < b < r):
            raise ValueError(f"alpha pair ({a},{b}) outside box range [0,{r})")
        if value < 0:
            raise ValueError(f"alpha({a},{b}) = {value} is negative")
        if value > 0:
            out[(a, b)] = out.get((a, b), 0) + value
    return dict(sorted(out.items()))


def alpha_total(alpha: Alpha) -> int:
    return sum(alpha.values())


def support_pairs(alpha: Alpha) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted(alpha))


def alpha_to_vec(alpha: Alpha, pairs: Tuple[Tuple[int, int], ...]) -> PairVec:
    return tuple(alpha.get(p, 0) for p in pairs)


def vec_to_alpha(vec: PairVec, pairs: Tuple[Tuple[int, int], ...]) -> Alpha:
    return {p: v for p, v in zip(pairs, vec) if v > 0}


@dataclass(frozen=True)
class LAInstance:
    """A graph, r boxes, per-vertex allowed-box lists, and exact pairwise
    crossing requirements."""

    g: MultiGraph
    r: int
    lists: Tuple[FrozenSet[int], ...]
    alpha: Alpha

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("need at least one box")
        if len(self.lists) != self.g.n:
            raise ValueError("lists must cover every vertex")
        for v, lam in enumerate(self.lists):
            for box in lam:
                if not (0 <= box < self.r):
                    raise ValueError(f"list of vertex {v} mentions box {box} outside [0,{self.r})")
        object.__setattr__(self, "alpha", normalize_alpha(self.alpha, self.r))

    @property
    def w(self) -> int:
        return alpha_total(self.alpha)


@dataclass(frozen=True)
class Allocation:
    """Total assignment of vertices to boxes."""

    boxes: Tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    kind: str  # "valid" | "list_violation" | "count_mismatch"
    vertex: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None
    found: Optional[int] = None
    required: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.kind == "valid"


VALID = Verdict("valid")


def crossing_counts(g: MultiGraph, boxes: Tuple[int, ...]) -> Alpha:
    """Crossing multiplicity per unordered box pair."""
    counts: Alpha = {}
    for (u, v), mult in g.edges.items():
        a, b = boxes[u], boxes[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        counts[key] = counts.get(key, 0) + mult
    return counts


def verify_allocation(inst: LAInstance, alloc: Allocation) -> Verdict:
    """Check both allocation conditions; first violation in canonical order
    (vertices ascending, then box pairs ascending) is reported."""
    boxes = alloc.boxes
    if len(boxes) != inst.g.n:
        raise ValueError("allocation must be total over the vertex set")
    for v, box in enumerate(boxes):
        if box not in inst.lists[v]:
            return Verdict("list_violation", vertex=v)
    counts = crossing_counts(inst.g, boxes)
    for pair in sorted(set(counts) | set(inst.alpha)):
        found = counts.get(pair, 0)
        required = inst.alpha.get(pair, 0)
        if found != required:
            return Verdict("count_mismatch", pair=pair, found=found, required=required)
    return VALID


def normalize(inst: LAInstance) -> LAInstance:
    """Cap every edge multiplicity at max(w, 1)."""
    cap = max(inst.w, 1)
    edges = {k: min(m, cap) for k, m in inst.g.edges.items()}
    if edges == inst.g.edges:
        return inst
    return LAInstance(MultiGraph(inst.g.n, edges), inst.r, inst.lists, inst.alpha)


class SubAlphaIterator:
    """Iterates every alpha' <= alpha exactly once.

    Canonical order: mixed-radix counter over the support pairs sorted
    lexicographically, last pair least significant (itertools.product order).
    """

    def __init__(self, alpha: Alpha):
        self.pairs = support_pairs(alpha)
        self.caps = tuple(alpha[p] for p in self.pairs)
        self._iter = itertools.product(*(range(c + 1) for c in self.caps))

    def __iter__(self) -> "SubAlphaIterator":
        return self

    def __next__(self) -> Alpha:
        vec = next(self._iter)
        return vec_to_alpha(vec, self.pairs)

    def count(self) -> int:
        out = 1
        for c in self.caps:
            out *= c + 1
        return out


def enumerate_sub_alpha(alpha: Alpha) -> SubAlphaIterator:
    return SubAlphaIterator(alpha)


def iter_sub_vecs(caps: PairVec) -> Iterator[PairVec]:
    """All vectors <= caps pointwise, in the canonical mixed-radix order."""
    return itertools.product(*(range(c + 1) for c in caps))


def vec_leq(a: PairVec, b: PairVec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def vec_add(a: PairVec, b: PairVec) -> PairVec:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: PairVec, b: PairVec) -> PairVec:
    return tuple(x - y for x, y in zip(a, b))


def crossing_edge_keys(g: MultiGraph, boxes: Tuple[int, ...]) -> List[Tuple[int, int]]:
    """Edges whose endpoints sit in different boxes (distinct keys)."""
    return sorted(k for k in g.edges if boxes[k[0]] != boxes[k[1]])
