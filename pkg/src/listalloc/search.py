"""Exact assignment search with list filtering and crossing-budget pruning.

Internal workhorse shared by the solver layers.  Enumerates box assignments
of a set of free vertices (optionally around pinned context vertices),
pruning any branch whose partial crossing counts exceed the per-pair caps or
touch a pair with no budget at all.  Enumeration order is deterministic:
free vertices in BFS order (components by smallest vertex, neighbors
ascending), boxes ascending; so "first found" is canonical.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import CapExceeded
from .model import PairVec
from .multigraph import MultiGraph

Assignment = Dict[int, int]


def _bfs_order(g: MultiGraph, free: List[int]) -> List[int]:
    free_set = set(free)
    order: List[int] = []
    seen = set()
    for start in sorted(free):
        if start in seen:
            continue
        seen.add(start)
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            order.append(v)
            for u in sorted(g.adj[v]):
                if u in free_set and u not in seen:
                    seen.add(u)
                    queue.append(u)
    return order


class _Space:
    def __init__(
        self,
        g: MultiGraph,
        lists: Sequence[FrozenSet[int]],
        pairs: Tuple[Tuple[int, int], ...],
        free: Optional[Sequence[int]] = None,
        context: Optional[Assignment] = None,
    ):
        context = context or {}
        if free is None:
            free = [v for v in range(g.n) if v not in context]
        self.order = _bfs_order(g, list(free))
        self.pairs = pairs
        self.pair_idx = {p: i for i, p in enumerate(pairs)}
        pos = {v: k for k, v in enumerate(self.order)}
        self.lists = [tuple(sorted(lists[v])) for v in self.order]
        # edges to earlier free vertices, and aggregated edges into the context
        self.prev: List[List[Tuple[int, int]]] = [[] for _ in self.order]
        self.ctx: List[List[Tuple[int, int]]] = [[] for _ in self.order]
        free_set = set(self.order)
        for k, v in enumerate(self.order):
            ctx_mult: Dict[int, int] = {}
            for u, mult in g.adj[v].items():
                if u in free_set:
                    if pos[u] < k:
                        self.prev[k].append((pos[u], mult))
                elif u in context:
                    box = context[u]
                    ctx_mult[box] = ctx_mult.get(box, 0) + mult
            self.ctx[k] = sorted(ctx_mult.items())
        # crossings fully inside the context are fixed up front
        base = [0] * len(pairs)
        self.base_ok = True
        for (u, v), mult in g.edges.items():
            if u in context and v in context:
                a, b = context[u], context[v]
                if a == b:
                    continue
                key = (a, b) if a < b else (b, a)
                idx = self.pair_idx.get(key)
                if idx is None:
                    self.base_ok = False
                    break
                base[idx] += mult
        self.base = base


class _Found(Exception):
    def __init__(self, assignment: Assignment):
        self.assignment = assignment


def _search(
    space: _Space,
    caps: PairVec,
    node_cap: int,
    target: Optional[PairVec],
    sink: Optional[Dict[PairVec, Assignment]],
):
    if not space.base_ok:
        return
    counts = list(space.base)
    if any(c > cap for c, cap in zip(counts, caps)):
        return
    order = space.order
    n_free = len(order)
    assign: List[int] = [0] * n_free
    nodes = 0
    pair_idx = space.pair_idx

    def rec(k: int):
        nonlocal nodes
        if k == n_free:
            vec = tuple(counts)
            if target is not None:
                if vec == target:
                    raise _Found({v: assign[i] for i, v in enumerate(order)})
                return
            if vec not in sink:
                sink[vec] = {v: assign[i] for i, v in enumerate(order)}
            return
        prev_k = space.prev[k]
        ctx_k = space.ctx[k]
        for box in space.lists[k]:
            nodes += 1
            if nodes > node_cap:
                raise CapExceeded(f"assignment search exceeded {node_cap} nodes")
            undo: List[Tuple[int, int]] = []
            ok = True
            for (pk, mult) in prev_k:
                other = assign[pk]
                if other == box:
                    continue
                key = (other, box) if other < box else (box, other)
                idx = pair_idx.get(key)
                if idx is None or counts[idx] + mult > caps[idx]:
                    ok = False
                    break
                counts[idx] += mult
                undo.append((idx, mult))
            if ok:
                for (cbox, mult) in ctx_k:
                    if cbox == box:
                        continue
                    key = (cbox, box) if cbox < box else (box, cbox)
                    idx = pair_idx.get(key)
                    if idx is None or counts[idx] + mult > caps[idx]:
                        ok = False
                        break
                    counts[idx] += mult
                    undo.append((idx, mult))
            if ok:
                assign[k] = box
                rec(k + 1)
            for idx, mult in undo:
                counts[idx] -= mult

    rec(0)


def profile_assignments(
    g: MultiGraph,
    lists: Sequence[FrozenSet[int]],
    pairs: Tuple[Tuple[int, int], ...],
    caps: PairVec,
    free: Optional[Sequence[int]] = None,
    context: Optional[Assignment] = None,
    node_cap: int = 10**7,
) -> Dict[PairVec, Assignment]:
    """Map every achievable crossing vector <= caps to its first witness."""
    space = _Space(g, lists, pairs, free, context)
    sink: Dict[PairVec, Assignment] = {}
    _search(space, caps, node_cap, None, sink)
    return sink


def first_exact_assignment(
    g: MultiGraph,
    lists: Sequence[FrozenSet[int]],
    pairs: Tuple[Tuple[int, int], ...],
    target: PairVec,
    free: Optional[Sequence[int]] = None,
    context: Optional[Assignment] = None,
    node_cap: int = 10**7,
) -> Optional[Assignment]:
    """First assignment whose crossing vector equals target, or None."""
    space = _Space(g, lists, pairs, free, context)
    try:
        _search(space, target, node_cap, target, None)
    except _Found as hit:
        return hit.assignment
    return None
