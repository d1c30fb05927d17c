"""Graph kernel: loopless undirected multigraphs, digraphs, cuts and cores.

Vertices are always the integers 0..n-1.  Parallel edges are stored as a
multiplicity per unordered pair, never as distinct objects.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

EdgeKey = Tuple[int, int]


def edge_key(u: int, v: int) -> EdgeKey:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MultiGraph:
    """Loopless undirected multigraph with positive integer multiplicities."""

    n: int
    edges: Dict[EdgeKey, int]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for (u, v), mult in self.edges.items():
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge key ({u},{v}) for n={self.n}")
            if mult < 1:
                raise ValueError(f"edge ({u},{v}) has multiplicity {mult}")

    @classmethod
    def from_edge_list(cls, n: int, edge_list: Iterable[Tuple[int, ...]]) -> "MultiGraph":
        """Build from (u, v) or (u, v, mult) entries; repeats accumulate."""
        edges: Dict[EdgeKey, int] = {}
        for entry in edge_list:
            u, v = entry[0], entry[1]
            mult = entry[2] if len(entry) > 2 else 1
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            key = edge_key(u, v)
            edges[key] = edges.get(key, 0) + mult
        return cls(n, edges)

    @cached_property
    def adj(self) -> Dict[int, Dict[int, int]]:
        out: Dict[int, Dict[int, int]] = {v: {} for v in range(self.n)}
        for (u, v), mult in self.edges.items():
            out[u][v] = mult
            out[v][u] = mult
        return out

    def total_multiplicity(self) -> int:
        return sum(self.edges.values())

    def degree(self, v: int) -> int:
        return sum(self.adj[v].values())

    def without_edges(self, removed: Iterable[EdgeKey]) -> "MultiGraph":
        gone = set(removed)
        return MultiGraph(self.n, {k: m for k, m in self.edges.items() if k not in gone})

    def induced(self, vertices: Iterable[int]) -> Tuple["MultiGraph", List[int], Dict[int, int]]:
        """Induced subgraph; returns (graph, old_of_new, new_of_old)."""
        old_of_new = sorted(vertices)
        new_of_old = {old: new for new, old in enumerate(old_of_new)}
        keep = set(old_of_new)
        edges = {}
        for (u, v), mult in self.edges.items():
            if u in keep and v in keep:
                edges[edge_key(new_of_old[u], new_of_old[v])] = mult
        return MultiGraph(len(old_of_new), edges), old_of_new, new_of_old


@dataclass(frozen=True)
class Digraph:
    """Digraph with at most one stored arc per ordered pair.

    Arcs carry a multiplicity so that contractions (which can merge several
    original arcs onto one ordered pair) keep their counts.  Hosts always use
    multiplicity 1; loops (v, v) are legal only when loops_allowed is set.
    """

    n: int
    arcs: Dict[Tuple[int, int], int]
    loops_allowed: bool = False

    def __post_init__(self):
        for (u, v), mult in self.arcs.items():
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"bad arc ({u},{v}) for n={self.n}")
            if u == v and not self.loops_allowed:
                raise ValueError(f"loop at {u} not allowed here")
            if mult < 1:
                raise ValueError(f"arc ({u},{v}) has multiplicity {mult}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Tuple[int, ...]], loops_allowed: bool = False) -> "Digraph":
        out: Dict[Tuple[int, int], int] = {}
        for entry in arcs:
            u, v = entry[0], entry[1]
            mult = entry[2] if len(entry) > 2 else 1
            out[(u, v)] = out.get((u, v), 0) + mult
        return cls(n, out, loops_allowed)

    def loops(self) -> List[int]:
        """Vertices carrying a loop."""
        return sorted(v for (u, v) in self.arcs if u == v)

    def nonloop_arcs(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for (u, v) in self.arcs if u != v)

    def total_arc_multiplicity(self) -> int:
        return sum(m for (u, v), m in self.arcs.items() if u != v) + sum(
            m for (u, v), m in self.arcs.items() if u == v
        )


@dataclass(frozen=True)
class Separation:
    """Bipartition of a vertex set with its crossing multiplicity."""

    side1: FrozenSet[int]
    side2: FrozenSet[int]
    cut_size: int


def _normalized_separation(side_a: Iterable[int], side_b: Iterable[int], cut: int) -> Separation:
    a, b = frozenset(side_a), frozenset(side_b)
    if tuple(sorted(a)) > tuple(sorted(b)):
        a, b = b, a
    return Separation(a, b, cut)


def components(g: MultiGraph) -> List[FrozenSet[int]]:
    """Connected components, ordered by smallest contained vertex."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(frozenset(comp))
    return out


def is_connected(g: MultiGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def contract_edges(
    g: MultiGraph, ec: Iterable[EdgeKey]
) -> Tuple[MultiGraph, Tuple[int, ...]]:
    """Contract an edge multiset.

    Vertices in a common component of (V, ec) are identified; multiplicities
    of surviving parallel edges are summed; edges internal to a contracted
    class disappear (the result stays loopless).  New vertices are numbered
    by the smallest original vertex of their class.  Returns the contracted
    graph and the old-vertex -> new-vertex map.
    """
    demanded: Dict[EdgeKey, int] = {}
    for entry in ec:
        key = edge_key(entry[0], entry[1])
        demanded[key] = demanded.get(key, 0) + 1
    for key, count in demanded.items():
        have = g.edges.get(key, 0)
        if have < count:
            raise ValueError(f"edge {key} requested {count} times, present {have}")

    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v) in demanded:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted({find(v) for v in range(g.n)})
    new_id = {root: i for i, root in enumerate(roots)}
    vmap = tuple(new_id[find(v)] for v in range(g.n))

    edges: Dict[EdgeKey, int] = {}
    for (u, v), mult in g.edges.items():
        cu, cv = vmap[u], vmap[v]
        if cu == cv:
            continue
        key = edge_key(cu, cv)
        edges[key] = edges.get(key, 0) + mult
    return MultiGraph(len(roots), edges), vmap


def global_min_cut(g: MultiGraph) -> Tuple[int, Separation]:
    """Stoer-Wagner minimum cut of a connected multigraph, n >= 2.

    Deterministic: phases start from the smallest active vertex and
    max-adjacency ties prefer the smallest vertex id.
    """
    if g.n < 2:
        raise ValueError("min cut needs at least two vertices")
    if not is_connected(g):
        raise ValueError("min cut requires a connected graph")

    weight = [[0] * g.n for _ in range(g.n)]
    for (u, v), mult in g.edges.items():
        weight[u][v] = mult
        weight[v][u] = mult
    groups: List[List[int]] = [[v] for v in range(g.n)]
    active = list(range(g.n))

    best_value: Optional[int] = None
    best_side: List[int] = []

    while len(active) > 1:
        start = active[0]
        in_a = {start}
        w_to_a = {v: weight[start][v] for v in active if v != start}
        prev, last = start, start
        while len(in_a) < len(active):
            last_added = max(
                (v for v in active if v not in in_a),
                key=lambda v: (w_to_a[v], -v),
            )
            prev, last = last, last_added
            in_a.add(last_added)
            for v in active:
                if v not in in_a:
                    w_to_a[v] += weight[last_added][v]
        cut_of_phase = sum(weight[last][v] for v in active if v != last)
        if best_value is None or cut_of_phase < best_value:
            best_value = cut_of_phase
            best_side = list(groups[last])
        # merge last into prev
        for v in active:
            if v not in (prev, last):
                weight[prev][v] += weight[last][v]
                weight[v][prev] = weight[prev][v]
        groups[prev].extend(groups[last])
        active.remove(last)

    assert best_value is not None
    other = [v for v in range(g.n) if v not in set(best_side)]
    return best_value, _normalized_separation(best_side, other, best_value)


def d_edge_core(g: MultiGraph, d: int, order_seed: Optional[int] = None) -> MultiGraph:
    """Edge-maximal subgraph all of whose components are d-edge-connected.

    Repeatedly removes the edges of a min-cut of value < d inside some
    component, dropping isolated vertices, until every surviving component
    has min cut >= d.  The result is unique, so the processing order (which
    order_seed can shuffle, for testing) does not matter.  Vertex identity is
    preserved: the returned graph has the same n and only core edges.
    """
    if d < 1:
        raise ValueError("d must be positive")
    current = dict(g.edges)

    def pieces_of(vertices: Iterable[int]) -> List[List[int]]:
        verts = sorted(vertices)
        adj: Dict[int, List[int]] = {v: [] for v in verts}
        vset = set(verts)
        for (u, v) in current:
            if u in vset and v in vset:
                adj[u].append(v)
                adj[v].append(u)
        seen = set()
        out = []
        for s in verts:
            if s in seen:
                continue
            stack, comp = [s], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            if len(comp) >= 2:
                out.append(sorted(comp))
        return out

    rng = random.Random(order_seed) if order_seed is not None else None
    work = pieces_of(range(g.n))
    kept: Dict[EdgeKey, int] = {}
    while work:
        if rng is not None:
            rng.shuffle(work)
        piece = work.pop(0)
        sub_edges = {
            (u, v): m for (u, v), m in current.items() if u in set(piece) and v in set(piece)
        }
        sub = MultiGraph(g.n, sub_edges)
        sub_small, old_of_new, new_of_old = sub.induced(piece)
        value, sep = global_min_cut(sub_small)
        if value >= d:
            kept.update(sub_edges)
            continue
        crossing = [
            (old_of_new[u], old_of_new[v])
            for (u, v) in sub_small.edges
            if (u in sep.side1) != (v in sep.side1)
        ]
        for (u, v) in crossing:
            del current[edge_key(u, v)]
        work.extend(pieces_of(piece))
    return MultiGraph(g.n, kept)


def core_vertices(core: MultiGraph) -> List[int]:
    """Non-isolated vertices of a core graph."""
    out = set()
    for (u, v) in core.edges:
        out.add(u)
        out.add(v)
    return sorted(out)


def find_good_separation(g: MultiGraph, q: int, y: int) -> Optional[Separation]:
    """Find a separation with both sides connected, both of size > q, and
    crossing multiplicity <= y; None if no such separation exists.

    Enumerates candidate crossing edge sets (all-or-none per parallel class,
    total multiplicity <= y) and keeps those whose removal leaves exactly two
    components.  Among all valid separations the one with lexicographically
    smallest side-1 vertex set is returned, which makes downstream behavior
    deterministic.
    """
    if not is_connected(g):
        raise ValueError("good separations are defined on connected graphs")
    if g.n < 2 * (q + 1):
        return None

    edge_items = sorted(g.edges.items())
    best: Optional[Tuple[Tuple[int, ...], Separation]] = None
    seen_splits = set()

    def consider(removed: List[EdgeKey]):
        nonlocal best
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        gone = set(removed)
        for (u, v) in g.edges:
            if (u, v) in gone:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        roots = {find(v) for v in range(g.n)}
        if len(roots) != 2:
            return
        r0 = min(roots)
        side_a = frozenset(v for v in range(g.n) if find(v) == r0)
        side_b = frozenset(range(g.n)) - side_a
        key = (side_a, side_b) if min(side_a) < min(side_b) else (side_b, side_a)
        if key in seen_splits:
            return
        seen_splits.add(key)
        if len(side_a) <= q or len(side_b) <= q:
            return
        cut = sum(m for (u, v), m in g.edges.items() if (u in side_a) != (v in side_a))
        if cut > y:
            return
        sep = _normalized_separation(side_a, side_b, cut)
        tag = tuple(sorted(sep.side1))
        if best is None or tag < best[0]:
            best = (tag, sep)

    chosen: List[EdgeKey] = []

    def rec(idx: int, budget: int):
        if chosen:
            consider(chosen)
        if idx == len(edge_items) or budget == 0:
            return
        for j in range(idx, len(edge_items)):
            key, mult = edge_items[j]
            if mult <= budget:
                chosen.append(key)
                rec(j + 1, budget - mult)
                chosen.pop()

    rec(0, y)
    return best[1] if best else None
