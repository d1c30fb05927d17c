"""Seeded random instance generators.

All generators are deterministic functions of their parameters plus the
seed, and every produced instance satisfies the type invariants.
"""

from __future__ import annotations

import random
from typing import Dict, Tuple

from .model import LAInstance
from .multigraph import Digraph, MultiGraph
from .reductions import ASLDHInstance, BLDHInstance, MMWCInstance


def _random_multigraph(rng: random.Random, n: int, edge_density: float, max_mult: int) -> MultiGraph:
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < edge_density:
                edges[(u, v)] = rng.randint(1, max(max_mult, 1))
    return MultiGraph(n, edges)


def _random_lists(rng: random.Random, n: int, r: int, list_density: float) -> Tuple:
    lists = []
    for _ in range(n):
        lam = {b for b in range(r) if rng.random() < list_density}
        if not lam:
            lam = {rng.randrange(r)}
        lists.append(frozenset(lam))
    return tuple(lists)


def gen_la(
    n: int,
    r: int,
    w: int,
    edge_density: float = 0.5,
    list_density: float = 0.6,
    max_mult: int = 2,
    seed: int = 0,
) -> LAInstance:
    """Random allocation instance whose weights sum to exactly w."""
    if w > 0 and r < 2:
        raise ValueError("w > 0 needs at least two boxes")
    rng = random.Random(seed)
    g = _random_multigraph(rng, n, edge_density, max_mult)
    lists = _random_lists(rng, n, r, list_density)
    alpha: Dict[Tuple[int, int], int] = {}
    for _ in range(w):
        i = rng.randrange(r)
        j = rng.randrange(r)
        while j == i:
            j = rng.randrange(r)
        key = (i, j) if i < j else (j, i)
        alpha[key] = alpha.get(key, 0) + 1
    return LAInstance(g, r, lists, alpha)


def gen_minmax(
    n: int,
    r: int,
    ell: int,
    edge_density: float = 0.5,
    max_mult: int = 2,
    seed: int = 0,
) -> MMWCInstance:
    if r > n:
        raise ValueError("more terminals than vertices")
    rng = random.Random(seed)
    g = _random_multigraph(rng, n, edge_density, max_mult)
    terminals = tuple(rng.sample(range(n), r))
    return MMWCInstance(g, ell, terminals)


def _random_host(rng: random.Random, h: int, host_density: float, loop_density: float) -> Digraph:
    arcs = {}
    for x in range(h):
        for y in range(h):
            if x == y:
                if rng.random() < loop_density:
                    arcs[(x, y)] = 1
            elif rng.random() < host_density:
                arcs[(x, y)] = 1
    return Digraph(h, arcs, loops_allowed=True)


def _random_guest(rng: random.Random, n: int, guest_density: float) -> Digraph:
    arcs = {}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < guest_density:
                arcs[(u, v)] = 1
    return Digraph(n, arcs, loops_allowed=False)


def gen_bldh(
    n: int,
    h: int,
    ell: int,
    guest_density: float = 0.3,
    host_density: float = 0.6,
    loop_density: float = 0.5,
    list_density: float = 0.7,
    seed: int = 0,
) -> BLDHInstance:
    rng = random.Random(seed)
    guest = _random_guest(rng, n, guest_density)
    host = _random_host(rng, h, host_density, loop_density)
    lists = _random_lists(rng, n, h, list_density)
    return BLDHInstance(guest, host, lists, ell)


def gen_asldh(
    n: int,
    h: int,
    d: int,
    guest_density: float = 0.3,
    host_density: float = 0.6,
    loop_density: float = 0.5,
    list_density: float = 0.7,
    seed: int = 0,
) -> ASLDHInstance:
    """Random arc-specified instance; d charge units are spread over the
    host's non-loop arcs (d collapses to 0 when the host has none)."""
    rng = random.Random(seed)
    guest = _random_guest(rng, n, guest_density)
    host = _random_host(rng, h, host_density, loop_density)
    lists = _random_lists(rng, n, h, list_density)
    nonloop = host.nonloop_arcs()
    alpha: Dict[Tuple[int, int], int] = {}
    if nonloop:
        for _ in range(d):
            arc = nonloop[rng.randrange(len(nonloop))]
            alpha[arc] = alpha.get(arc, 0) + 1
    return ASLDHInstance(guest, host, lists, alpha)
