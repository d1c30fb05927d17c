"""Front-end problems and their reductions to list allocation.

Min-max multiway cut sweeps a family of exact weight functions; bounded list
digraph homomorphism sweeps arc-charge prescriptions, each solved through a
sparsifier and a double-subdivision gadget that turns the homomorphism into
an allocation with one box per vertex of the subdivided host.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from .errors import CapExceeded
from .model import (
    Allocation,
    LAInstance,
    alpha_to_vec,
    vec_add,
    vec_leq,
    verify_allocation,
)
from .multigraph import Digraph, MultiGraph, components, d_edge_core, edge_key
from .search import profile_assignments
from .solver import DEFAULT_CONFIG, PipelineConfig, solve_la

ArcAlpha = Dict[Tuple[int, int], int]


# ---------------------------------------------------------------------------
# instance types


@dataclass(frozen=True)
class MMWCInstance:
    """Min-max multiway cut: every part holds one terminal and has at most
    ell outgoing edges (multiplicity counted)."""

    g: MultiGraph
    ell: int
    terminals: Tuple[int, ...]

    def __post_init__(self):
        if self.ell < 0:
            raise ValueError("ell must be nonnegative")
        if len(set(self.terminals)) != len(self.terminals) or not self.terminals:
            raise ValueError("terminals must be distinct and nonempty")
        for t in self.terminals:
            if not (0 <= t < self.g.n):
                raise ValueError(f"terminal {t} outside the vertex range")

    @property
    def r(self) -> int:
        return len(self.terminals)


@dataclass(frozen=True)
class Partition:
    """Vertex -> part index; part k owns terminal k."""

    parts: Tuple[int, ...]


def _normalize_arc_alpha(alpha: ArcAlpha, host: Digraph) -> ArcAlpha:
    nonloop = set(host.nonloop_arcs())
    out: ArcAlpha = {}
    for arc, val in alpha.items():
        if arc not in nonloop:
            raise ValueError(f"alpha assigned to {arc}, not a non-loop host arc")
        if val < 0:
            raise ValueError(f"alpha({arc}) negative")
        if val > 0:
            out[arc] = val
    return dict(sorted(out.items()))


def _check_hom_shapes(guest: Digraph, host: Digraph, lists):
    if guest.loops_allowed:
        raise ValueError("guest digraphs are loopless")
    if len(lists) != guest.n:
        raise ValueError("lists must cover every guest vertex")
    for v, lam in enumerate(lists):
        for x in lam:
            if not (0 <= x < host.n):
                raise ValueError(f"list of {v} mentions host vertex {x} outside range")


@dataclass(frozen=True)
class BLDHInstance:
    """Bounded list digraph homomorphism: total non-loop arc charge <= ell."""

    guest: Digraph
    host: Digraph
    lists: Tuple[FrozenSet[int], ...]
    ell: int

    def __post_init__(self):
        _check_hom_shapes(self.guest, self.host, self.lists)
        if self.ell < 0:
            raise ValueError("ell must be nonnegative")


@dataclass(frozen=True)
class ASLDHInstance:
    """Arc-specified variant: |C(e)| = alpha(e) for every non-loop host arc."""

    guest: Digraph
    host: Digraph
    lists: Tuple[FrozenSet[int], ...]
    alpha: ArcAlpha

    def __post_init__(self):
        _check_hom_shapes(self.guest, self.host, self.lists)
        object.__setattr__(self, "alpha", _normalize_arc_alpha(self.alpha, self.host))

    @property
    def d(self) -> int:
        return sum(self.alpha.values())


# ---------------------------------------------------------------------------
# homomorphism checking (solver side; the oracle keeps its own copy)


def hom_charges(guest: Digraph, host: Digraph, chi) -> Optional[ArcAlpha]:
    """Non-loop arc charges of chi, or None when chi is not a homomorphism."""
    counts: ArcAlpha = {}
    for (u, v), mult in sorted(guest.arcs.items()):
        image = (chi[u], chi[v])
        if image not in host.arcs:
            return None
        if image[0] != image[1]:
            counts[image] = counts.get(image, 0) + mult
    return counts


def check_bldh(inst: BLDHInstance, chi) -> bool:
    if any(chi[v] not in inst.lists[v] for v in range(inst.guest.n)):
        return False
    counts = hom_charges(inst.guest, inst.host, chi)
    return counts is not None and sum(counts.values()) <= inst.ell


def check_asldh(inst: ASLDHInstance, chi) -> bool:
    if any(chi[v] not in inst.lists[v] for v in range(inst.guest.n)):
        return False
    counts = hom_charges(inst.guest, inst.host, chi)
    return counts == inst.alpha


def check_mbldh(inst: BLDHInstance, chi) -> bool:
    if any(chi[v] not in inst.lists[v] for v in range(inst.guest.n)):
        return False
    counts = hom_charges(inst.guest, inst.host, chi)
    if counts is None:
        return False
    for v in range(inst.host.n):
        incident = sum(c for (x, y), c in counts.items() if v in (x, y))
        if incident > inst.ell:
            return False
    return True


# ---------------------------------------------------------------------------
# min-max multiway cut


def minmax_lists(inst: MMWCInstance) -> Tuple[FrozenSet[int], ...]:
    """Terminal k is pinned to box k, everyone else may go anywhere."""
    full = frozenset(range(inst.r))
    pinned = {t: k for k, t in enumerate(inst.terminals)}
    return tuple(
        frozenset((pinned[v],)) if v in pinned else full for v in range(inst.g.n)
    )


def reduce_minmax_to_la(inst: MMWCInstance) -> Iterator[LAInstance]:
    """One allocation instance per weight function whose every row sums to at
    most ell, in canonical mixed-radix order."""
    r = inst.r
    lists = minmax_lists(inst)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    for values in itertools.product(range(inst.ell + 1), repeat=len(pairs)):
        rows = [0] * r
        for (i, j), val in zip(pairs, values):
            rows[i] += val
            rows[j] += val
        if any(row > inst.ell for row in rows):
            continue
        alpha = {p: v for p, v in zip(pairs, values) if v > 0}
        yield LAInstance(inst.g, r, lists, alpha)


def _partition_ok(inst: MMWCInstance, parts: Tuple[int, ...]) -> bool:
    r = inst.r
    if any(parts[t] != k for k, t in enumerate(inst.terminals)):
        return False
    if any(not (0 <= p < r) for p in parts):
        return False
    outgoing = [0] * r
    for (u, v), mult in inst.g.edges.items():
        if parts[u] != parts[v]:
            outgoing[parts[u]] += mult
            outgoing[parts[v]] += mult
    return all(out <= inst.ell for out in outgoing)


def solve_minmax(
    inst: MMWCInstance, cfg: PipelineConfig = DEFAULT_CONFIG
) -> Optional[Partition]:
    """Sweep the weight-function family; the first member admitting an
    allocation induces the partition (box k -> part k).

    The family shares one graph and one list function, so the sweep is
    resolved through per-component achievable-crossing profiles folded into
    a reachability table, rather than one full solve per member; the verdict
    and the first feasible member are the same.
    """
    r = inst.r
    lists = minmax_lists(inst)
    pairs = tuple((i, j) for i in range(r) for j in range(i + 1, r))
    caps = tuple(inst.ell for _ in pairs)

    profiles = None
    if not cfg.test_mode:
        try:
            profiles = [
                profile_assignments(
                    inst.g, lists, pairs, caps, free=sorted(comp), node_cap=cfg.oracle_cap
                )
                for comp in components(inst.g)
            ]
        except CapExceeded:
            profiles = None
    if profiles is None:
        for member in reduce_minmax_to_la(inst):
            alloc = solve_la(member, cfg)
            if alloc is not None:
                parts = Partition(alloc.boxes)
                assert _partition_ok(inst, parts.parts)
                return parts
        return None

    def row_ok(vec) -> bool:
        rows = [0] * r
        for (i, j), val in zip(pairs, vec):
            rows[i] += val
            rows[j] += val
        return all(row <= inst.ell for row in rows)

    zero = tuple(0 for _ in pairs)
    reach: Dict[tuple, tuple] = {zero: ("start",)}
    trail: List[Dict[tuple, tuple]] = []
    for prof in profiles:
        nxt: Dict[tuple, tuple] = {}
        deltas = sorted(prof)
        for vec in sorted(reach):
            for delta in deltas:
                nv = vec_add(vec, delta)
                if vec_leq(nv, caps) and row_ok(nv) and nv not in nxt:
                    nxt[nv] = (vec, delta)
        trail.append(nxt)
        reach = nxt
        if not reach:
            return None

    for values in itertools.product(range(inst.ell + 1), repeat=len(pairs)):
        if not row_ok(values):
            continue
        if values not in reach:
            continue
        boxes = [0] * inst.g.n
        vec = values
        for ci in range(len(profiles) - 1, -1, -1):
            prev, delta = trail[ci][vec]
            for v, box in profiles[ci][delta].items():
                boxes[v] = box
            vec = prev
        parts = Partition(tuple(boxes))
        assert _partition_ok(inst, parts.parts)
        return parts
    return None


# ---------------------------------------------------------------------------
# homomorphism problems


def reduce_bldh_to_asldh(inst: BLDHInstance) -> Iterator[ASLDHInstance]:
    """Every charge prescription with total at most ell, canonical order."""
    arcs = inst.host.nonloop_arcs()
    for values in itertools.product(range(inst.ell + 1), repeat=len(arcs)):
        if sum(values) > inst.ell:
            continue
        alpha = {arc: v for arc, v in zip(arcs, values) if v > 0}
        yield ASLDHInstance(inst.guest, inst.host, inst.lists, alpha)


def reduce_mbldh(inst: BLDHInstance) -> Iterator[ASLDHInstance]:
    """Every charge prescription whose per-host-vertex incident total is at
    most ell, canonical order."""
    arcs = inst.host.nonloop_arcs()
    for values in itertools.product(range(inst.ell + 1), repeat=len(arcs)):
        loads = [0] * inst.host.n
        for (x, y), val in zip(arcs, values):
            loads[x] += val
            loads[y] += val
        if any(load > inst.ell for load in loads):
            continue
        alpha = {arc: v for arc, v in zip(arcs, values) if v > 0}
        yield ASLDHInstance(inst.guest, inst.host, inst.lists, alpha)


@dataclass(frozen=True)
class SparsifyResult:
    resolved_no: bool
    instance: Optional[ASLDHInstance]
    vertex_map: Optional[Tuple[int, ...]]  # original guest vertex -> new vertex


def sparsify_asldh(inst: ASLDHInstance) -> SparsifyResult:
    """Contract the (d+1)-edge-connected core classes of the underlying
    multigraph of the guest.

    Inside such a class at most d crossing arcs would disconnect it, so all
    its vertices share one image; the class list is the intersection of the
    member lists, further restricted to looped host vertices when the class
    contains an arc (its image must absorb that arc as a loop).  Resolves NO
    when a class list empties.
    """
    d = inst.d
    und_edges: Dict[Tuple[int, int], int] = {}
    for (u, v), mult in inst.guest.arcs.items():
        key = edge_key(u, v)
        und_edges[key] = und_edges.get(key, 0) + mult
    underlying = MultiGraph(inst.guest.n, und_edges)
    core = d_edge_core(underlying, d + 1)

    class_of = list(range(inst.guest.n))
    for comp in components(core):
        if len(comp) < 2:
            continue
        rep = min(comp)
        for v in comp:
            class_of[v] = rep
    reps = sorted(set(class_of))
    new_id = {rep: i for i, rep in enumerate(reps)}
    vmap = tuple(new_id[class_of[v]] for v in range(inst.guest.n))

    members: List[List[int]] = [[] for _ in reps]
    for v in range(inst.guest.n):
        members[vmap[v]].append(v)

    new_arcs: Dict[Tuple[int, int], int] = {}
    has_internal_arc = [False] * len(reps)
    for (u, v), mult in inst.guest.arcs.items():
        cu, cv = vmap[u], vmap[v]
        if cu == cv:
            has_internal_arc[cu] = True
            continue
        new_arcs[(cu, cv)] = new_arcs.get((cu, cv), 0) + mult

    looped = frozenset(inst.host.loops())
    new_lists = []
    for ci, group in enumerate(members):
        lam = frozenset(range(inst.host.n))
        for v in group:
            lam &= inst.lists[v]
        if has_internal_arc[ci]:
            lam &= looped
        if not lam:
            return SparsifyResult(True, None, None)
        new_lists.append(lam)

    guest = Digraph(len(reps), new_arcs, loops_allowed=False)
    out = ASLDHInstance(guest, inst.host, tuple(new_lists), inst.alpha)
    return SparsifyResult(False, out, vmap)


@dataclass(frozen=True)
class GadgetMap:
    """Bookkeeping of the double-subdivision construction."""

    guest_n: int
    host_n: int
    r: int
    sigma_f: Dict[Tuple[int, int], int]  # host arc -> box of its first midpoint
    sigma_l: Dict[Tuple[int, int], int]  # host arc -> box of its second midpoint
    f_vertex: Dict[Tuple[int, int], int]  # guest arc -> first gadget vertex
    l_vertex: Dict[Tuple[int, int], int]  # guest arc -> second gadget vertex


def reduce_asldh_to_la(inst: ASLDHInstance) -> Tuple[LAInstance, GadgetMap]:
    """Turn an arc-specified homomorphism instance into an allocation
    instance.

    Boxes are the vertices of the host with every non-loop arc subdivided
    twice (host vertex x is box x).  Each guest arc becomes a three-edge
    path u - f - l - v carrying the arc multiplicity; a charged host arc
    prescribes its charge on each of its three path pairs.
    """
    host, guest = inst.host, inst.guest
    h = host.n
    e2 = host.nonloop_arcs()
    r = h + 2 * len(e2)
    sigma_f = {arc: h + 2 * k for k, arc in enumerate(e2)}
    sigma_l = {arc: h + 2 * k + 1 for k, arc in enumerate(e2)}

    guest_arcs = sorted(guest.arcs)
    n_new = guest.n + 2 * len(guest_arcs)
    f_vertex = {arc: guest.n + 2 * k for k, arc in enumerate(guest_arcs)}
    l_vertex = {arc: guest.n + 2 * k + 1 for k, arc in enumerate(guest_arcs)}

    edges: Dict[Tuple[int, int], int] = {}
    for arc in guest_arcs:
        u, v = arc
        mult = guest.arcs[arc]
        fuv, luv = f_vertex[arc], l_vertex[arc]
        for pair in ((fuv, luv), (u, fuv), (luv, v)):
            key = edge_key(*pair)
            edges[key] = edges.get(key, 0) + mult
    graph = MultiGraph(n_new, edges)

    looped = frozenset(host.loops())
    lists: List[FrozenSet[int]] = []
    for u in range(guest.n):
        lists.append(frozenset(inst.lists[u]))
    gadget_lists: Dict[int, FrozenSet[int]] = {}
    for arc in guest_arcs:
        u, v = arc
        shared_loops = {x for x in inst.lists[u] & inst.lists[v] if x in looped}
        f_opts = {
            sigma_f[(x, y)]
            for (x, y) in e2
            if x in inst.lists[u] and y in inst.lists[v]
        }
        l_opts = {
            sigma_l[(x, y)]
            for (x, y) in e2
            if x in inst.lists[u] and y in inst.lists[v]
        }
        gadget_lists[f_vertex[arc]] = frozenset(f_opts | shared_loops)
        gadget_lists[l_vertex[arc]] = frozenset(l_opts | shared_loops)
    for vid in range(guest.n, n_new):
        lists.append(gadget_lists[vid])

    alpha: Dict[Tuple[int, int], int] = {}
    for (x, y) in e2:
        val = inst.alpha.get((x, y), 0)
        if val == 0:
            continue
        fxy, lxy = sigma_f[(x, y)], sigma_l[(x, y)]
        for (i, j) in ((x, fxy), (fxy, lxy), (lxy, y)):
            alpha[(i, j) if i < j else (j, i)] = val

    la = LAInstance(graph, r, tuple(lists), alpha)
    gm = GadgetMap(guest.n, h, r, sigma_f, sigma_l, f_vertex, l_vertex)
    return la, gm


def extract_hom_from_allocation(alloc: Allocation, gm: GadgetMap) -> Tuple[int, ...]:
    """Read the homomorphism off a valid gadget allocation: a guest vertex in
    box i maps to host vertex i (boxes of original host vertices come first
    in the box numbering)."""
    chi = []
    for u in range(gm.guest_n):
        box = alloc.boxes[u]
        if box >= gm.host_n:
            raise AssertionError(
                f"guest vertex {u} landed in subdivision box {box}; gadget invariant broken"
            )
        chi.append(box)
    return tuple(chi)


def _asldh_impossible(inst: ASLDHInstance) -> bool:
    """Cheap necessary conditions: total charge cannot exceed the number of
    guest arcs, and every charged host arc needs a compatible guest arc."""
    total_arcs = sum(inst.guest.arcs.values())
    if inst.d > total_arcs:
        return True
    for (x, y), val in inst.alpha.items():
        if val == 0:
            continue
        if not any(
            x in inst.lists[u] and y in inst.lists[v] for (u, v) in inst.guest.arcs
        ):
            return True
    return False


def solve_asldh(
    inst: ASLDHInstance, cfg: PipelineConfig = DEFAULT_CONFIG
) -> Optional[Tuple[int, ...]]:
    """Sparsify, reduce to allocation, solve, extract, and lift back."""
    if any(not lam for lam in inst.lists):
        return None
    if _asldh_impossible(inst):
        return None
    sp = sparsify_asldh(inst)
    if sp.resolved_no:
        return None
    la, gm = reduce_asldh_to_la(sp.instance)
    alloc = solve_la(la, cfg)
    if alloc is None:
        return None
    chi_small = extract_hom_from_allocation(alloc, gm)
    chi = tuple(chi_small[sp.vertex_map[v]] for v in range(inst.guest.n))
    assert check_asldh(inst, chi), "extracted homomorphism failed re-verification"
    return chi


def _first_success(
    items: Iterable, fn: Callable, jobs: int
) -> Optional[object]:
    """First non-None fn(item) in item order; jobs > 1 evaluates chunks
    concurrently but selection stays canonical."""
    if jobs <= 1:
        for item in items:
            out = fn(item)
            if out is not None:
                return out
        return None
    items = list(items)
    chunk = max(jobs * 2, 1)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        for start in range(0, len(items), chunk):
            batch = items[start : start + chunk]
            for out in pool.map(fn, batch):
                if out is not None:
                    return out
    return None


def solve_bldh(
    inst: BLDHInstance, cfg: PipelineConfig = DEFAULT_CONFIG
) -> Optional[Tuple[int, ...]]:
    """Sweep charge prescriptions with total at most ell."""
    chi = _first_success(
        reduce_bldh_to_asldh(inst), lambda m: solve_asldh(m, cfg), cfg.jobs
    )
    if chi is not None:
        assert check_bldh(inst, chi), "homomorphism failed the charge bound"
    return chi


def solve_mbldh(
    inst: BLDHInstance, cfg: PipelineConfig = DEFAULT_CONFIG
) -> Optional[Tuple[int, ...]]:
    """Sweep charge prescriptions with per-host-vertex totals at most ell."""
    chi = _first_success(
        reduce_mbldh(inst), lambda m: solve_asldh(m, cfg), cfg.jobs
    )
    if chi is not None:
        assert check_mbldh(inst, chi), "homomorphism failed the per-vertex bound"
    return chi
