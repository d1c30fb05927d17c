"""Exact list-allocation pipeline.

Layered reductions, top to bottom:

  solve_la        component dynamic program over sub-weight splits
  solve_cla       connected instances: shrink (recursive understanding) until
                  the graph is small, then direct search
  solve_hcla      highly connected instances: separating-family sweep
  solve_shcla     split instances: dynamic program over components off S

Two interchangeable base solvers back the small cases: a budget-pruned
assignment search (search.py) and the crossing-set enumeration
brute_force_la; they are verdict-identical and chosen by cost estimate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import CapExceeded
from .model import (
    Allocation,
    LAInstance,
    PairVec,
    alpha_to_vec,
    crossing_edge_keys,
    iter_sub_vecs,
    support_pairs,
    vec_add,
    vec_leq,
    vec_sub,
    vec_to_alpha,
    verify_allocation,
)
from .multigraph import (
    MultiGraph,
    components,
    contract_edges,
    find_good_separation,
    is_connected,
)
from .search import first_exact_assignment, profile_assignments
from .splitters import build_separating_family

PROFILE_NODE_BUDGET = 300_000


def default_f1(w: int) -> int:
    return 2**w * (2 * w) ** (2 * w)


@dataclass
class PipelineConfig:
    """Solver knobs.  f1/f2 overrides shrink the piece-size bounds so the
    recursive machinery can be exercised on desk-scale instances."""

    f1_override: Optional[int] = None
    f2_override: Optional[int] = None
    oracle_cap: int = 10**7
    splitter_mode: str = "auto"
    seed: int = 0
    jobs: int = 1
    witness_required: bool = True
    trace: Optional[Callable[[dict], None]] = None

    def f1(self, w: int) -> int:
        return self.f1_override if self.f1_override is not None else default_f1(w)

    def f2(self, w: int) -> int:
        if self.f2_override is not None:
            return self.f2_override
        return w * self.f1(w) + 1

    @property
    def test_mode(self) -> bool:
        return self.f1_override is not None or self.f2_override is not None

    def emit(self, **event):
        if self.trace is not None:
            self.trace(event)


DEFAULT_CONFIG = PipelineConfig()


# ---------------------------------------------------------------------------
# crossing-set enumeration (the n^O(w) baseline)


def brute_force_la(
    inst: LAInstance,
    fixed: Optional[Dict[int, int]] = None,
    cap: int = 10**7,
) -> Optional[Allocation]:
    """Direct search over candidate crossing sets.

    Enumerates subsets F of exactly w edge positions (parallel copies are
    distinct positions), splits the graph at F, and assigns whole components
    to boxes consistent with the lists and the optional pins; the first
    assignment passing verification is returned.
    """
    fixed = fixed or {}
    w = inst.w
    positions: List[Tuple[int, int]] = []
    for key in sorted(inst.g.edges):
        positions.extend([key] * inst.g.edges[key])
    if w > len(positions):
        return None
    allowed_base: List[FrozenSet[int]] = []
    for v in range(inst.g.n):
        lam = inst.lists[v]
        if v in fixed:
            lam = lam & {fixed[v]}
        allowed_base.append(lam)
    trials = 0
    for combo in itertools.combinations(range(len(positions)), w):
        removed: Dict[Tuple[int, int], int] = {}
        for idx in combo:
            key = positions[idx]
            removed[key] = removed.get(key, 0) + 1
        fully_removed = {k for k, c in removed.items() if c == inst.g.edges[k]}
        comps = _split_components(inst.g, fully_removed)
        comp_allowed = []
        feasible = True
        for comp in comps:
            lam = frozenset(range(inst.r))
            for v in comp:
                lam &= allowed_base[v]
            if not lam:
                feasible = False
                break
            comp_allowed.append(tuple(sorted(lam)))
        trials += 1
        if trials > cap:
            raise CapExceeded(f"crossing-set enumeration exceeded {cap} trials")
        if not feasible:
            continue
        for choice in itertools.product(*comp_allowed):
            trials += 1
            if trials > cap:
                raise CapExceeded(f"crossing-set enumeration exceeded {cap} trials")
            boxes = [0] * inst.g.n
            for comp, box in zip(comps, choice):
                for v in comp:
                    boxes[v] = box
            alloc = Allocation(tuple(boxes))
            if verify_allocation(inst, alloc).ok:
                return alloc
    return None


def _split_components(g: MultiGraph, removed_keys) -> List[List[int]]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for key in g.edges:
        if key in removed_keys:
            continue
        ru, rv = find(key[0]), find(key[1])
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: Dict[int, List[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return [groups[root] for root in sorted(groups)]


# ---------------------------------------------------------------------------
# base exact solve for connected instances: pick the cheaper of the two
# enumeration styles, both capped


def _solve_base(
    inst: LAInstance, cfg: PipelineConfig, fixed: Optional[Dict[int, int]] = None
) -> Optional[Allocation]:
    lists = list(inst.lists)
    if fixed:
        for v, box in fixed.items():
            lists[v] = lists[v] & {box}
    if any(not lam for lam in lists):
        return None
    pairs = support_pairs(inst.alpha)
    target = alpha_to_vec(inst.alpha, pairs)

    engine_est = 1
    for lam in lists:
        engine_est *= len(lam)
        if engine_est > 10**18:
            break
    npos = inst.g.total_multiplicity()
    if npos >= inst.w:
        sweep_est = math.comb(npos, inst.w) * inst.r ** min(inst.g.n, inst.w + 1)
    else:
        sweep_est = 0  # no candidate crossing sets: instant no

    def run_engine() -> Optional[Allocation]:
        hit = first_exact_assignment(
            inst.g, lists, pairs, target, node_cap=cfg.oracle_cap
        )
        if hit is None:
            return None
        return Allocation(tuple(hit[v] for v in range(inst.g.n)))

    if engine_est <= max(10**6, min(sweep_est, cfg.oracle_cap)):
        return run_engine()
    if sweep_est <= cfg.oracle_cap:
        return brute_force_la(inst, fixed=fixed, cap=cfg.oracle_cap)
    return run_engine()  # last resort, honestly capped


# ---------------------------------------------------------------------------
# connected-instance normalization


@dataclass
class CLAReduction:
    resolved: bool
    witness: Optional[Allocation]
    instance: Optional[LAInstance]
    box_map: Optional[Tuple[int, ...]]  # new box index -> original box index


def normalize_cla(inst: LAInstance) -> CLAReduction:
    """Resolve w = 0 connected instances outright; otherwise drop every box
    with an all-zero weight row (no vertex can use it), leaving r <= 2w."""
    if not is_connected(inst.g):
        raise ValueError("normalize_cla expects a connected graph")
    if inst.w == 0:
        common = frozenset(range(inst.r))
        for lam in inst.lists:
            common &= lam
        if common:
            box = min(common)
            return CLAReduction(True, Allocation((box,) * inst.g.n), None, None)
        return CLAReduction(True, None, None, None)
    keep = sorted({i for pair in inst.alpha for i in pair})
    new_of_old = {old: new for new, old in enumerate(keep)}
    keep_set = set(keep)
    new_lists = []
    for lam in inst.lists:
        shrunk = frozenset(new_of_old[b] for b in lam if b in keep_set)
        if not shrunk:
            return CLAReduction(True, None, None, None)
        new_lists.append(shrunk)
    new_alpha = {
        (new_of_old[i], new_of_old[j]): val for (i, j), val in inst.alpha.items()
    }
    reduced = LAInstance(inst.g, len(keep), tuple(new_lists), new_alpha)
    return CLAReduction(False, None, reduced, tuple(keep))


def _solve_connected(inst: LAInstance, cfg: PipelineConfig) -> Optional[Allocation]:
    red = normalize_cla(inst)
    if red.resolved:
        return red.witness
    wit = solve_cla(red.instance, cfg)
    if wit is None:
        return None
    return Allocation(tuple(red.box_map[b] for b in wit.boxes))


# ---------------------------------------------------------------------------
# shrink: recursive understanding over one evolving global instance


class _NoInstance(Exception):
    pass


class _ShrinkStall(Exception):
    """Contraction made no progress (possible only with lowered bounds)."""


@dataclass
class ShrinkData:
    feasible: List[Tuple[Tuple[int, ...], PairVec]]
    witnesses: Dict[Tuple[Tuple[int, ...], PairVec], Allocation]
    contractible: List[Tuple[int, int]]
    border: Tuple[int, ...]
    space_size: int


def compute_shrink_data(
    inst: LAInstance,
    border: Sequence[int],
    cfg: PipelineConfig = DEFAULT_CONFIG,
    w_struct: Optional[int] = None,
) -> ShrinkData:
    """Feasible border behaviors of a highly connected piece.

    For every pair (psi, alpha') of a box assignment of the border and a
    sub-weight function, solves the piece with the border lists overwritten
    by psi; collects one witness per feasible pair and the edges crossing in
    no witness (safe to contract).
    """
    w = w_struct if w_struct is not None else max(inst.w, 1)
    border = tuple(sorted(border))
    pairs = support_pairs(inst.alpha)
    caps = alpha_to_vec(inst.alpha, pairs)
    space_size = inst.r ** len(border)
    for c in caps:
        space_size *= c + 1
    if space_size > cfg.oracle_cap:
        raise CapExceeded(f"border space of size {space_size} exceeds the cap")
    feasible = []
    witnesses = {}
    crossing_union = set()
    for psi in itertools.product(range(inst.r), repeat=len(border)):
        lists2 = list(inst.lists)
        for v, box in zip(border, psi):
            lists2[v] = frozenset((box,))
        for vec in iter_sub_vecs(caps):
            sub = LAInstance(inst.g, inst.r, tuple(lists2), vec_to_alpha(vec, pairs))
            wit = solve_hcla(sub, cfg, w_struct=w)
            if wit is not None:
                element = (psi, vec)
                feasible.append(element)
                witnesses[element] = wit
                crossing_union.update(crossing_edge_keys(inst.g, wit.boxes))
    contractible = sorted(k for k in inst.g.edges if k not in crossing_union)
    return ShrinkData(feasible, witnesses, contractible, border, space_size)


class ShrinkState:
    """The evolving global instance: the current graph, per-vertex lists,
    and the map from original vertices to their contracted classes."""

    def __init__(self, inst: LAInstance, cfg: PipelineConfig, w_struct: int):
        self.cfg = cfg
        self.w = w_struct
        self.f2 = cfg.f2(w_struct)
        self.r = inst.r
        self.alpha = inst.alpha
        self.graph = inst.g
        self.lists: List[FrozenSet[int]] = list(inst.lists)
        self.class_of: List[int] = list(range(inst.g.n))

    def current_instance(self) -> LAInstance:
        return LAInstance(self.graph, self.r, tuple(self.lists), self.alpha)

    def lift(self, alloc: Allocation) -> Allocation:
        return Allocation(tuple(alloc.boxes[c] for c in self.class_of))

    def current_ids(self, originals: FrozenSet[int]) -> FrozenSet[int]:
        return frozenset(self.class_of[o] for o in originals)

    def originals_of(self, current: FrozenSet[int]) -> FrozenSet[int]:
        cur = set(current)
        return frozenset(o for o, c in enumerate(self.class_of) if c in cur)

    def run(self):
        piece = frozenset(range(len(self.class_of)))
        if len(self.current_ids(piece)) > self.f2:
            self.shrink(piece, frozenset())

    def shrink(self, piece_orig: FrozenSet[int], border_orig: FrozenSet[int]):
        """Contract inside the piece until it has at most f2 vertices.

        piece and border are sets of original vertices (stable names for
        unions of contracted classes); gluing after a recursive call is
        implicit in the shared contraction history.
        """
        while True:
            ids = self.current_ids(piece_orig)
            if len(ids) <= self.f2:
                return
            sub, old_of_new, _ = self.graph.induced(ids)
            sep = find_good_separation(sub, self.f2, self.w)
            if sep is None:
                self._leaf(piece_orig, border_orig)
                continue
            side1 = frozenset(old_of_new[v] for v in sorted(sep.side1))
            side2 = frozenset(old_of_new[v] for v in sorted(sep.side2))
            bcur = self.current_ids(border_orig)
            side = side1 if len(bcur & side1) <= self.w else side2
            assert len(bcur & side) <= self.w
            boundary = set()
            for (a, b) in sub.edges:
                ca, cb = old_of_new[a], old_of_new[b]
                if (ca in side1) != (cb in side1):
                    boundary.add(ca if ca in side else cb)
            new_border = (bcur & side) | boundary
            assert len(new_border) <= 2 * self.w
            self.cfg.emit(
                kind="separation",
                piece=len(ids),
                side=len(side),
                cut=sep.cut_size,
            )
            self.shrink(self.originals_of(side), self.originals_of(frozenset(new_border)))
            # glue is implicit; re-check this piece's size and keep shrinking

    def _leaf(self, piece_orig: FrozenSet[int], border_orig: FrozenSet[int]):
        ids = self.current_ids(piece_orig)
        sub, old_of_new, new_of_old = self.graph.induced(ids)
        sub_lists = tuple(self.lists[v] for v in old_of_new)
        piece_inst = LAInstance(sub, self.r, sub_lists, self.alpha)
        border_sub = sorted(new_of_old[v] for v in self.current_ids(border_orig))
        data = compute_shrink_data(piece_inst, border_sub, self.cfg, self.w)
        self.cfg.emit(
            kind="leaf",
            piece=len(ids),
            border=len(border_sub),
            feasible=len(data.feasible),
            contractible=len(data.contractible),
        )
        if not data.feasible:
            raise _NoInstance
        contract_cur = [
            (old_of_new[a], old_of_new[b]) for (a, b) in data.contractible
        ]
        if not contract_cur:
            raise _ShrinkStall
        self._contract(contract_cur)

    def _contract(self, edge_keys: List[Tuple[int, int]]):
        before = self.current_instance() if self.cfg.trace else None
        new_graph, vmap = contract_edges(self.graph, edge_keys)
        merged: List[FrozenSet[int]] = [None] * new_graph.n
        for old, lam in enumerate(self.lists):
            tgt = vmap[old]
            merged[tgt] = lam if merged[tgt] is None else merged[tgt] & lam
        self.graph = new_graph
        self.lists = merged
        self.class_of = [vmap[c] for c in self.class_of]
        self.cfg.emit(
            kind="contract",
            before=before,
            edges=tuple(edge_keys),
            after=self.current_instance() if self.cfg.trace else None,
        )


def solve_cla(inst: LAInstance, cfg: PipelineConfig = DEFAULT_CONFIG) -> Optional[Allocation]:
    """Connected list allocation, w >= 1 (use normalize_cla first).

    Small graphs are solved directly; larger ones are shrunk by repeated
    safe contractions, then solved and the witness lifted back.
    """
    w = inst.w
    if w < 1:
        raise ValueError("solve_cla expects w >= 1; normalize_cla handles w = 0")
    if inst.g.n <= cfg.f2(w):
        return _solve_base(inst, cfg)
    state = ShrinkState(inst, cfg, w)
    try:
        state.run()
    except _NoInstance:
        return None
    except _ShrinkStall:
        # only reachable with lowered bounds: every remaining edge of some
        # piece crosses in some witness, so contraction cannot proceed; the
        # contracted-so-far instance is still equivalent, solve it directly
        state.cfg.emit(kind="stall", n=state.graph.n)
    final = state.current_instance()
    wit = _solve_base(final, cfg)
    if wit is None:
        return None
    full = state.lift(wit)
    if cfg.witness_required:
        check = verify_allocation(inst, full)
        assert check.ok, f"lifted witness failed verification: {check}"
    return full


# ---------------------------------------------------------------------------
# highly connected instances


@dataclass(frozen=True)
class SHCLAInstance:
    """A connected instance plus the set S that must sit inside the single
    big box and swallow that box's boundary."""

    base: LAInstance
    s_set: FrozenSet[int]


def solve_hcla(
    inst: LAInstance,
    cfg: PipelineConfig = DEFAULT_CONFIG,
    w_struct: Optional[int] = None,
) -> Optional[Allocation]:
    """Highly connected list allocation.

    w_struct is the structural parameter the piece's connectivity promise
    was checked against (the enclosing instance's total weight); sub-budget
    instances inherit it.
    """
    w = w_struct if w_struct is not None else max(inst.w, 1)
    f2 = cfg.f2(w)
    if inst.g.n <= 2 * w * f2:
        return _solve_base(inst, cfg)
    family = build_separating_family(
        inst.g.n, w, w * f2, mode=cfg.splitter_mode, seed=cfg.seed
    )
    for s_set in family.sets:
        wit = solve_shcla(SHCLAInstance(inst, frozenset(s_set)), cfg, w_struct=w)
        if wit is not None:
            if __debug__:
                _assert_single_big_box(inst, wit, w, f2)
            return wit
    return None


def _assert_single_big_box(inst: LAInstance, alloc: Allocation, w: int, f2: int):
    sizes = [0] * inst.r
    for box in alloc.boxes:
        sizes[box] += 1
    n = inst.g.n
    bounded = [j for j in range(inst.r) if n - sizes[j] <= w * f2]
    assert len(bounded) == 1, f"expected a unique dominant box, got {bounded}"
    crossing = set(crossing_edge_keys(inst.g, alloc.boxes))
    remaining = inst.g.without_edges(crossing)
    big = [c for c in components(remaining) if len(c) > f2]
    assert len(big) == 1
    assert all(alloc.boxes[v] == bounded[0] for v in big[0])


def solve_shcla(
    sh: SHCLAInstance,
    cfg: PipelineConfig = DEFAULT_CONFIG,
    w_struct: Optional[int] = None,
) -> Optional[Allocation]:
    """Dynamic program over the components of G - S.

    For each candidate box s, components are folded left to right; a
    component either joins box s wholesale (when s is common to all its
    lists) or is placed entirely outside s, its exact crossing contribution
    coming from a budget-pruned search of G[S + C] with S pinned to s.
    """
    inst, s_sorted = sh.base, sorted(sh.s_set)
    w = w_struct if w_struct is not None else max(inst.w, 1)
    x_bound = w * cfg.f2(w)
    g, r = inst.g, inst.r
    pairs = support_pairs(inst.alpha)
    target = alpha_to_vec(inst.alpha, pairs)
    s_set = set(s_sorted)
    comps = [sorted(c) for c in components_without(g, s_set)]
    zero = tuple(0 for _ in pairs)

    for s in range(r):
        if any(s not in inst.lists[v] for v in s_sorted):
            continue
        context = {v: s for v in s_sorted}
        table_trail: List[Dict[Tuple[PairVec, int], tuple]] = []
        profiles: List[Optional[Dict[PairVec, Dict[int, int]]]] = []
        current: Dict[Tuple[PairVec, int], tuple] = {(zero, 0): ("base",)}
        for comp in comps:
            friendly = all(s in inst.lists[v] for v in comp)
            prof = None
            if len(comp) <= x_bound:
                star_lists = list(inst.lists)
                for v in comp:
                    star_lists[v] = inst.lists[v] - {s}
                prof = profile_assignments(
                    g,
                    star_lists,
                    pairs,
                    target,
                    free=comp,
                    context=context,
                    node_cap=cfg.oracle_cap,
                )
            profiles.append(prof)
            nxt: Dict[Tuple[PairVec, int], tuple] = {}
            for cell in sorted(current):
                if friendly and cell not in nxt:
                    nxt[cell] = ("mono", cell)
            if prof:
                deltas = sorted(prof)
                for cell in sorted(current):
                    vec, c = cell
                    nc = c + len(comp)
                    if nc > x_bound:
                        continue
                    for delta in deltas:
                        nv = vec_add(vec, delta)
                        if vec_leq(nv, target) and (nv, nc) not in nxt:
                            nxt[(nv, nc)] = ("place", cell, delta)
            table_trail.append(nxt)
            current = nxt
            if not current:
                break
        if not current:
            continue
        hits = sorted(c for (vec, c) in current if vec == target and c <= x_bound)
        if not hits:
            continue
        boxes = [0] * g.n
        for v in s_sorted:
            boxes[v] = s
        cell = (target, hits[0])
        for i in range(len(comps) - 1, -1, -1):
            entry = table_trail[i][cell]
            if entry[0] == "mono":
                for v in comps[i]:
                    boxes[v] = s
                cell = entry[1]
            else:
                _, prev_cell, delta = entry
                for v, box in profiles[i][delta].items():
                    boxes[v] = box
                cell = prev_cell
        alloc = Allocation(tuple(boxes))
        if cfg.witness_required:
            check = verify_allocation(inst, alloc)
            assert check.ok, f"split DP witness failed verification: {check}"
        return alloc
    return None


def components_without(g: MultiGraph, removed: set) -> List[FrozenSet[int]]:
    """Connected components of g minus a vertex set, by smallest vertex."""
    seen = set(removed)
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        stack, comp = [start], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        out.append(frozenset(comp))
    return out


# ---------------------------------------------------------------------------
# top level: component dynamic program


def solve_la(inst: LAInstance, cfg: PipelineConfig = DEFAULT_CONFIG) -> Optional[Allocation]:
    """Exact list allocation: a valid allocation or None.

    Components are folded left to right, tracking which sub-weight vectors
    are realizable by a prefix of components; each component's realizable
    vectors come either from one budget-pruned search (fast path) or from
    per-cell connected solves through the full pipeline (always in test
    mode, or when the search is capped out).
    """
    if any(not lam for lam in inst.lists):
        return None
    if inst.g.n == 0:
        return Allocation(()) if inst.w == 0 else None
    pairs = support_pairs(inst.alpha)
    target = alpha_to_vec(inst.alpha, pairs)
    zero = tuple(0 for _ in pairs)
    comps = [sorted(c) for c in components(inst.g)]

    comp_profiles: List[Optional[Dict[PairVec, Dict[int, int]]]] = []
    for comp in comps:
        prof = None
        if not cfg.test_mode:
            try:
                prof = profile_assignments(
                    inst.g,
                    inst.lists,
                    pairs,
                    target,
                    free=comp,
                    node_cap=min(cfg.oracle_cap, PROFILE_NODE_BUDGET),
                )
            except CapExceeded:
                prof = None
        comp_profiles.append(prof)

    lazy_memo: Dict[Tuple[int, PairVec], Optional[Allocation]] = {}

    def lazy_solve(ci: int, vec: PairVec) -> Optional[Allocation]:
        key = (ci, vec)
        if key not in lazy_memo:
            comp = comps[ci]
            sub_g, old_of_new, _ = inst.g.induced(comp)
            sub_lists = tuple(inst.lists[v] for v in old_of_new)
            sub = LAInstance(sub_g, inst.r, sub_lists, vec_to_alpha(vec, pairs))
            lazy_memo[key] = _solve_connected(sub, cfg)
        return lazy_memo[key]

    reach: Dict[PairVec, tuple] = {zero: ("start",)}
    trail: List[Dict[PairVec, tuple]] = []
    for ci in range(len(comps)):
        prof = comp_profiles[ci]
        nxt: Dict[PairVec, tuple] = {}
        if prof is not None:
            deltas = sorted(prof)
            for vec in sorted(reach):
                for delta in deltas:
                    nv = vec_add(vec, delta)
                    if vec_leq(nv, target) and nv not in nxt:
                        nxt[nv] = (vec, delta)
        else:
            for vec in sorted(reach):
                for delta in iter_sub_vecs(vec_sub(target, vec)):
                    nv = vec_add(vec, delta)
                    if nv in nxt:
                        continue
                    if lazy_solve(ci, delta) is not None:
                        nxt[nv] = (vec, delta)
        trail.append(nxt)
        reach = nxt
        if not reach:
            return None
    if target not in reach:
        return None

    boxes = [0] * inst.g.n
    vec = target
    for ci in range(len(comps) - 1, -1, -1):
        prev, delta = trail[ci][vec]
        prof = comp_profiles[ci]
        if prof is not None:
            for v, box in prof[delta].items():
                boxes[v] = box
        else:
            sub_alloc = lazy_solve(ci, delta)
            comp = comps[ci]
            for new_id, old_id in enumerate(comp):
                boxes[old_id] = sub_alloc.boxes[new_id]
        vec = prev
    alloc = Allocation(tuple(boxes))
    if cfg.witness_required:
        check = verify_allocation(inst, alloc)
        assert check.ok, f"assembled witness failed verification: {check}"
    return alloc
