import random

import pytest

from listalloc.errors import CapExceeded
from listalloc.generators import gen_la
from listalloc.model import Allocation, LAInstance, verify_allocation
from listalloc.multigraph import MultiGraph, components
from listalloc.oracle import oracle_la
from listalloc.solver import (
    PipelineConfig,
    SHCLAInstance,
    ShrinkState,
    brute_force_la,
    components_without,
    compute_shrink_data,
    default_f1,
    normalize_cla,
    solve_cla,
    solve_hcla,
    solve_la,
    solve_shcla,
)

from _util import random_connected_multigraph, shcla_by_enumeration

FULL2 = frozenset({0, 1})


def path(n):
    return MultiGraph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return MultiGraph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def random_instance(rng, n_max=8, r_max=3, w_max=3, connected=False):
    n = rng.randint(1 if not connected else 2, n_max)
    if connected:
        g = random_connected_multigraph(rng, n, rng.randint(0, 4))
    else:
        g = MultiGraph.from_edge_list(
            n,
            [
                (u, v, rng.randint(1, 2))
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.5
            ],
        )
    r = rng.randint(1, r_max)
    alpha = {}
    if r >= 2:
        for _ in range(rng.randint(0, w_max)):
            pair = tuple(sorted(rng.sample(range(r), 2)))
            alpha[pair] = alpha.get(pair, 0) + 1
    lists = tuple(
        frozenset(rng.sample(range(r), rng.randint(1, r))) for _ in range(n)
    )
    return LAInstance(g, r, lists, alpha)


class TestBruteForce:
    def test_triangle(self):
        g = MultiGraph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
        inst = LAInstance(g, 2, (FULL2,) * 3, {(0, 1): 2})
        wit = brute_force_la(inst)
        assert wit is not None and verify_allocation(inst, wit).ok

    def test_zero_weight_is_friendliness(self):
        g = MultiGraph.from_edge_list(4, [(0, 1), (2, 3)])
        inst = LAInstance(
            g, 2, (frozenset({0}), frozenset({0, 1}), FULL2, FULL2), {}
        )
        wit = brute_force_la(inst)
        assert wit is not None and wit.boxes[0] == wit.boxes[1] == 0

    def test_weight_above_total_multiplicity(self):
        g = MultiGraph.from_edge_list(2, [(0, 1)])
        inst = LAInstance(g, 2, (FULL2,) * 2, {(0, 1): 2})
        assert brute_force_la(inst) is None

    def test_pins(self):
        g = path(3)
        inst = LAInstance(g, 2, (FULL2,) * 3, {(0, 1): 1})
        wit = brute_force_la(inst, fixed={0: 1})
        assert wit is not None and wit.boxes[0] == 1
        assert verify_allocation(inst, wit).ok

    def test_oracle_agreement(self):
        rng = random.Random(5)
        for _ in range(200):
            inst = random_instance(rng)
            assert (brute_force_la(inst) is None) == (oracle_la(inst) is None)

    def test_cap(self):
        g = MultiGraph(14, {})
        inst = LAInstance(g, 3, (frozenset({0, 1, 2}),) * 14, {})
        with pytest.raises(CapExceeded):
            brute_force_la(inst, cap=1000)


class TestNormalizeCLA:
    def test_zero_weight_friendly(self):
        g = path(3)
        lists = (frozenset({2}), frozenset({1, 2}), frozenset({2, 3}))
        out = normalize_cla(LAInstance(g, 4, lists, {}))
        assert out.resolved and out.witness.boxes == (2, 2, 2)

    def test_zero_weight_unfriendly(self):
        g = path(2)
        out = normalize_cla(LAInstance(g, 2, (frozenset({0}), frozenset({1})), {}))
        assert out.resolved and out.witness is None

    def test_removes_zero_rows(self):
        g = path(3)
        lists = (frozenset({0, 1, 2, 3, 4}),) * 3
        inst = LAInstance(g, 5, lists, {(0, 1): 1})
        out = normalize_cla(inst)
        assert not out.resolved
        assert out.instance.r == 2
        assert out.box_map == (0, 1)
        assert out.instance.alpha == {(0, 1): 1}

    def test_resolves_no_when_list_empties(self):
        g = path(3)
        lists = (frozenset({0, 1}), frozenset({3}), frozenset({0, 1}))
        out = normalize_cla(LAInstance(g, 5, lists, {(0, 1): 1}))
        assert out.resolved and out.witness is None

    def test_rejects_disconnected(self):
        g = MultiGraph(3, {(0, 1): 1})
        with pytest.raises(ValueError):
            normalize_cla(LAInstance(g, 2, (FULL2,) * 3, {}))


class TestSolveCLA:
    def test_small_matches_oracle(self):
        rng = random.Random(17)
        for _ in range(150):
            inst = random_instance(rng, connected=True)
            red = normalize_cla(inst)
            if red.resolved:
                got = red.witness
            else:
                wit = solve_cla(red.instance)
                got = wit
            assert (got is None) == (oracle_la(inst) is None)

    def test_recursive_branch_matches_oracle(self):
        # lowered piece-size bound forces shrink on desk-scale instances
        rng = random.Random(23)
        trials = 0
        for seed in range(500):
            inst = random_instance(rng, n_max=8, connected=True)
            if inst.w < 1:
                continue
            trials += 1
            cfg = PipelineConfig(f2_override=rng.randint(1, 4))
            red = normalize_cla(inst)
            got = red.witness if red.resolved else solve_cla(red.instance, cfg)
            assert (got is None) == (oracle_la(inst) is None), seed
            if got is not None and not red.resolved:
                mapped = Allocation(tuple(red.box_map[b] for b in got.boxes))
                assert verify_allocation(inst, mapped).ok
        assert trials >= 400

    def test_no_separation_and_empty_feasible_set_is_no(self):
        # alternating singleton lists on a 12-path: every border behavior of
        # the only piece is infeasible, so the solver reports no
        lists = tuple(frozenset({i % 2}) for i in range(12))
        inst = LAInstance(path(12), 2, lists, {(0, 1): 1})
        assert solve_cla(inst) is None
        assert oracle_la(inst) is None

    def test_contraction_stall_falls_back(self):
        lists = (frozenset({0}), FULL2, frozenset({1}))
        inst = LAInstance(path(3), 2, lists, {(0, 1): 1})
        events = []
        cfg = PipelineConfig(f2_override=1, trace=events.append)
        wit = solve_cla(inst, cfg)
        assert wit is not None and verify_allocation(inst, wit).ok
        assert any(e["kind"] == "stall" for e in events)

    def test_shrink_reduces_to_bound(self):
        for n in (12, 18, 25):
            inst = LAInstance(path(n), 2, (FULL2,) * n, {(0, 1): 1})
            state = ShrinkState(inst, PipelineConfig(), 1)
            state.run()
            assert state.graph.n <= state.f2


class TestComputeShrinkData:
    def test_empty_border_space(self):
        inst = LAInstance(cycle(4), 2, (FULL2,) * 4, {(0, 1): 2})
        data = compute_shrink_data(inst, [])
        assert data.space_size <= 2**inst.w
        assert data.border == ()

    def test_weight_one_space_bound(self):
        assert default_f1(1) == 8
        inst = LAInstance(path(5), 2, (FULL2,) * 5, {(0, 1): 1})
        data = compute_shrink_data(inst, [0, 4])
        assert data.space_size == 8  # r^|B| * (alpha+1) = 4 * 2 = f1(1)

    def test_all_infeasible(self):
        lists = tuple(frozenset({i % 2}) for i in range(6))
        inst = LAInstance(path(6), 2, lists, {(0, 1): 1})
        data = compute_shrink_data(inst, [])
        assert data.feasible == []

    def test_witnesses_certify_elements(self):
        inst = LAInstance(path(6), 2, (FULL2,) * 6, {(0, 1): 1})
        data = compute_shrink_data(inst, [0])
        assert data.feasible
        for (psi, vec), wit in data.witnesses.items():
            for v, box in zip(data.border, psi):
                assert wit.boxes[v] == box
            crossing = sum(
                m
                for (u, v), m in inst.g.edges.items()
                if wit.boxes[u] != wit.boxes[v]
            )
            assert crossing == sum(vec)


class TestSolveHCLA:
    def test_base_matches_oracle(self):
        rng = random.Random(31)
        for _ in range(100):
            inst = random_instance(rng, connected=True)
            if inst.w < 1:
                continue
            assert (solve_hcla(inst) is None) == (oracle_la(inst) is None)

    def test_family_branch_path(self):
        inst = LAInstance(path(3), 2, (FULL2,) * 3, {(0, 1): 1})
        cfg = PipelineConfig(f2_override=1)
        wit = solve_hcla(inst, cfg)
        assert wit is not None and verify_allocation(inst, wit).ok

    def test_family_branch_matches_oracle(self):
        rng = random.Random(37)
        hits = 0
        for seed in range(200):
            n = rng.randint(3, 8)
            g = random_connected_multigraph(rng, n, rng.randint(0, 3))
            lists = tuple(
                frozenset(rng.sample(range(2), rng.randint(1, 2))) for _ in range(n)
            )
            inst = LAInstance(g, 2, lists, {(0, 1): 1})
            cfg = PipelineConfig(f2_override=1)
            if inst.g.n > 2 * 1 * 1:
                hits += 1
            assert (solve_hcla(inst, cfg) is None) == (oracle_la(inst) is None), seed
        assert hits >= 150


class TestSolveSHCLA:
    def test_s_equals_whole_vertex_set(self):
        inst = LAInstance(path(3), 2, (frozenset({0}),) * 3, {})
        sh = SHCLAInstance(inst, frozenset({0, 1, 2}))
        wit = solve_shcla(sh, PipelineConfig(f2_override=1))
        assert wit is not None and wit.boxes == (0, 0, 0)
        bad = LAInstance(path(3), 2, (frozenset({0}),) * 3, {(0, 1): 1})
        assert solve_shcla(SHCLAInstance(bad, frozenset({0, 1, 2})),
                           PipelineConfig(f2_override=1)) is None

    def test_path_split(self):
        inst = LAInstance(path(3), 2, (FULL2,) * 3, {(0, 1): 1})
        cfg = PipelineConfig(f2_override=1)
        wit = solve_shcla(SHCLAInstance(inst, frozenset({1})), cfg)
        assert wit is not None and verify_allocation(inst, wit).ok
        # components {0} and {2} may not straddle the dominant box
        s_box = wit.boxes[1]
        assert wit.boxes[0] in (s_box, 1 - s_box)

    def test_matches_enumeration(self):
        rng = random.Random(41)
        agree = 0
        for seed in range(200):
            n = rng.randint(2, 7)
            g = random_connected_multigraph(rng, n, rng.randint(0, 3))
            r = rng.randint(2, 3)
            alpha = {}
            for _ in range(rng.randint(1, 2)):
                pair = tuple(sorted(rng.sample(range(r), 2)))
                alpha[pair] = alpha.get(pair, 0) + 1
            lists = tuple(
                frozenset(rng.sample(range(r), rng.randint(1, r))) for _ in range(n)
            )
            inst = LAInstance(g, r, lists, alpha)
            s_set = frozenset(v for v in range(n) if rng.random() < 0.4)
            f2o = rng.randint(1, 3)
            cfg = PipelineConfig(f2_override=f2o)
            w = max(inst.w, 1)
            got = solve_shcla(SHCLAInstance(inst, s_set), cfg, w_struct=w)
            ref = shcla_by_enumeration(inst, s_set, w * f2o)
            assert (got is None) == (ref is None), seed
            if got is not None:
                assert verify_allocation(inst, got).ok
                if s_set:
                    # every component off S is wholly in or out of the S box
                    s_box = got.boxes[min(s_set)]
                    for comp in components_without(g, set(s_set)):
                        inside = {got.boxes[v] == s_box for v in comp}
                        assert len(inside) == 1
                agree += 1
        assert agree >= 40


class TestSolveLA:
    def test_two_disjoint_edges(self):
        g = MultiGraph.from_edge_list(4, [(0, 1), (2, 3)])
        inst = LAInstance(g, 2, (FULL2,) * 4, {(0, 1): 1})
        wit = solve_la(inst)
        assert wit is not None and verify_allocation(inst, wit).ok
        assert oracle_la(inst) is not None

    def test_empty_list_short_circuits(self):
        g = path(2)
        inst = LAInstance(g, 2, (frozenset(), FULL2), {})
        assert solve_la(inst) is None

    def test_single_vertex_forced(self):
        inst = LAInstance(MultiGraph(1, {}), 3, (frozenset({1}),), {})
        assert solve_la(inst).boxes == (1,)

    def test_deterministic(self):
        rng = random.Random(47)
        for _ in range(50):
            inst = random_instance(rng)
            assert solve_la(inst) == solve_la(inst)

    def test_engine_and_sweep_agree(self):
        rng = random.Random(53)
        for _ in range(150):
            inst = random_instance(rng, connected=True)
            assert (brute_force_la(inst) is None) == (solve_la(inst) is None)
