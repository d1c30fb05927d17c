import random

import pytest

from listalloc.multigraph import (
    MultiGraph,
    components,
    contract_edges,
    core_vertices,
    d_edge_core,
    find_good_separation,
    global_min_cut,
)

from _util import (
    all_good_separations,
    core_by_enumeration,
    exhaustive_min_cut,
    random_connected_multigraph,
)


def triangle():
    return MultiGraph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


def two_triangles_bridge():
    return MultiGraph.from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]
    )


class TestComponents:
    def test_edgeless(self):
        assert components(MultiGraph(3, {})) == [
            frozenset({0}),
            frozenset({1}),
            frozenset({2}),
        ]

    def test_triangle(self):
        assert components(triangle()) == [frozenset({0, 1, 2})]

    def test_two_disjoint_edges(self):
        g = MultiGraph.from_edge_list(4, [(0, 1), (2, 3)])
        assert components(g) == [frozenset({0, 1}), frozenset({2, 3})]


class TestContract:
    def test_triangle_edge(self):
        g2, vmap = contract_edges(triangle(), [(0, 1)])
        assert g2.n == 2
        assert g2.edges == {(0, 1): 2}
        assert vmap == (0, 0, 1)

    def test_empty_contraction(self):
        g = triangle()
        g2, vmap = contract_edges(g, [])
        assert g2.edges == g.edges and vmap == (0, 1, 2)

    def test_path_contract(self):
        g = MultiGraph.from_edge_list(3, [(0, 1), (1, 2)])
        g2, vmap = contract_edges(g, [(0, 1)])
        assert g2.n == 2 and g2.edges == {(0, 1): 1}
        assert vmap == (0, 0, 1)

    def test_absent_edge_rejected(self):
        with pytest.raises(ValueError):
            contract_edges(triangle(), [(0, 1), (0, 1)])  # multiplicity 1 only


class TestGlobalMinCut:
    def test_triangle(self):
        value, _ = global_min_cut(triangle())
        assert value == 2

    def test_parallel_pair(self):
        value, sep = global_min_cut(MultiGraph.from_edge_list(2, [(0, 1, 3)]))
        assert value == 3
        assert {sep.side1, sep.side2} == {frozenset({0}), frozenset({1})}

    def test_bridge(self):
        value, _ = global_min_cut(two_triangles_bridge())
        assert value == 1  # frozen from exhaustive bipartition enumeration

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            global_min_cut(MultiGraph(1, {}))
        with pytest.raises(ValueError):
            global_min_cut(MultiGraph(3, {(0, 1): 1}))

    def test_matches_exhaustive(self):
        rng = random.Random(7)
        for _ in range(150):
            g = random_connected_multigraph(rng, rng.randint(2, 8), rng.randint(0, 6), 3)
            value, sep = global_min_cut(g)
            assert value == exhaustive_min_cut(g)
            cut = sum(
                m for (u, v), m in g.edges.items() if (u in sep.side1) != (v in sep.side1)
            )
            assert cut == value


class TestCore:
    def test_tree_has_no_core(self):
        g = MultiGraph.from_edge_list(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        assert d_edge_core(g, 2).edges == {}

    def test_bridge_between_triangles(self):
        core = d_edge_core(two_triangles_bridge(), 2)
        assert core.edges == {
            (0, 1): 1, (1, 2): 1, (0, 2): 1, (3, 4): 1, (4, 5): 1, (3, 5): 1,
        }
        assert core_vertices(core) == [0, 1, 2, 3, 4, 5]

    def test_four_cycle(self):
        g = MultiGraph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        assert d_edge_core(g, 2).edges == g.edges

    def test_rejects_d_zero(self):
        with pytest.raises(ValueError):
            d_edge_core(triangle(), 0)

    def test_idempotent_and_matches_enumeration(self):
        rng = random.Random(13)
        for _ in range(120):
            g = random_connected_multigraph(rng, rng.randint(2, 6), rng.randint(0, 5), 2)
            for d in (2, 3):
                core = d_edge_core(g, d)
                assert core.edges == core_by_enumeration(g, d)
                again = d_edge_core(core, d)
                assert again.edges == core.edges

    def test_order_independent(self):
        rng = random.Random(29)
        for _ in range(60):
            g = random_connected_multigraph(rng, rng.randint(3, 6), rng.randint(0, 5), 2)
            for d in (2, 3):
                base = d_edge_core(g, d)
                assert d_edge_core(g, d, order_seed=1).edges == base.edges
                assert d_edge_core(g, d, order_seed=2).edges == base.edges

    def test_dense_graphs_have_nonempty_core(self):
        # |E| >= d(n-1) guarantees a d-edge-connected subgraph
        rng = random.Random(31)
        found = 0
        for _ in range(300):
            n = rng.randint(2, 6)
            d = rng.randint(1, 3)
            g = random_connected_multigraph(rng, n, rng.randint(0, 8), 3)
            if g.total_multiplicity() >= d * (n - 1):
                found += 1
                assert d_edge_core(g, d).edges, (g, d)
        assert found > 50


class TestGoodSeparation:
    def test_path(self):
        g = MultiGraph.from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        sep = find_good_separation(g, 1, 1)
        assert sep is not None
        assert sep.side1 == frozenset({0, 1}) and sep.side2 == frozenset({2, 3, 4})
        assert sep.cut_size == 1

    def test_star_has_none(self):
        g = MultiGraph.from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        assert find_good_separation(g, 1, 1) is None

    def test_oversized_q(self):
        g = triangle()
        assert find_good_separation(g, g.n - 1, 5) is None

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            find_good_separation(MultiGraph(3, {(0, 1): 1}), 0, 1)

    def test_matches_enumeration(self):
        rng = random.Random(43)
        for _ in range(120):
            g = random_connected_multigraph(rng, rng.randint(2, 7), rng.randint(0, 5), 2)
            q = rng.randint(0, 3)
            y = rng.randint(0, 3)
            sep = find_good_separation(g, q, y)
            refs = all_good_separations(g, q, y)
            if sep is None:
                assert refs == []
            else:
                assert len(sep.side1) > q and len(sep.side2) > q
                assert sep.side1 | sep.side2 == frozenset(range(g.n))
                cut = sum(
                    m
                    for (u, v), m in g.edges.items()
                    if (u in sep.side1) != (v in sep.side1)
                )
                assert cut == sep.cut_size <= y
                assert refs
