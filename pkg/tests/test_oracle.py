import pytest

from listalloc.errors import CapExceeded
from listalloc.model import LAInstance, verify_allocation
from listalloc.multigraph import Digraph, MultiGraph
from listalloc.oracle import oracle_asldh, oracle_bldh, oracle_la, oracle_minmax
from listalloc.reductions import ASLDHInstance, BLDHInstance, MMWCInstance, check_asldh, check_bldh

FULL2 = (frozenset({0, 1}),) * 3


def triangle():
    return MultiGraph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)])


class TestOracleLA:
    def test_triangle_yes(self):
        inst = LAInstance(triangle(), 2, FULL2, {(0, 1): 2})
        wit = oracle_la(inst)
        assert wit is not None and verify_allocation(inst, wit).ok

    def test_triangle_no(self):
        inst = LAInstance(triangle(), 2, FULL2, {(0, 1): 3})
        assert oracle_la(inst) is None  # triangle max cut is 2

    def test_single_box(self):
        g = MultiGraph.from_edge_list(2, [(0, 1)])
        inst = LAInstance(g, 1, (frozenset({0}),) * 2, {})
        assert oracle_la(inst).boxes == (0, 0)

    def test_deterministic(self):
        inst = LAInstance(triangle(), 2, FULL2, {(0, 1): 2})
        assert oracle_la(inst) == oracle_la(inst)

    def test_cap(self):
        g = MultiGraph(12, {})
        inst = LAInstance(g, 3, (frozenset({0, 1, 2}),) * 12, {})
        with pytest.raises(CapExceeded):
            oracle_la(inst, cap=100)


class TestOracleMinmax:
    def test_path(self):
        g = MultiGraph.from_edge_list(3, [(0, 1), (1, 2)])
        part = oracle_minmax(MMWCInstance(g, 1, (0, 2)))
        assert part is not None
        assert part.parts[0] == 0 and part.parts[2] == 1

    def test_terminal_edge_zero_budget(self):
        g = MultiGraph.from_edge_list(2, [(0, 1)])
        assert oracle_minmax(MMWCInstance(g, 0, (0, 1))) is None

    def test_disjoint_components(self):
        g = MultiGraph.from_edge_list(4, [(0, 1), (2, 3)])
        part = oracle_minmax(MMWCInstance(g, 0, (0, 2)))
        assert part is not None
        assert part.parts == (0, 0, 1, 1)


def bidirected_triangle():
    return Digraph.from_arcs(
        3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)], loops_allowed=True
    )


class TestOracleBLDH:
    def test_loop_host(self):
        guest = Digraph.from_arcs(2, [(0, 1)])
        host = Digraph.from_arcs(1, [(0, 0)], loops_allowed=True)
        inst = BLDHInstance(guest, host, (frozenset({0}),) * 2, 0)
        assert oracle_bldh(inst) == (0, 0)

    def test_three_cycle_budget(self):
        guest = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        lists = (frozenset({0, 1, 2}),) * 3
        assert oracle_bldh(BLDHInstance(guest, bidirected_triangle(), lists, 3)) is not None
        assert oracle_bldh(BLDHInstance(guest, bidirected_triangle(), lists, 2)) is None

    def test_reversed_lists(self):
        guest = Digraph.from_arcs(2, [(0, 1)])
        host = Digraph.from_arcs(2, [(0, 1)])
        inst = BLDHInstance(guest, host, (frozenset({1}), frozenset({0})), 1)
        assert oracle_bldh(inst) is None

    def test_witness_checks(self):
        guest = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        lists = (frozenset({0, 1, 2}),) * 3
        inst = BLDHInstance(guest, bidirected_triangle(), lists, 3)
        assert check_bldh(inst, oracle_bldh(inst))


class TestOracleASLDH:
    def test_forced_arc(self):
        guest = Digraph.from_arcs(2, [(0, 1)])
        host = Digraph.from_arcs(2, [(0, 1)])
        lists = (frozenset({0, 1}),) * 2
        inst = ASLDHInstance(guest, host, lists, {(0, 1): 1})
        assert oracle_asldh(inst) == (0, 1)

    def test_uncharged_arc_without_loops(self):
        guest = Digraph.from_arcs(2, [(0, 1)])
        host = Digraph.from_arcs(2, [(0, 1)])
        lists = (frozenset({0, 1}),) * 2
        inst = ASLDHInstance(guest, host, lists, {})
        assert oracle_asldh(inst) is None  # the arc must be charged or be a loop

    def test_cycle_charges(self):
        guest = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
        lists = (frozenset({0, 1, 2}),) * 3
        alpha = {(0, 1): 1, (1, 2): 1, (2, 0): 1}
        inst = ASLDHInstance(guest, bidirected_triangle(), lists, alpha)
        chi = oracle_asldh(inst)
        assert chi is not None and check_asldh(inst, chi)
