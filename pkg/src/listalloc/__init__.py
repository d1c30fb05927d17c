"""Exact solvers for list allocation and the problems that reduce to it."""

from .errors import CapExceeded, FormatError
from .model import (
    Allocation,
    LAInstance,
    Verdict,
    enumerate_sub_alpha,
    normalize,
    verify_allocation,
)
from .multigraph import (
    Digraph,
    MultiGraph,
    Separation,
    components,
    contract_edges,
    d_edge_core,
    find_good_separation,
    global_min_cut,
)
from .oracle import oracle_asldh, oracle_bldh, oracle_la, oracle_minmax
from .reductions import (
    ASLDHInstance,
    BLDHInstance,
    GadgetMap,
    MMWCInstance,
    Partition,
    extract_hom_from_allocation,
    reduce_asldh_to_la,
    reduce_bldh_to_asldh,
    reduce_mbldh,
    reduce_minmax_to_la,
    solve_asldh,
    solve_bldh,
    solve_mbldh,
    solve_minmax,
    sparsify_asldh,
)
from .solver import (
    PipelineConfig,
    SHCLAInstance,
    ShrinkState,
    brute_force_la,
    compute_shrink_data,
    normalize_cla,
    solve_cla,
    solve_hcla,
    solve_la,
    solve_shcla,
)
from .splitters import SeparatingFamily, build_separating_family, verify_family

__all__ = [
    "ASLDHInstance",
    "Allocation",
    "BLDHInstance",
    "CapExceeded",
    "Digraph",
    "FormatError",
    "GadgetMap",
    "LAInstance",
    "MMWCInstance",
    "MultiGraph",
    "Partition",
    "PipelineConfig",
    "SHCLAInstance",
    "SeparatingFamily",
    "Separation",
    "ShrinkState",
    "Verdict",
    "brute_force_la",
    "build_separating_family",
    "components",
    "compute_shrink_data",
    "contract_edges",
    "d_edge_core",
    "enumerate_sub_alpha",
    "extract_hom_from_allocation",
    "find_good_separation",
    "global_min_cut",
    "normalize",
    "normalize_cla",
    "oracle_asldh",
    "oracle_bldh",
    "oracle_la",
    "oracle_minmax",
    "reduce_asldh_to_la",
    "reduce_bldh_to_asldh",
    "reduce_mbldh",
    "reduce_minmax_to_la",
    "solve_asldh",
    "solve_bldh",
    "solve_cla",
    "solve_hcla",
    "solve_la",
    "solve_mbldh",
    "solve_minmax",
    "solve_shcla",
    "sparsify_asldh",
    "verify_allocation",
    "verify_family",
]
