"""Brute-force ground-truth solvers.

Deliberately independent of the solver pipeline: each oracle enumerates raw
assignments (list filtering only, no pruning) and recounts crossings with its
own logic, so agreement tests between oracle and pipeline are meaningful.
"""

from __future__ import annotations

import itertools
from typing import Dict, Optional, Tuple

from .errors import CapExceeded
from .model import Allocation, LAInstance
from .reductions import ASLDHInstance, BLDHInstance, MMWCInstance, Partition

DEFAULT_CAP = 10**7


def _state_count(lists) -> int:
    out = 1
    for lam in lists:
        out *= len(lam)
    return out


def oracle_la(inst: LAInstance, cap: int = DEFAULT_CAP) -> Optional[Allocation]:
    """Canonically-first valid allocation, or None if none exists."""
    lists = [tuple(sorted(lam)) for lam in inst.lists]
    if any(not lam for lam in lists):
        return None
    if _state_count(lists) > cap:
        raise CapExceeded(f"oracle state count exceeds {cap}")
    edge_items = sorted(inst.g.edges.items())
    required = {pair: val for pair, val in inst.alpha.items()}
    for boxes in itertools.product(*lists):
        counts: Dict[Tuple[int, int], int] = {}
        for (u, v), mult in edge_items:
            a, b = boxes[u], boxes[v]
            if a != b:
                key = (a, b) if a < b else (b, a)
                counts[key] = counts.get(key, 0) + mult
        if counts == required:
            return Allocation(boxes)
    return None


def oracle_minmax(inst: MMWCInstance, cap: int = DEFAULT_CAP) -> Optional[Partition]:
    """Canonically-first partition with terminal k in part k and every part's
    outgoing multiplicity at most ell."""
    r = inst.r
    choices = []
    pinned = {t: k for k, t in enumerate(inst.terminals)}
    for v in range(inst.g.n):
        choices.append((pinned[v],) if v in pinned else tuple(range(r)))
    if _state_count(choices) > cap:
        raise CapExceeded(f"oracle state count exceeds {cap}")
    edge_items = sorted(inst.g.edges.items())
    for parts in itertools.product(*choices):
        outgoing = [0] * r
        for (u, v), mult in edge_items:
            if parts[u] != parts[v]:
                outgoing[parts[u]] += mult
                outgoing[parts[v]] += mult
        if all(out <= inst.ell for out in outgoing):
            return Partition(parts)
    return None


def _charges(inst, chi) -> Optional[Dict[Tuple[int, int], int]]:
    """Non-loop arc charges of a mapping, or None if some arc has no image."""
    host_arcs = inst.host.arcs
    counts: Dict[Tuple[int, int], int] = {}
    for (u, v), mult in sorted(inst.guest.arcs.items()):
        image = (chi[u], chi[v])
        if image not in host_arcs:
            return None
        if image[0] != image[1]:
            counts[image] = counts.get(image, 0) + mult
    return counts


def oracle_bldh(inst: BLDHInstance, cap: int = DEFAULT_CAP) -> Optional[Tuple[int, ...]]:
    """Canonically-first list homomorphism with total non-loop charge <= ell."""
    lists = [tuple(sorted(lam)) for lam in inst.lists]
    if any(not lam for lam in lists):
        return None
    if _state_count(lists) > cap:
        raise CapExceeded(f"oracle state count exceeds {cap}")
    for chi in itertools.product(*lists):
        counts = _charges(inst, chi)
        if counts is not None and sum(counts.values()) <= inst.ell:
            return chi
    return None


def oracle_asldh(inst: ASLDHInstance, cap: int = DEFAULT_CAP) -> Optional[Tuple[int, ...]]:
    """Canonically-first list homomorphism with exact per-arc charges."""
    lists = [tuple(sorted(lam)) for lam in inst.lists]
    if any(not lam for lam in lists):
        return None
    if _state_count(lists) > cap:
        raise CapExceeded(f"oracle state count exceeds {cap}")
    required = {arc: val for arc, val in inst.alpha.items() if val > 0}
    for chi in itertools.product(*lists):
        counts = _charges(inst, chi)
        if counts == required:
            return chi
    return None
