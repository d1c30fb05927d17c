"""Separating set families.

A family F of subsets of {0..n-1} separates (a, b) when for every pair of
disjoint sets A, B with |A| <= a and |B| <= b some S in F has A inside S and
B disjoint from S.  The default construction is a greedy set cover over the
maximal eligible pairs, certified by exhaustive verification; a randomized
construction with a recorded failure bound handles universes too large for
that.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from .errors import CapExceeded

EXHAUSTIVE_UNIVERSE_LIMIT = 2**14
DEFAULT_PAIR_CAP = 10**7


@dataclass(frozen=True)
class SeparatingFamily:
    n: int
    a: int
    b: int
    sets: Tuple[FrozenSet[int], ...]
    mode: str  # "exhaustive-verified" | "randomized"
    seed: Optional[int] = None
    failure_bound: Optional[float] = None


def _mask_to_set(mask: int) -> FrozenSet[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _eligible_pairs(n: int, a: int, b: int) -> List[Tuple[int, int]]:
    """All disjoint (A, B) masks with |A| <= a, |B| <= b."""
    universe = list(range(n))
    pairs = []
    for ka in range(min(a, n) + 1):
        for A in itertools.combinations(universe, ka):
            rest = [x for x in universe if x not in A]
            am = sum(1 << x for x in A)
            for kb in range(min(b, len(rest)) + 1):
                for B in itertools.combinations(rest, kb):
                    pairs.append((am, sum(1 << x for x in B)))
    return pairs


def _maximal_pairs(n: int, a: int, b: int) -> List[Tuple[int, int]]:
    """Pairs that cannot be extended on either side; covering them covers all
    eligible pairs."""
    out = []
    for am, bm in _eligible_pairs(n, a, b):
        ka, kb = am.bit_count(), bm.bit_count()
        if (ka == min(a, n) and kb == min(b, n - ka)) or ka + kb == n:
            out.append((am, bm))
    return out


def pair_budget(n: int, a: int, b: int) -> int:
    return math.comb(n, min(a, n)) * math.comb(n, min(b, n))


def verify_family(family: SeparatingFamily) -> bool:
    """Exhaustive coverage check over every eligible (A, B) pair."""
    masks = [sum(1 << x for x in s) for s in family.sets]
    for am, bm in _eligible_pairs(family.n, family.a, family.b):
        if not any(sm & am == am and sm & bm == 0 for sm in masks):
            return False
    return True


def _greedy_sets(n: int, a: int, b: int) -> List[int]:
    pairs = _maximal_pairs(n, a, b)
    npairs = len(pairs)
    full_universe = (1 << n) - 1
    cover = [0] * (1 << n)
    for p, (am, bm) in enumerate(pairs):
        bit = 1 << p
        comp = full_universe & ~(am | bm)
        sub = comp
        while True:
            cover[am | sub] |= bit
            if sub == 0:
                break
            sub = (sub - 1) & comp
    chosen: List[int] = []
    covered = 0
    goal = (1 << npairs) - 1
    while covered != goal:
        best_gain = -1
        best_masks: List[int] = []
        for s in range(1 << n):
            gain = (cover[s] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_masks = [s]
            elif gain == best_gain:
                best_masks.append(s)
        pick = min(best_masks, key=lambda m: tuple(sorted(_mask_to_set(m))))
        chosen.append(pick)
        covered |= cover[pick]
    return chosen


def _randomized_sets(
    n: int, a: int, b: int, seed: int, failure_bound: float
) -> List[FrozenSet[int]]:
    # Union bound: one random set covers a fixed eligible pair with
    # probability at least 1 / C(a+b, a), so k sets miss some pair with
    # probability at most N * exp(-k / C(a+b, a)) where N counts the pairs.
    npairs = max(pair_budget(n, a, b), 2)
    base = math.comb(a + b, a) if a + b > 0 else 1
    k = math.ceil(base * (math.log(npairs) + math.log(1.0 / failure_bound))) + 1
    p = a / (a + b) if a + b > 0 else 0.0
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        out.append(frozenset(x for x in range(n) if rng.random() < p))
    return out


def build_separating_family(
    n: int,
    a: int,
    b: int,
    mode: str = "auto",
    seed: int = 0,
    failure_bound: float = 1e-6,
    pair_cap: int = DEFAULT_PAIR_CAP,
) -> SeparatingFamily:
    """Construct a separating family.

    mode "exhaustive": greedy build, certified by full verification (errors
    out when the pair space exceeds pair_cap).  mode "randomized": sampled
    construction with the recorded failure bound.  mode "auto" picks
    exhaustive when the universe and pair space are small enough.
    """
    if n < 0 or a < 0 or b < 0:
        raise ValueError("n, a, b must be nonnegative")
    a, b = min(a, n), min(b, n)
    feasible_exhaustive = (1 << n) <= EXHAUSTIVE_UNIVERSE_LIMIT and pair_budget(n, a, b) <= pair_cap
    if mode == "auto":
        mode = "exhaustive" if feasible_exhaustive else "randomized"
    if mode == "exhaustive":
        if not feasible_exhaustive:
            raise CapExceeded(
                f"exhaustive verification infeasible for n={n}, a={a}, b={b}"
            )
        sets = tuple(_mask_to_set(m) for m in _greedy_sets(n, a, b))
        family = SeparatingFamily(n, a, b, sets, "exhaustive-verified")
        if not verify_family(family):
            raise AssertionError("greedy family failed verification")
        return family
    if mode == "randomized":
        sets = tuple(_randomized_sets(n, a, b, seed, failure_bound))
        return SeparatingFamily(n, a, b, sets, "randomized", seed, failure_bound)
    raise ValueError(f"unknown mode {mode!r}")
