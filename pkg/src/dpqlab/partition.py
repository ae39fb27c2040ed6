"""Dual-pivot partition procedures with exact comparison/swap accounting.

Every partitioner here has the same contract: the subarray ``arr[left..right]``
(inclusive) holds the smaller pivot ``p`` at ``arr[left]`` and the larger
pivot ``q`` at ``arr[right]``; on return the subarray is rearranged into

    smalls | p | mediums | q | larges

and the pivot positions are reported as ``PartitionResult(pos_p, pos_q)``
with ``left <= pos_p < pos_q <= right``.  All key comparisons go through
``compare_lt`` and all exchanges through ``swap_elements`` (or are counted
as one swap per hole-move for the two-pointer hole partitioners), so the
counters reflect exactly what the average-case analysis counts.  Loop
conditions are transcribed with their original conjunct order — a class
test written before a pointer guard really is evaluated (and charged)
before the guard.

The pivots at the subarray ends double as sentinels: no scan can leave
``[left, right]`` because ``arr[left] = p`` stops every "greater than q"
scan and ``arr[right] = q`` stops every "less than q" scan.  Inputs with
duplicate keys still terminate and produce a valid three-way partition
with non-strict boundaries; their counts fall outside the random-
permutation model and are not asserted against it.

Besides the named procedures, ``dnf_partition`` composes any
classification strategy with one of three Dutch-national-flag swap
schemes (one-swap-per-misplaced-element, the variant that avoids swapping
uninspected elements, and the two-stage scheme).  Composition follows the
classify-once-remember discipline: the first class query on an element
runs a full strategy classification (charged per the strategy); the class
then travels with the element through swaps and later queries are free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .core import CostCounters, SplitMix64, compare_lt, swap_elements
from .classify import (
    ClassifierState,
    ElementClass,
    PivotChoice,
    SampleRule,
    StrategyId,
    RANDOMIZED_STRATEGIES,
    choose_first_pivot,
    make_classifier_state,
    sample_budget_for,
)

__all__ = [
    "PartitionResult",
    "SwapSchemeId",
    "PartitionerId",
    "PartitionerSpec",
    "yaroslavskiy_partition",
    "sedgewick_partition",
    "sedgewick_modified_partition",
    "simple_partition_small",
    "simple_partition_large",
    "strategy_n_partition",
    "dnf_partition",
    "run_partitioner",
]


class PartitionResult(NamedTuple):
    """Final pivot positions; everything in between is the medium block."""

    pos_p: int
    pos_q: int


class SwapSchemeId(Enum):
    SWAP_A_DIJKSTRA = "swap_a_dijkstra"
    SWAP_B_MEYER = "swap_b_meyer"
    SWAP_C_CHEN = "swap_c_chen"


class PartitionerId(Enum):
    YAROSLAVSKIY = "yaroslavskiy"
    SEDGEWICK = "sedgewick"
    SEDGEWICK_MODIFIED = "sedgewick_modified"
    SIMPLE_SMALL = "simple_small"
    SIMPLE_LARGE = "simple_large"
    N_SAMPLED = "n_sampled"
    COMPOSED = "composed"


@dataclass(frozen=True)
class PartitionerSpec:
    """A runnable partitioner: a named procedure or a strategy/scheme pair."""

    kind: PartitionerId
    strategy: StrategyId | None = None
    swap_scheme: SwapSchemeId | None = None
    sample_rule: SampleRule = SampleRule.HUNDREDTH

    def __post_init__(self):
        if self.kind is PartitionerId.COMPOSED:
            if self.strategy is None or self.swap_scheme is None:
                raise ValueError("composed partitioner needs a strategy and a swap scheme")
            if self.swap_scheme is SwapSchemeId.SWAP_C_CHEN and (
                self.strategy is not StrategyId.SMALLER_FIRST
            ):
                raise ValueError(
                    "the two-stage swap scheme fixes its own comparison order; "
                    "compose it only with smaller_first"
                )
        elif self.strategy is not None or self.swap_scheme is not None:
            raise ValueError(f"{self.kind.value} does not take a strategy or swap scheme")

    def label(self) -> str:
        if self.kind is PartitionerId.COMPOSED:
            return f"composed:{self.strategy.value}+{self.swap_scheme.value}"
        if self.kind is PartitionerId.N_SAMPLED:
            return f"n_sampled:{self.sample_rule.value}"
        return self.kind.value


def _check_bounds(arr, left: int, right: int) -> None:
    if right - left < 1:
        raise ValueError("partition needs at least two positions (right - left >= 1)")
    if left < 0 or right >= len(arr):
        raise ValueError("partition bounds outside the array")


def yaroslavskiy_partition(arr, p, q, left, right, counters: CostCounters) -> PartitionResult:
    """Three-pointer partition: smaller pivot first, larger first after each large.

    One left-to-right pointer classifies elements, swapping smalls down and
    larges up to a back pointer that first skips over in-place larges.
    """
    _check_bounds(arr, left, right)
    l = left + 1
    g = right - 1
    k = l
    while k <= g:
        if compare_lt(arr[k], p, counters):
            swap_elements(arr, k, l, counters)
            l += 1
        else:
            if compare_lt(q, arr[k], counters):  # arr[k] > q
                # The back scan compares before checking the pointer guard.
                while compare_lt(q, arr[g], counters) and k < g:
                    g -= 1
                swap_elements(arr, k, g, counters)
                g -= 1
                if compare_lt(arr[k], p, counters):
                    swap_elements(arr, k, l, counters)
                    l += 1
        k += 1
    swap_elements(arr, left, l - 1, counters)
    swap_elements(arr, right, g + 1, counters)
    return PartitionResult(l - 1, g + 1)


def simple_partition_small(arr, p, q, left, right, counters: CostCounters) -> PartitionResult:
    """One-pointer scan, always comparing against the smaller pivot first.

    Smalls swap down to ``l``, larges swap up to ``g`` (re-examining the
    element swapped in), mediums stay: one swap per misplaced element.
    """
    _check_bounds(arr, left, right)
    l = left + 1
    g = right - 1
    k = l
    while k <= g:
        if compare_lt(arr[k], p, counters):
            swap_elements(arr, k, l, counters)
            l += 1
            k += 1
        else:
            if compare_lt(arr[k], q, counters):
                k += 1
            else:
                swap_elements(arr, k, g, counters)
                g -= 1
    swap_elements(arr, left, l - 1, counters)
    swap_elements(arr, right, g + 1, counters)
    return PartitionResult(l - 1, g + 1)


def simple_partition_large(arr, p, q, left, right, counters: CostCounters) -> PartitionResult:
    """Two-scan partition, always comparing against the larger pivot first.

    A back scan parks ``g`` on the rightmost unprocessed non-large, a front
    scan advances ``k`` over non-larges (filing smalls down to ``l``), and
    each stopped large at ``k`` is exchanged with the element at ``g``.
    The pivots at the subarray ends stop both scans, so neither needs a
    bounds guard; the crossing test must read ``k < g`` (swapping on the
    crossed ordering corrupts the layout).

    Unlike :func:`simple_partition_small`, this loop's comparison count sits
    slightly above the pure larger-pivot-first classification cost: the back
    scan's stopping probe re-examines an element the front scan will classify
    again, and an all-large tail lets the back scan probe the left pivot.
    That is the price of sentinel-guarded scans; the swap pattern is what the
    loop is used for.
    """
    _check_bounds(arr, left, right)
    l = left + 1
    g = right - 1
    k = l
    while k <= g:
        while compare_lt(q, arr[g], counters):  # arr[g] > q; stopped by p at left
            g -= 1
        while compare_lt(arr[k], q, counters):  # stopped by q at right
            if compare_lt(arr[k], p, counters):
                swap_elements(arr, k, l, counters)
                l += 1
            k += 1
        if k < g:
            swap_elements(arr, k, g, counters)
            if compare_lt(arr[k], p, counters):
                swap_elements(arr, l, k, counters)
                l += 1
            g -= 1
        k += 1
    swap_elements(arr, left, l - 1, counters)
    swap_elements(arr, right, g + 1, counters)
    return PartitionResult(l - 1, g + 1)


def _hole_move(arr, dst: int, src: int, counters: CostCounters) -> None:
    """Move ``arr[src]`` into the hole at ``dst``; costs one swap's work."""
    counters.swaps += 1
    arr[dst] = arr[src]


def sedgewick_partition(arr, p, q, left, right, counters: CostCounters) -> PartitionResult:
    """Two-pointer hole partition: front scan tries the larger pivot first.

    The pivot positions start out as holes; smalls hop into the left hole,
    larges into the right one, and each hole refill counts as one swap.
    The front scan hunts a large (q first), the back scan hunts a small
    (p first); the final pivot drops count one swap each.
    """
    _check_bounds(arr, left, right)
    i = i1 = left
    j = j1 = right
    broke = False
    while True:
        i += 1
        while not compare_lt(q, arr[i], counters):  # arr[i] <= q
            if i >= j:
                broke = True
                break
            if compare_lt(arr[i], p, counters):
                _hole_move(arr, i1, i, counters)
                i1 += 1
                arr[i] = arr[i1]
            i += 1
        if broke:
            break
        j -= 1
        while not compare_lt(arr[j], p, counters):  # arr[j] >= p
            if compare_lt(q, arr[j], counters):
                _hole_move(arr, j1, j, counters)
                j1 -= 1
                arr[j] = arr[j1]
            if i >= j:
                broke = True
                break
            j -= 1
        if broke:
            break
        _hole_move(arr, i1, j, counters)
        _hole_move(arr, j1, i, counters)
        i1 += 1
        j1 -= 1
        arr[i] = arr[i1]
        arr[j] = arr[j1]
    counters.swaps += 2  # pivots drop into the final holes
    arr[i1] = p
    arr[j1] = q
    return PartitionResult(i1, j1)


def sedgewick_modified_partition(arr, p, q, left, right, counters: CostCounters) -> PartitionResult:
    """Hole partition with flipped first comparisons on both scans.

    Like ``sedgewick_partition`` but the front scan tries the smaller
    pivot first and the back scan the larger one.
    """
    _check_bounds(arr, left, right)
    i = i1 = left
    j = j1 = right
    broke = False
    while True:
        i += 1
        while True:
            if i >= j:
                broke = True
                break
            if compare_lt(arr[i], p, counters):
                _hole_move(arr, i1, i, counters)
                i1 += 1
                arr[i] = arr[i1]
            elif compare_lt(q, arr[i], counters):  # arr[i] > q: large found
                break
            i += 1
        if broke:
            break
        j -= 1
        while True:
            if compare_lt(q, arr[j], counters):  # arr[j] > q
                _hole_move(arr, j1, j, counters)
                j1 -= 1
                arr[j] = arr[j1]
            elif compare_lt(arr[j], p, counters):  # small found
                break
            if i >= j:
                broke = True
                break
            j -= 1
        if broke:
            break
        _hole_move(arr, i1, j, counters)
        _hole_move(arr, j1, i, counters)
        i1 += 1
        j1 -= 1
        arr[i] = arr[i1]
        arr[j] = arr[j1]
    counters.swaps += 2
    arr[i1] = p
    arr[j1] = q
    return PartitionResult(i1, j1)


def strategy_n_partition(
    arr,
    p,
    q,
    left,
    right,
    counters: CostCounters,
    rule: SampleRule = SampleRule.HUNDREDTH,
) -> PartitionResult:
    """Sampling partitioner: observe a prefix smaller-pivot-first, then commit.

    Runs the one-pointer scan of ``simple_partition_small``; after the
    sampling prefix it locks the comparison order to the observed majority
    (more larges seen -> larger pivot first; ties stay with the smaller).
    """
    _check_bounds(arr, left, right)
    budget = sample_budget_for(rule, right - left + 1)
    l = left + 1
    g = right - 1
    k = l
    seen_small = 0
    seen_large = 0
    level = 0
    q_first_locked: bool | None = None
    while k <= g:
        if level < budget:
            q_first = False
        else:
            if q_first_locked is None:
                q_first_locked = seen_small < seen_large
            q_first = q_first_locked
        if q_first:
            if compare_lt(arr[k], q, counters):
                if compare_lt(arr[k], p, counters):
                    cls = ElementClass.SMALL
                else:
                    cls = ElementClass.MEDIUM
            else:
                cls = ElementClass.LARGE
        else:
            if compare_lt(arr[k], p, counters):
                cls = ElementClass.SMALL
            elif compare_lt(arr[k], q, counters):
                cls = ElementClass.MEDIUM
            else:
                cls = ElementClass.LARGE
        level += 1
        if cls is ElementClass.SMALL:
            seen_small += 1
            swap_elements(arr, k, l, counters)
            l += 1
            k += 1
        elif cls is ElementClass.MEDIUM:
            k += 1
        else:
            seen_large += 1
            swap_elements(arr, k, g, counters)
            g -= 1
    swap_elements(arr, left, l - 1, counters)
    swap_elements(arr, right, g + 1, counters)
    return PartitionResult(l - 1, g + 1)


def _classify_for_choice(key, p, q, choice: PivotChoice, counters: CostCounters) -> ElementClass:
    """Classification with the same counting as ``classify_element`` but
    tolerant of duplicate keys (non-strict class boundaries), which the
    sorting paths must survive."""
    if choice is PivotChoice.P_FIRST:
        if compare_lt(key, p, counters):
            return ElementClass.SMALL
        if compare_lt(key, q, counters):
            return ElementClass.MEDIUM
        return ElementClass.LARGE
    if compare_lt(key, q, counters):
        if compare_lt(key, p, counters):
            return ElementClass.SMALL
        return ElementClass.MEDIUM
    return ElementClass.LARGE


class _ClassOracle:
    """Classify-once-remember wrapper shared by the DNF swap schemes."""

    def __init__(
        self,
        arr,
        p,
        q,
        left,
        right,
        counters: CostCounters,
        strategy: StrategyId,
        state: ClassifierState,
    ):
        self.arr = arr
        self.p = p
        self.q = q
        self.counters = counters
        self.strategy = strategy
        self.state = state
        self.known: dict[int, ElementClass] = {}

    def class_at(self, pos: int) -> ElementClass:
        cls = self.known.get(pos)
        if cls is None:
            choice = choose_first_pivot(self.strategy, self.state)
            cls = _classify_for_choice(self.arr[pos], self.p, self.q, choice, self.counters)
            self.state.record(cls)
            self.known[pos] = cls
        return cls

    def swap(self, i: int, j: int) -> None:
        swap_elements(self.arr, i, j, self.counters)
        ki = self.known.get(i)
        kj = self.known.get(j)
        if kj is None:
            self.known.pop(i, None)
        else:
            self.known[i] = kj
        if ki is None:
            self.known.pop(j, None)
        else:
            self.known[j] = ki

    def counts(self) -> tuple[int, int]:
        small = sum(1 for c in self.known.values() if c is ElementClass.SMALL)
        large = sum(1 for c in self.known.values() if c is ElementClass.LARGE)
        return small, large


def _dnf_dijkstra(oracle: _ClassOracle, lo: int, hi: int) -> None:
    """One swap per misplaced element; classifies from the right end."""
    i = lo
    j = hi
    k = hi
    while i <= j:
        cls = oracle.class_at(j)
        if cls is ElementClass.SMALL:
            oracle.swap(i, j)
            i += 1
        elif cls is ElementClass.MEDIUM:
            j -= 1
        else:
            oracle.swap(j, k)
            j -= 1
            k -= 1


def _dnf_meyer(oracle: _ClassOracle, lo: int, hi: int) -> None:
    """Like the one-swap scheme but skips smalls already in place.

    The forward scan is bounded to the region (an all-small region would
    otherwise run onto the pivot slot); the bound changes no swap and no
    comparison, since re-queries of remembered classes are free.
    """
    i = lo
    j = hi
    k = hi
    while i <= j:
        cls = oracle.class_at(j)
        if cls is ElementClass.SMALL:
            while i <= hi and oracle.class_at(i) is ElementClass.SMALL:
                i += 1
            if i < j:
                oracle.swap(i, j)
                i += 1
        elif cls is ElementClass.MEDIUM:
            j -= 1
        else:
            oracle.swap(j, k)
            j -= 1
            k -= 1


def _dnf_chen(oracle: _ClassOracle, lo: int, hi: int) -> None:
    """Two stages: smalls to the left, then larges to the right.

    Class tests are written before the pointer guards, matching the
    procedure's stated conjunct order, so crossing elements are still
    classified (remembered classes make re-queries free).  The element the
    stage-one pointers meet on is classified before stage two so that the
    pivots can be placed even when stage two is skipped (a one-element
    region skips both scans entirely).
    """
    i = lo
    j = hi
    while i < j:
        while oracle.class_at(i) is ElementClass.SMALL and i < j:
            i += 1
        while oracle.class_at(j) is not ElementClass.SMALL and i < j:
            j -= 1
        if i < j:
            oracle.swap(i, j)
            i += 1
            j -= 1
    if i <= hi:
        oracle.class_at(i)
    if i < hi:
        j = i
        k = hi
        while j < k:
            while oracle.class_at(j) is not ElementClass.LARGE and j < k:
                j += 1
            while oracle.class_at(k) is ElementClass.LARGE and j < k:
                k -= 1
            if j < k:
                oracle.swap(j, k)
                j += 1
                k -= 1


def dnf_partition(
    arr,
    p,
    q,
    left,
    right,
    counters: CostCounters,
    scheme: SwapSchemeId,
    strategy: StrategyId,
    *,
    rng: SplitMix64 | None = None,
    sample_rule: SampleRule = SampleRule.HUNDREDTH,
) -> PartitionResult:
    """Partition by composing a classification strategy with a swap scheme.

    The two-stage scheme hard-codes smaller-pivot-first comparisons, so it
    only composes with that strategy; randomized strategies need ``rng``.
    """
    _check_bounds(arr, left, right)
    if scheme is SwapSchemeId.SWAP_C_CHEN and strategy is not StrategyId.SMALLER_FIRST:
        raise ValueError(
            "the two-stage swap scheme fixes its own comparison order; "
            "compose it only with smaller_first"
        )
    if strategy in RANDOMIZED_STRATEGIES and rng is None:
        raise ValueError(f"strategy {strategy.value} needs an rng for its coin stream")
    lo = left + 1
    hi = right - 1
    keys = [arr[k] for k in range(lo, hi + 1)]
    state = make_classifier_state(strategy, keys, p, q, rng=rng, sample_rule=sample_rule)
    oracle = _ClassOracle(arr, p, q, left, right, counters, strategy, state)
    if lo <= hi:
        if scheme is SwapSchemeId.SWAP_A_DIJKSTRA:
            _dnf_dijkstra(oracle, lo, hi)
        elif scheme is SwapSchemeId.SWAP_B_MEYER:
            _dnf_meyer(oracle, lo, hi)
        elif scheme is SwapSchemeId.SWAP_C_CHEN:
            _dnf_chen(oracle, lo, hi)
        else:
            raise ValueError(f"unknown swap scheme: {scheme!r}")
    small, large = oracle.counts()
    swap_elements(arr, left, left + small, counters)
    swap_elements(arr, right, right - large, counters)
    return PartitionResult(left + small, right - large)


def run_partitioner(
    spec: PartitionerSpec,
    arr,
    p,
    q,
    left,
    right,
    counters: CostCounters,
    *,
    rng: SplitMix64 | None = None,
) -> PartitionResult:
    """Dispatch a partition call to the procedure ``spec`` names."""
    if spec.kind is PartitionerId.YAROSLAVSKIY:
        return yaroslavskiy_partition(arr, p, q, left, right, counters)
    if spec.kind is PartitionerId.SEDGEWICK:
        return sedgewick_partition(arr, p, q, left, right, counters)
    if spec.kind is PartitionerId.SEDGEWICK_MODIFIED:
        return sedgewick_modified_partition(arr, p, q, left, right, counters)
    if spec.kind is PartitionerId.SIMPLE_SMALL:
        return simple_partition_small(arr, p, q, left, right, counters)
    if spec.kind is PartitionerId.SIMPLE_LARGE:
        return simple_partition_large(arr, p, q, left, right, counters)
    if spec.kind is PartitionerId.N_SAMPLED:
        return strategy_n_partition(arr, p, q, left, right, counters, rule=spec.sample_rule)
    if spec.kind is PartitionerId.COMPOSED:
        return dnf_partition(
            arr,
            p,
            q,
            left,
            right,
            counters,
            spec.swap_scheme,
            spec.strategy,
            rng=rng,
            sample_rule=spec.sample_rule,
        )
    raise ValueError(f"unknown partitioner: {spec.kind!r}")
