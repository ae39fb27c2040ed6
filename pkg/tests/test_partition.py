"""Partition procedures: layout, counting, validation, duplicates."""

from __future__ import annotations

from collections import Counter

import pytest

from dpqlab.classify import SampleRule, StrategyId
from dpqlab.core import CostCounters, SplitMix64, random_permutation
from dpqlab.partition import (
    PartitionerId,
    PartitionerSpec,
    SwapSchemeId,
    dnf_partition,
    run_partitioner,
    simple_partition_small,
    yaroslavskiy_partition,
)

from conftest import all_partitioners


def partition_whole(spec, arr, *, seed=0):
    """Partition ``arr`` in place using its end elements as the pivots."""
    p, q = arr[0], arr[-1]
    if q < p:
        arr[0], arr[-1] = q, p
        p, q = q, p
    counters = CostCounters()
    rng = SplitMix64(seed)
    result = run_partitioner(spec, arr, p, q, 0, len(arr) - 1, counters, rng=rng)
    return result, counters


def assert_three_way(arr, original, result, p, q):
    assert Counter(arr) == Counter(original)
    assert 0 <= result.pos_p < result.pos_q <= len(arr) - 1
    assert arr[result.pos_p] == p and arr[result.pos_q] == q
    assert all(x <= p for x in arr[: result.pos_p])
    assert all(p <= x <= q for x in arr[result.pos_p + 1 : result.pos_q])
    assert all(q <= x for x in arr[result.pos_q + 1 :])


@pytest.mark.parametrize("spec", all_partitioners(), ids=lambda s: s.label())
def test_layout_on_random_permutations(spec):
    for n in (2, 3, 4, 7, 12, 25, 40):
        for trial in range(3):
            arr = random_permutation(n, 1000 * n + trial)
            original = list(arr)
            result, counters = partition_whole(spec, arr, seed=trial)
            p, q = min(original[0], original[-1]), max(original[0], original[-1])
            assert_three_way(arr, original, result, p, q)
            assert counters.comparisons >= n - 2
            assert counters.swaps >= 2  # pivot placement always counts


@pytest.mark.parametrize("spec", all_partitioners(), ids=lambda s: s.label())
def test_duplicate_keys_partition_cleanly(spec):
    cases = [
        [2, 5, 5, 1, 1, 8, 8, 2, 9, 7],
        [1, 4, 4, 4, 4, 4, 4, 4, 9],
        [3, 3, 3, 3, 3, 8, 8, 8, 8, 8],
        [2, 2, 2, 2, 7],
        [1, 9, 9, 9, 9, 9, 9],
        [4, 1, 1, 1, 1, 5],
    ]
    for original in cases:
        arr = list(original)
        result, _ = partition_whole(spec, arr)
        p, q = min(original[0], original[-1]), max(original[0], original[-1])
        assert_three_way(arr, original, result, p, q)


def test_simple_small_counts_are_fully_determined():
    # One-pointer scan, smaller pivot first: every element costs one
    # comparison, mediums and larges one more; every small and every large
    # costs exactly one swap, plus the two pivot placements.
    arr = [5, 9, 1, 7, 12, 2, 8, 11, 3, 10]
    p, q = 5, 10
    s = sum(x < p for x in arr[1:-1])
    m = sum(p < x < q for x in arr[1:-1])
    lg = sum(x > q for x in arr[1:-1])
    counters = CostCounters()
    result = simple_partition_small(arr, p, q, 0, len(arr) - 1, counters)
    assert counters.comparisons == (s + m + lg) + m + lg
    assert counters.swaps == s + lg + 2
    assert (result.pos_p, result.pos_q) == (s, len(arr) - 1 - lg)


def test_one_swap_scheme_swaps_exactly_the_misplaced():
    # The one-swap-per-misplaced-element scheme moves each small and each
    # large exactly once, for any strategy choice sequence.
    for strategy in (StrategyId.SMALLER_FIRST, StrategyId.LARGER_FIRST, StrategyId.ALTERNATE):
        for trial in range(5):
            arr = random_permutation(15, 31 * trial + 7)
            p, q = sorted((arr[0], arr[-1]))
            arr[0], arr[-1] = p, q
            s = sum(x < p for x in arr[1:-1])
            lg = sum(x > q for x in arr[1:-1])
            counters = CostCounters()
            dnf_partition(
                arr, p, q, 0, len(arr) - 1, counters, SwapSchemeId.SWAP_A_DIJKSTRA, strategy
            )
            assert counters.swaps == s + lg + 2


def test_in_place_skipping_scheme_never_swaps_more():
    # Skipping already-placed smalls can only reduce the swap count, run by run.
    for trial in range(10):
        base = random_permutation(20, 99 + trial)
        costs = {}
        for scheme in (SwapSchemeId.SWAP_A_DIJKSTRA, SwapSchemeId.SWAP_B_MEYER):
            arr = list(base)
            p, q = sorted((arr[0], arr[-1]))
            arr[0], arr[-1] = p, q
            counters = CostCounters()
            dnf_partition(
                arr, p, q, 0, len(arr) - 1, counters, scheme, StrategyId.SMALLER_FIRST
            )
            costs[scheme] = counters.swaps
        assert costs[SwapSchemeId.SWAP_B_MEYER] <= costs[SwapSchemeId.SWAP_A_DIJKSTRA]


def test_randomized_composition_is_reproducible():
    spec = PartitionerSpec(
        PartitionerId.COMPOSED,
        strategy=StrategyId.COIN,
        swap_scheme=SwapSchemeId.SWAP_A_DIJKSTRA,
    )
    runs = []
    for _ in range(2):
        arr = random_permutation(30, 4242)
        result, counters = partition_whole(spec, arr, seed=5)
        runs.append((list(arr), result, counters.comparisons, counters.swaps))
    assert runs[0] == runs[1]


def test_composed_requires_rng_for_randomized_strategies():
    arr = [3, 5, 1, 9, 7]
    counters = CostCounters()
    with pytest.raises(ValueError):
        dnf_partition(
            arr, 3, 7, 0, 4, counters, SwapSchemeId.SWAP_A_DIJKSTRA, StrategyId.COIN
        )


def test_spec_validation():
    with pytest.raises(ValueError):
        PartitionerSpec(PartitionerId.COMPOSED)  # missing strategy and scheme
    with pytest.raises(ValueError):
        PartitionerSpec(PartitionerId.COMPOSED, strategy=StrategyId.COIN)
    with pytest.raises(ValueError):
        # The two-stage scheme only composes with smaller_first.
        PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.LARGER_FIRST,
            swap_scheme=SwapSchemeId.SWAP_C_CHEN,
        )
    with pytest.raises(ValueError):
        PartitionerSpec(PartitionerId.YAROSLAVSKIY, strategy=StrategyId.COIN)
    with pytest.raises(ValueError):
        PartitionerSpec(PartitionerId.SIMPLE_SMALL, swap_scheme=SwapSchemeId.SWAP_B_MEYER)
    assert (
        PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.SMALLER_FIRST,
            swap_scheme=SwapSchemeId.SWAP_C_CHEN,
        ).label()
        == "composed:smaller_first+swap_c_chen"
    )
    assert (
        PartitionerSpec(PartitionerId.N_SAMPLED, sample_rule=SampleRule.TWO_THIRDS).label()
        == "n_sampled:twothirds"
    )
    assert PartitionerSpec(PartitionerId.YAROSLAVSKIY).label() == "yaroslavskiy"


def test_bounds_validation():
    counters = CostCounters()
    with pytest.raises(ValueError):
        yaroslavskiy_partition([1], 1, 1, 0, 0, counters)
    with pytest.raises(ValueError):
        yaroslavskiy_partition([1, 2], 1, 2, 0, 2, counters)


def test_two_element_subarray_is_pivots_only():
    # Nothing to classify: just the two pivot placements.  The hole
    # partitioner with larger-pivot-first scans pays one guard probe (its
    # class test precedes the pointer guard); everyone else pays none.
    for spec in all_partitioners():
        arr = [4, 2]
        result, counters = partition_whole(spec, arr)
        assert arr == [2, 4]
        assert (result.pos_p, result.pos_q) == (0, 1)
        expected = 1 if spec.kind is PartitionerId.SEDGEWICK else 0
        assert counters.comparisons == expected
        assert counters.swaps == 2
