"""Sorting drivers: insertion sort, pivot selection, full sorts."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpqlab.classify import SampleRule, StrategyId
from dpqlab.core import CostCounters, random_permutation
from dpqlab.partition import PartitionerId, PartitionerSpec, SwapSchemeId
from dpqlab.sort import (
    DIRECT_ENDS,
    SAMPLE5_TERTILES,
    SelectorMode,
    SelectorSpec,
    SortConfig,
    classic_quicksort,
    clever_quicksort,
    dual_pivot_quicksort,
    insertion_sort,
    select_pivots,
)

YAROSLAVSKIY = PartitionerSpec(PartitionerId.YAROSLAVSKIY)


def test_insertion_sort_counts():
    c = CostCounters()
    arr = [1, 2, 3, 4, 5]
    insertion_sort(arr, 0, 4, c)
    assert arr == [1, 2, 3, 4, 5]
    assert c.comparisons == 4  # one failing guard comparison per element
    c.reset()
    arr = [5, 4, 3, 2, 1]
    insertion_sort(arr, 0, 4, c)
    assert arr == [1, 2, 3, 4, 5]
    assert c.comparisons == 10  # every pair
    assert c.swaps == 0  # shifts are not swaps
    c.reset()
    arr = [9, 3, 1, 2, 9]
    insertion_sort(arr, 1, 3, c)  # inclusive subrange only
    assert arr == [9, 1, 2, 3, 9]


def test_select_pivots_direct_ends_is_free():
    arr = [5, 1, 4, 2, 3]
    c = CostCounters()
    select_pivots(arr, 0, 4, DIRECT_ENDS, c)
    assert arr == [5, 1, 4, 2, 3]
    assert (c.comparisons, c.swaps) == (0, 0)


def test_select_pivots_sample5_places_tertiles():
    # Sample of five evenly spaced entries; ranks 2 and 4 (1-based) of the
    # sample become p and q.
    arr = list(range(10, 0, -1))  # sample at 0,2,4,6,9 -> values 10,8,6,4,1
    c = CostCounters()
    select_pivots(arr, 0, 9, SAMPLE5_TERTILES, c)
    assert arr[0] == 4 and arr[9] == 8
    assert sorted(arr) == list(range(1, 11))
    assert c.swaps == 2  # the two moves to the ends
    assert c.comparisons >= 4  # sorting the sample is counted work


def test_select_pivots_sample_k_places_tertiles():
    sel = SelectorSpec(SelectorMode.SAMPLE_K, 8)
    arr = random_permutation(40, 7)
    sample = sorted(arr[ix] for ix in (0, 5, 11, 16, 22, 27, 33, 39))
    c = CostCounters()
    select_pivots(arr, 0, 39, sel, c)
    assert arr[0] == sample[2] and arr[39] == sample[5]
    assert sorted(arr) == list(range(1, 41))


def test_select_pivots_median_of_three():
    sel = SelectorSpec(SelectorMode.MEDIAN_OF_K, 3)
    arr = [9, 0, 0, 0, 2, 0, 0, 0, 5]  # sample 9, 2, 5 -> median 5
    c = CostCounters()
    select_pivots(arr, 0, 8, sel, c)
    assert arr[0] == 5
    assert c.swaps == 1


def test_select_pivots_small_range_falls_back():
    arr = [3, 1, 2]
    c = CostCounters()
    select_pivots(arr, 0, 2, SAMPLE5_TERTILES, c)
    assert arr == [3, 1, 2]
    assert (c.comparisons, c.swaps) == (0, 0)


def test_selector_and_config_validation():
    with pytest.raises(ValueError):
        SelectorSpec(SelectorMode.SAMPLE_K, 4)  # too small
    with pytest.raises(ValueError):
        SelectorSpec(SelectorMode.SAMPLE_K, 7)  # k + 1 not divisible by 3
    with pytest.raises(ValueError):
        SelectorSpec(SelectorMode.SAMPLE_K)  # k required
    with pytest.raises(ValueError):
        SelectorSpec(SelectorMode.MEDIAN_OF_K, 4)  # even
    with pytest.raises(ValueError):
        SelectorSpec(SelectorMode.DIRECT_ENDS, 5)  # takes no sample size
    SelectorSpec(SelectorMode.SAMPLE_K, 5)
    SelectorSpec(SelectorMode.SAMPLE_K, 8)
    SelectorSpec(SelectorMode.MEDIAN_OF_K, 1)
    assert SelectorSpec(SelectorMode.SAMPLE_K, 8).label() == "sample_k:8"
    with pytest.raises(ValueError):
        SortConfig(cutoff=0)
    with pytest.raises(ValueError):
        dual_pivot_quicksort([3, 1, 2], SortConfig(selector=SelectorSpec(SelectorMode.MEDIAN_OF_K, 3)))
    with pytest.raises(ValueError):
        classic_quicksort([3, 1, 2], SortConfig(selector=SAMPLE5_TERTILES))
    with pytest.raises(ValueError):
        clever_quicksort([3, 1, 2], SortConfig(selector=SAMPLE5_TERTILES))


def test_classic_average_matches_closed_form():
    # Mean comparisons over all permutations equals 2(n+1)H_n - 4n when
    # every partition step pays size - 1 comparisons (cutoff 1).
    config = SortConfig(cutoff=1)
    for n in range(2, 7):
        total = Fraction(0)
        count = 0
        for perm in itertools.permutations(range(1, n + 1)):
            arr = list(perm)
            counters = classic_quicksort(arr, config)
            assert arr == sorted(perm)
            assert counters.swaps >= 1
            total += counters.comparisons
            count += 1
        harmonic = sum(Fraction(1, k) for k in range(1, n + 1))
        assert total / count == 2 * (n + 1) * harmonic - 4 * n


def test_clever_beats_classic_on_average():
    classic_cfg = SortConfig(cutoff=1)
    clever_cfg = SortConfig(cutoff=3)
    classic_total = clever_total = 0
    for trial in range(30):
        base = random_permutation(300, 555 + trial)
        arr = list(base)
        classic_total += classic_quicksort(arr, classic_cfg).comparisons
        assert arr == sorted(base)
        arr = list(base)
        clever_total += clever_quicksort(arr, clever_cfg).comparisons
        assert arr == sorted(base)
    assert clever_total < classic_total


SORT_CONFIGS = [
    SortConfig(),
    SortConfig(cutoff=1),
    SortConfig(partitioner=PartitionerSpec(PartitionerId.SEDGEWICK), cutoff=4),
    SortConfig(partitioner=PartitionerSpec(PartitionerId.SIMPLE_LARGE), selector=SAMPLE5_TERTILES),
    SortConfig(
        partitioner=PartitionerSpec(PartitionerId.N_SAMPLED, sample_rule=SampleRule.TWO_THIRDS),
        cutoff=3,
    ),
    SortConfig(
        partitioner=PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.L_COUNTING,
            swap_scheme=SwapSchemeId.SWAP_B_MEYER,
        ),
        selector=SAMPLE5_TERTILES,
    ),
    SortConfig(
        partitioner=PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.COIN,
            swap_scheme=SwapSchemeId.SWAP_A_DIJKSTRA,
        ),
        seed=9,
    ),
    SortConfig(selector=SelectorSpec(SelectorMode.SAMPLE_K, 8), cutoff=10),
]


@pytest.mark.parametrize("config", SORT_CONFIGS, ids=lambda c: c.partitioner.label())
@given(data=st.lists(st.integers(-50, 50), max_size=60))
@settings(max_examples=40, deadline=None)
def test_dual_pivot_sorts_anything(config, data):
    arr = list(data)
    counters = dual_pivot_quicksort(arr, config)
    assert arr == sorted(data)
    assert counters.comparisons >= 0 and counters.swaps >= 0


def test_dual_pivot_sorts_strings():
    words = ["pear", "fig", "apple", "fig", "date", "kiwi", "apple", "plum"]
    arr = list(words)
    dual_pivot_quicksort(arr, SortConfig())
    assert arr == sorted(words)


def test_dual_pivot_is_deterministic_per_seed():
    base = random_permutation(64, 31337)
    config = SortConfig(
        partitioner=PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.COIN,
            swap_scheme=SwapSchemeId.SWAP_A_DIJKSTRA,
        ),
        seed=4,
    )
    runs = []
    for _ in range(2):
        arr = list(base)
        counters = dual_pivot_quicksort(arr, config)
        runs.append((counters.comparisons, counters.swaps))
    assert runs[0] == runs[1]


def test_cutoff_covers_whole_array():
    base = random_permutation(12, 8)
    arr = list(base)
    counters = dual_pivot_quicksort(arr, SortConfig(cutoff=12))
    assert arr == sorted(base)
    assert counters.swaps == 0  # pure insertion sort: shifts only

    reference = list(base)
    c = CostCounters()
    insertion_sort(reference, 0, 11, c)
    assert counters.comparisons == c.comparisons
