"""Counted sorting drivers: dual-pivot quicksort and single-pivot baselines.

The dual-pivot driver works on inclusive index ranges.  A range no larger
than the cutoff is finished by counted insertion sort; otherwise the
selector arranges pivot candidates, the driver performs the (counted)
pivot-ordering comparison, the configured partitioner splits the range,
and the three sub-ranges are processed smallest-index-first via an
explicit stack.  The single-pivot baselines use a one-directional
scan-exchange partition that compares every non-pivot element with the
pivot exactly once (``size - 1`` comparisons per step), which is the count
model all the classic closed forms assume.

Counting conventions beyond ``core``:

* insertion sort counts every key comparison, including the final failing
  guard comparison of each insertion; its element shifts are not swaps
  (the swap counter tracks partitioning rearrangement);
* pivot selection insertion-sorts the sample in a scratch buffer with
  counted comparisons, writes it back, and counts only the swaps that move
  the chosen pivots to the range ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import CostCounters, SplitMix64, compare_lt, swap_elements
from .partition import PartitionerId, PartitionerSpec, run_partitioner

__all__ = [
    "SelectorMode",
    "SelectorSpec",
    "DIRECT_ENDS",
    "SAMPLE5_TERTILES",
    "SortConfig",
    "insertion_sort",
    "select_pivots",
    "dual_pivot_quicksort",
    "classic_quicksort",
    "clever_quicksort",
]


class SelectorMode(Enum):
    DIRECT_ENDS = "direct_ends"
    SAMPLE5_TERTILES = "sample5_tertiles"
    SAMPLE_K = "sample_k"
    MEDIAN_OF_K = "median_of_k"


@dataclass(frozen=True)
class SelectorSpec:
    """Pivot-selection rule; ``k`` is the sample size where one applies."""

    mode: SelectorMode
    k: int | None = None

    def __post_init__(self):
        if self.mode is SelectorMode.SAMPLE_K:
            if self.k is None or self.k < 5 or (self.k + 1) % 3 != 0:
                raise ValueError("sample_k needs k >= 5 with k + 1 divisible by 3")
        elif self.mode is SelectorMode.MEDIAN_OF_K:
            if self.k is None or self.k < 1 or self.k % 2 == 0:
                raise ValueError("median_of_k needs odd k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.mode.value} does not take a sample size")

    def label(self) -> str:
        if self.k is not None:
            return f"{self.mode.value}:{self.k}"
        return self.mode.value


DIRECT_ENDS = SelectorSpec(SelectorMode.DIRECT_ENDS)
SAMPLE5_TERTILES = SelectorSpec(SelectorMode.SAMPLE5_TERTILES)


@dataclass(frozen=True)
class SortConfig:
    """Everything a sort run needs besides the data."""

    partitioner: PartitionerSpec = PartitionerSpec(PartitionerId.YAROSLAVSKIY)
    selector: SelectorSpec = DIRECT_ENDS
    cutoff: int = 2
    seed: int = 0

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")


def insertion_sort(arr, left: int, right: int, counters: CostCounters) -> None:
    """Counted insertion sort of ``arr[left..right]`` (inclusive)."""
    for i in range(left + 1, right + 1):
        v = arr[i]
        j = i
        while j > left and compare_lt(v, arr[j - 1], counters):
            arr[j] = arr[j - 1]
            j -= 1
        arr[j] = v


def _insertion_sort_scratch(vals: list, counters: CostCounters) -> None:
    """Counted insertion sort of a scratch sample (no swap accounting)."""
    for i in range(1, len(vals)):
        v = vals[i]
        j = i
        while j > 0 and compare_lt(v, vals[j - 1], counters):
            vals[j] = vals[j - 1]
            j -= 1
        vals[j] = v


def _evenly_spaced(left: int, right: int, count: int) -> list[int]:
    """``count`` distinct indices from left to right, both ends included."""
    if count == 1:
        return [(left + right) // 2]
    span = right - left
    return [left + (i * span) // (count - 1) for i in range(count)]


def _sorted_sample(arr, left: int, right: int, k: int, counters: CostCounters) -> list[int]:
    """Sort the k-element sample in place at its own positions; return them."""
    indices = _evenly_spaced(left, right, k)
    vals = [arr[ix] for ix in indices]
    _insertion_sort_scratch(vals, counters)
    for ix, v in zip(indices, vals):
        arr[ix] = v
    return indices


def select_pivots(arr, left: int, right: int, selector: SelectorSpec, counters: CostCounters) -> None:
    """Move the selector's pivot choices to the range boundary positions.

    Dual-pivot modes leave the lower tertile at ``left`` and the upper
    tertile at ``right``; the median mode leaves the median at ``left``.
    Ranges smaller than the sample fall back to the direct-ends rule.
    """
    size = right - left + 1
    if selector.mode is SelectorMode.DIRECT_ENDS:
        return
    k = 5 if selector.mode is SelectorMode.SAMPLE5_TERTILES else selector.k
    if size < k:
        return  # direct-ends fallback
    indices = _sorted_sample(arr, left, right, k, counters)
    if selector.mode is SelectorMode.MEDIAN_OF_K:
        swap_elements(arr, left, indices[(k - 1) // 2], counters)
        return
    lo_rank = (k + 1) // 3 - 1  # lower tertile, 0-based rank in the sample
    hi_rank = 2 * (k + 1) // 3 - 1
    i1 = indices[lo_rank]
    i2 = indices[hi_rank]
    swap_elements(arr, left, i1, counters)
    if i2 == left:  # the first swap moved the upper tertile (defensive)
        i2 = i1
    swap_elements(arr, right, i2, counters)


def dual_pivot_quicksort(arr, config: SortConfig, counters: CostCounters | None = None) -> CostCounters:
    """Sort ``arr`` in place; return the comparison/swap tallies.

    Iterative driver: ranges are processed smallest-first via an explicit
    stack, so the coin stream consumed by randomized strategies is
    reproducible for a given (input, config, seed).
    """
    if counters is None:
        counters = CostCounters()
    if config.selector.mode is SelectorMode.MEDIAN_OF_K:
        raise ValueError("median_of_k selects a single pivot; use classic_quicksort")
    rng = SplitMix64(config.seed)
    spec = config.partitioner
    stack = [(0, len(arr) - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo + 1 <= config.cutoff:
            insertion_sort(arr, lo, hi, counters)
            continue
        select_pivots(arr, lo, hi, config.selector, counters)
        if compare_lt(arr[hi], arr[lo], counters):  # pivot-ordering comparison
            swap_elements(arr, lo, hi, counters)
        p = arr[lo]
        q = arr[hi]
        pos_p, pos_q = run_partitioner(spec, arr, p, q, lo, hi, counters, rng=rng)
        stack.append((pos_q + 1, hi))
        stack.append((pos_p + 1, pos_q - 1))
        stack.append((lo, pos_p - 1))
    return counters


def _single_pivot_sort(arr, config: SortConfig, counters: CostCounters) -> CostCounters:
    stack = [(0, len(arr) - 1)]
    while stack:
        lo, hi = stack.pop()
        if hi - lo + 1 <= config.cutoff:
            insertion_sort(arr, lo, hi, counters)
            continue
        select_pivots(arr, lo, hi, config.selector, counters)
        pivot = arr[lo]
        border = lo
        for k in range(lo + 1, hi + 1):
            if compare_lt(arr[k], pivot, counters):
                border += 1
                swap_elements(arr, border, k, counters)
        swap_elements(arr, lo, border, counters)
        stack.append((border + 1, hi))
        stack.append((lo, border - 1))
    return counters


def classic_quicksort(arr, config: SortConfig, counters: CostCounters | None = None) -> CostCounters:
    """Single-pivot quicksort, first element as pivot, ``size - 1``
    comparisons per partition step."""
    if counters is None:
        counters = CostCounters()
    if config.selector.mode is not SelectorMode.DIRECT_ENDS:
        raise ValueError("classic_quicksort uses the first element; pass direct_ends")
    return _single_pivot_sort(arr, config, counters)


def clever_quicksort(arr, config: SortConfig, counters: CostCounters | None = None) -> CostCounters:
    """Single-pivot quicksort with a median-of-k pivot (default k = 3)."""
    if counters is None:
        counters = CostCounters()
    selector = config.selector
    if selector.mode is SelectorMode.DIRECT_ENDS:
        selector = SelectorSpec(SelectorMode.MEDIAN_OF_K, 3)
    elif selector.mode is not SelectorMode.MEDIAN_OF_K:
        raise ValueError("clever_quicksort needs a median_of_k selector")
    cfg = SortConfig(config.partitioner, selector, config.cutoff, config.seed)
    return _single_pivot_sort(arr, cfg, counters)
