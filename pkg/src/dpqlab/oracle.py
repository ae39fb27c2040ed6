"""Brute-force ground truth: exact cost averages by exhausting small inputs.

Everything here computes an average cost as an exact :class:`~fractions.Fraction`
by enumerating *all* inputs of a given size.  Nothing in this module reuses
the closed forms or recurrences of the analysis layer, so agreement between
the two is independent evidence that both are right.

Two enumeration granularities are used:

* **Pivot pair x class sequence** for single-partition costs.  A partition
  step's comparisons and swaps depend on the input only through the ordered
  pivot values and the class (small / medium / large) of each remaining
  element, so it suffices to visit every ordered pivot pair and, for each,
  every arrangement of the class multiset.  Each arrangement stands for
  ``s! * m! * l!`` equally likely value permutations, so the arrangements of
  one pivot pair are themselves equally likely.
* **Full permutations of 1..n** (n! cases) for whole-sort costs and pivot
  selection frequencies, where the relative order *inside* the class zones
  matters as well.

The driver convention throughout: partition comparisons include the one
comparison that orders the two pivot candidates, while partition swaps count
only the swaps of the partition procedure itself (pivot placement included,
but not the driver's candidate-ordering swap).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import replace
from fractions import Fraction

from .classify import (
    ElementClass,
    SampleRule,
    StrategyId,
    RANDOMIZED_STRATEGIES,
    classify_sequence,
)
from .core import CostCounters
from .partition import PartitionerId, PartitionerSpec, run_partitioner
from .sort import SelectorSpec, SortConfig, classic_quicksort, dual_pivot_quicksort, select_pivots

__all__ = [
    "PERMUTATION_LIMIT",
    "MISPLACED_GROUPS",
    "pivot_cases",
    "expected_extra_comparisons",
    "strategy_partition_comparisons",
    "strategy_act_table",
    "strategy_act_total",
    "partitioner_cost_means",
    "sort_cost_means",
    "classic_sort_cost_means",
    "misplaced_group_means",
    "pivot_pair_frequencies",
    "zero_crossings_mean",
]

#: Default cap on exhaustive input size; n! and 3^n growth get out of hand fast.
PERMUTATION_LIMIT = 9

_SMALL, _MEDIUM, _LARGE = 0, 1, 2
_CLASS_OF_CODE = {
    _SMALL: ElementClass.SMALL,
    _MEDIUM: ElementClass.MEDIUM,
    _LARGE: ElementClass.LARGE,
}


def _guard(n: int, limit: int, what: str) -> None:
    if n < 2:
        raise ValueError(f"{what} needs n >= 2, got {n}")
    if n > limit:
        raise ValueError(
            f"{what} enumerates exhaustively; n={n} exceeds the limit {limit} "
            "(pass limit=... explicitly to go higher)"
        )


def pivot_cases(n: int):
    """Yield ``(p, q, s, m, l)`` for every ordered pivot pair of ``1..n``.

    ``s``, ``m`` and ``l`` are the counts of elements below ``p``, between
    the pivots, and above ``q``.  All C(n, 2) cases are equally likely once
    the driver has ordered the two candidate ends.
    """
    for p in range(1, n):
        for q in range(p + 1, n + 1):
            yield p, q, p - 1, q - p - 1, n - q


def _class_sequences(s: int, m: int, lg: int) -> list[tuple[int, ...]]:
    """All distinct arrangements of the class multiset, deterministically ordered."""
    base = (_SMALL,) * s + (_MEDIUM,) * m + (_LARGE,) * lg
    return sorted(set(itertools.permutations(base)))


def _keys_from_classes(p: int, q: int, codes: tuple[int, ...]) -> list[int]:
    """A concrete key sequence realizing ``codes`` against pivots ``(p, q)``."""
    next_value = {_SMALL: 1, _MEDIUM: p + 1, _LARGE: q + 1}
    keys = []
    for code in codes:
        keys.append(next_value[code])
        next_value[code] += 1
    return keys


def expected_extra_comparisons(strategy: StrategyId, s: int, lg: int) -> Fraction:
    """Coin-averaged count of elements classified via the unhelpful pivot first.

    Only the coin-flipping strategies admit this shortcut: their choice
    probabilities stay constant through a partition step, so the expectation
    does not depend on the order elements are examined in.
    """
    if strategy is StrategyId.COIN:
        return Fraction(s + lg, 2)
    if s + lg == 0:
        return Fraction(0)
    if strategy is StrategyId.S_ABSTRACT:
        return Fraction(s * s + lg * lg, s + lg)
    if strategy is StrategyId.S_PRIME_ABSTRACT:
        return Fraction(2 * s * lg, s + lg)
    raise ValueError(f"strategy {strategy.value} has no closed coin average")


def _strategy_cell_act(
    n: int,
    strategy: StrategyId,
    p: int,
    q: int,
    s: int,
    m: int,
    lg: int,
    sample_rule: SampleRule,
) -> Fraction:
    """Mean count of unhelpfully-classified elements for one pivot pair."""
    if strategy in RANDOMIZED_STRATEGIES:
        return expected_extra_comparisons(strategy, s, lg)
    sequences = _class_sequences(s, m, lg)
    total = 0
    for codes in sequences:
        keys = _keys_from_classes(p, q, codes)
        _, _, act = classify_sequence(keys, p, q, strategy, sample_rule=sample_rule)
        total += act
    return Fraction(total, len(sequences))


def strategy_act_table(
    n: int,
    strategy: StrategyId,
    *,
    sample_rule: SampleRule = SampleRule.HUNDREDTH,
    limit: int = PERMUTATION_LIMIT,
) -> dict[tuple[int, int], Fraction]:
    """Exact mean of the extra-comparison count, per (s, l) cell, at size n."""
    _guard(n, limit, "strategy_act_table")
    table: dict[tuple[int, int], Fraction] = {}
    for p, q, s, m, lg in pivot_cases(n):
        table[(s, lg)] = _strategy_cell_act(n, strategy, p, q, s, m, lg, sample_rule)
    return table


def strategy_act_total(
    n: int,
    strategy: StrategyId,
    *,
    sample_rule: SampleRule = SampleRule.HUNDREDTH,
    limit: int = PERMUTATION_LIMIT,
) -> Fraction:
    """Exact mean extra-comparison count of one partition step at size n."""
    table = strategy_act_table(n, strategy, sample_rule=sample_rule, limit=limit)
    return sum(table.values(), Fraction(0)) / math.comb(n, 2)


def strategy_partition_comparisons(
    n: int,
    strategy: StrategyId,
    *,
    sample_rule: SampleRule = SampleRule.HUNDREDTH,
    limit: int = PERMUTATION_LIMIT,
) -> Fraction:
    """Exact mean comparison count of one partition step at size n.

    Counts the driver's pivot-ordering comparison, one comparison per
    remaining element, a second one per medium element, and a second one
    per element whose first comparison went against the unhelpful pivot.
    """
    _guard(n, limit, "strategy_partition_comparisons")
    total = Fraction(0)
    for p, q, s, m, lg in pivot_cases(n):
        act = _strategy_cell_act(n, strategy, p, q, s, m, lg, sample_rule)
        total += 1 + (n - 2) + m + act
    return total / math.comb(n, 2)


def partitioner_cost_means(
    n: int,
    spec: PartitionerSpec,
    *,
    limit: int = PERMUTATION_LIMIT,
) -> tuple[Fraction, Fraction]:
    """Exact (comparisons, swaps) means of one partition procedure run at size n.

    Swap counts never depend on which pivot a comparison tried first, so for
    coin-flipping composed strategies the swaps are measured by rerunning the
    scheme with a fixed deterministic strategy, while the comparisons use the
    exact coin average.
    """
    _guard(n, limit, "partitioner_cost_means")
    randomized = (
        spec.kind is PartitionerId.COMPOSED and spec.strategy in RANDOMIZED_STRATEGIES
    )
    run_spec = replace(spec, strategy=StrategyId.SMALLER_FIRST) if randomized else spec
    comp_total = Fraction(0)
    swap_total = Fraction(0)
    for p, q, s, m, lg in pivot_cases(n):
        sequences = _class_sequences(s, m, lg)
        cell_comps = 0
        cell_swaps = 0
        for codes in sequences:
            arr = [p] + _keys_from_classes(p, q, codes) + [q]
            counters = CostCounters()
            run_partitioner(run_spec, arr, p, q, 0, n - 1, counters)
            cell_comps += counters.comparisons
            cell_swaps += counters.swaps
        if randomized:
            base = (n - 2) + m + expected_extra_comparisons(spec.strategy, s, lg)
            comp_total += 1 + base
        else:
            comp_total += 1 + Fraction(cell_comps, len(sequences))
        swap_total += Fraction(cell_swaps, len(sequences))
    pairs = math.comb(n, 2)
    return comp_total / pairs, swap_total / pairs


def sort_cost_means(
    n: int,
    config: SortConfig,
    *,
    limit: int = 8,
) -> tuple[Fraction, Fraction]:
    """Exact (comparisons, swaps) means of the dual-pivot sort over all n! inputs."""
    _guard(n, limit, "sort_cost_means")
    if (
        config.partitioner.kind is PartitionerId.COMPOSED
        and config.partitioner.strategy in RANDOMIZED_STRATEGIES
    ):
        raise ValueError(
            "whole-sort enumeration cannot average the coin stream exactly; "
            "use a deterministic strategy"
        )
    comp_total = 0
    swap_total = 0
    count = math.factorial(n)
    for perm in itertools.permutations(range(1, n + 1)):
        arr = list(perm)
        counters = dual_pivot_quicksort(arr, config)
        comp_total += counters.comparisons
        swap_total += counters.swaps
    return Fraction(comp_total, count), Fraction(swap_total, count)


def classic_sort_cost_means(
    n: int,
    *,
    cutoff: int = 1,
    limit: int = 8,
) -> tuple[Fraction, Fraction]:
    """Exact (comparisons, swaps) means of the single-pivot sort over all n! inputs."""
    _guard(n, limit, "classic_sort_cost_means")
    config = SortConfig(cutoff=cutoff)
    comp_total = 0
    swap_total = 0
    count = math.factorial(n)
    for perm in itertools.permutations(range(1, n + 1)):
        arr = list(perm)
        counters = classic_quicksort(arr, config)
        comp_total += counters.comparisons
        swap_total += counters.swaps
    return Fraction(comp_total, count), Fraction(swap_total, count)


#: The six ways an element can sit outside its destination zone.
MISPLACED_GROUPS = (
    "small_in_medium_zone",
    "small_in_large_zone",
    "medium_in_small_zone",
    "medium_in_large_zone",
    "large_in_small_zone",
    "large_in_medium_zone",
)


def misplaced_group_means(
    n: int,
    *,
    limit: int = PERMUTATION_LIMIT,
) -> dict[str, Fraction]:
    """Exact mean count of each misplaced-element group at size n.

    With the pivots ordered at the ends, the n - 2 slots between them split
    into a small, a medium and a large destination zone.  Each group counts
    the elements of one class sitting in one of the two foreign zones.
    """
    _guard(n, limit, "misplaced_group_means")
    zone_names = {_SMALL: "small", _MEDIUM: "medium", _LARGE: "large"}
    totals = {name: Fraction(0) for name in MISPLACED_GROUPS}
    for _, _, s, m, lg in pivot_cases(n):
        sequences = _class_sequences(s, m, lg)
        cell = {name: 0 for name in MISPLACED_GROUPS}
        for codes in sequences:
            for slot, code in enumerate(codes):
                zone = _SMALL if slot < s else (_MEDIUM if slot < s + m else _LARGE)
                if code != zone:
                    cell[f"{zone_names[code]}_in_{zone_names[zone]}_zone"] += 1
        for name in MISPLACED_GROUPS:
            totals[name] += Fraction(cell[name], len(sequences))
    pairs = math.comb(n, 2)
    return {name: value / pairs for name, value in totals.items()}


def pivot_pair_frequencies(
    n: int,
    selector: SelectorSpec,
    *,
    limit: int = 8,
) -> dict[tuple[int, int], Fraction]:
    """Exact distribution of the ordered pivot values a selector picks at size n."""
    _guard(n, limit, "pivot_pair_frequencies")
    counts: dict[tuple[int, int], int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        arr = list(perm)
        counters = CostCounters()
        select_pivots(arr, 0, n - 1, selector, counters)
        p, q = arr[0], arr[n - 1]
        if q < p:
            p, q = q, p
        counts[(p, q)] = counts.get((p, q), 0) + 1
    total = math.factorial(n)
    return {pair: Fraction(c, total) for pair, c in sorted(counts.items())}


def zero_crossings_mean(n: int, *, limit: int = 12) -> Fraction:
    """Exact mean number of balanced even-length suffixes of a two-class run.

    Model: draw s uniformly from 1..n/2, scatter s smalls among n - s larges
    uniformly, and count the suffixes of even length holding as many smalls
    as larges.  Requires even n.
    """
    _guard(n, limit, "zero_crossings_mean")
    if n % 2 != 0:
        raise ValueError("the balanced-suffix statistic is defined for even n")
    total = Fraction(0)
    for s in range(1, n // 2 + 1):
        crossings = 0
        for small_positions in itertools.combinations(range(n), s):
            marks = set(small_positions)
            balance = 0
            for pos in range(n - 1, -1, -1):
                balance += 1 if pos in marks else -1
                if balance == 0:
                    crossings += 1
        total += Fraction(crossings, math.comb(n, s))
    return Fraction(2, n) * total
