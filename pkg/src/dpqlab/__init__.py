"""dpqlab: a dual-pivot quicksort laboratory.

Counted sorting algorithms (``core``, ``classify``, ``partition``,
``sort``), an exact average-case analysis engine (``analysis``), a
brute-force enumeration oracle (``oracle``), a Monte-Carlo benchmark
harness (``bench``) with compiled batch kernels (``_kernels``), and a
CLI (``cli``).
"""

from .core import (
    CostCounters,
    SplitMix64,
    compare_lt,
    swap_elements,
    random_permutation,
    verify_sorted_permutation,
    GENERATOR_ID,
)
from .classify import (
    PivotChoice,
    ElementClass,
    StrategyId,
    SampleRule,
    ClassifierState,
    choose_first_pivot,
    classify_element,
    classify_sequence,
    act_of_run,
)
from .partition import (
    PartitionResult,
    SwapSchemeId,
    PartitionerId,
    PartitionerSpec,
    yaroslavskiy_partition,
    sedgewick_partition,
    sedgewick_modified_partition,
    simple_partition_small,
    simple_partition_large,
    strategy_n_partition,
    dnf_partition,
)
from .sort import (
    SelectorMode,
    SelectorSpec,
    SortConfig,
    insertion_sort,
    select_pivots,
    dual_pivot_quicksort,
    classic_quicksort,
    clever_quicksort,
)
from .bench import (
    BenchRecord,
    run_bench,
    prepare_string_keys,
)
from .analysis import (
    SWITCH_SCHEME,
    harmonic,
    exact_partition_cost,
    comparison_cost_table,
    act_oracle_total,
    act_counting_total,
    swap_partition_cost,
    swap_cost_table,
    misplaced_group_mean,
    misplaced_total_mean,
    misplaced_swap_lower_bound,
    solve_uniform_recurrence,
    solve_sample5_recurrence,
    expected_sample_sort_comparisons,
    leading_coefficient_estimate,
    sample5_partition_cost_yaroslavskiy,
    sample5_partition_cost_ideal,
    sample5_cost_table,
    sample_k_partition_cost,
    median_classic_coefficient,
    tertile_dual_coefficient,
    sample_table_entries,
    expected_zero_crossings,
)

__version__ = "0.1.0"
