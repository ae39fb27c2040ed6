"""Shared builders for the test suite.

The correctness sweeps and the engine-parity tests run the same
partitioner/selector/cutoff matrix; it is defined once here.
"""

from __future__ import annotations

from dpqlab.classify import SampleRule, StrategyId
from dpqlab.partition import PartitionerId, PartitionerSpec, SwapSchemeId
from dpqlab.sort import DIRECT_ENDS, SAMPLE5_TERTILES, SortConfig

NAMED_PARTITIONERS = (
    PartitionerSpec(PartitionerId.YAROSLAVSKIY),
    PartitionerSpec(PartitionerId.SEDGEWICK),
    PartitionerSpec(PartitionerId.SEDGEWICK_MODIFIED),
    PartitionerSpec(PartitionerId.SIMPLE_SMALL),
    PartitionerSpec(PartitionerId.SIMPLE_LARGE),
    PartitionerSpec(PartitionerId.N_SAMPLED, sample_rule=SampleRule.HUNDREDTH),
    PartitionerSpec(PartitionerId.N_SAMPLED, sample_rule=SampleRule.TWO_THIRDS),
)


def composed_partitioners() -> list[PartitionerSpec]:
    """Every runnable strategy/swap-scheme composition (21 in total)."""
    specs = []
    for strategy in StrategyId:
        for scheme in (SwapSchemeId.SWAP_A_DIJKSTRA, SwapSchemeId.SWAP_B_MEYER):
            specs.append(
                PartitionerSpec(PartitionerId.COMPOSED, strategy=strategy, swap_scheme=scheme)
            )
    specs.append(
        PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.SMALLER_FIRST,
            swap_scheme=SwapSchemeId.SWAP_C_CHEN,
        )
    )
    return specs


def all_partitioners() -> list[PartitionerSpec]:
    return list(NAMED_PARTITIONERS) + composed_partitioners()


def sweep_config_matrix() -> list[SortConfig]:
    """The full correctness-sweep matrix: 28 partitioners x 2 selectors x 2 cutoffs."""
    configs = []
    for spec in all_partitioners():
        for selector in (DIRECT_ENDS, SAMPLE5_TERTILES):
            for cutoff in (2, 16):
                configs.append(
                    SortConfig(partitioner=spec, selector=selector, cutoff=cutoff)
                )
    return configs
