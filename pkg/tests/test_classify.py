"""First-pivot strategies and element classification."""

from __future__ import annotations

import math

import pytest

from dpqlab.classify import (
    ORACLE_STRATEGIES,
    RANDOMIZED_STRATEGIES,
    ClassifierState,
    ElementClass,
    PivotChoice,
    SampleRule,
    StrategyId,
    act_of_run,
    choose_first_pivot,
    classify_element,
    classify_sequence,
    make_classifier_state,
    sample_budget_for,
)
from dpqlab.core import CostCounters, SplitMix64

P, Q = PivotChoice.P_FIRST, PivotChoice.Q_FIRST
S, M, L = ElementClass.SMALL, ElementClass.MEDIUM, ElementClass.LARGE


def choices_for(strategy, classes, **state_kwargs):
    """Feed a fixed class sequence through a strategy; collect its choices."""
    state = ClassifierState(**state_kwargs)
    out = []
    for cls in classes:
        out.append(choose_first_pivot(strategy, state))
        state.record(cls)
    return out


def test_constant_strategies():
    assert choices_for(StrategyId.SMALLER_FIRST, [S, M, L]) == [P, P, P]
    assert choices_for(StrategyId.LARGER_FIRST, [S, M, L]) == [Q, Q, Q]


def test_alternate_starts_with_smaller_pivot():
    assert choices_for(StrategyId.ALTERNATE, [M] * 5) == [P, Q, P, Q, P]


def test_coin_strategy_follows_its_stream():
    rng_choice = SplitMix64(77)
    expected = [P if SplitMix64(77).coin() else Q]
    state = ClassifierState(coin=rng_choice)
    got = [choose_first_pivot(StrategyId.COIN, state) for _ in range(200)]
    reference = SplitMix64(77)
    expected = [P if reference.coin() else Q for _ in range(200)]
    assert got == expected
    assert P in got and Q in got


def test_scanning_abstractions_use_true_totals():
    # s = 0 forces p-first under the direct rule and q-first under the
    # mirrored one (and vice versa for l = 0); no coin flip is consumed
    # only in the empty case.
    state = ClassifierState(oracle_small=0, oracle_large=4, coin=SplitMix64(1))
    assert choose_first_pivot(StrategyId.S_ABSTRACT, state) is P
    assert choose_first_pivot(StrategyId.S_PRIME_ABSTRACT, state) is Q
    state = ClassifierState(oracle_small=4, oracle_large=0, coin=SplitMix64(1))
    assert choose_first_pivot(StrategyId.S_ABSTRACT, state) is Q
    assert choose_first_pivot(StrategyId.S_PRIME_ABSTRACT, state) is P
    # All-medium runs never flip at all.
    empty = ClassifierState(oracle_small=0, oracle_large=0)
    assert choose_first_pivot(StrategyId.S_ABSTRACT, empty) is P
    assert choose_first_pivot(StrategyId.S_PRIME_ABSTRACT, empty) is P


def test_scanning_abstraction_frequencies():
    # With s=1, l=3 the direct rule tries q first 1/4 of the time and the
    # mirrored rule 3/4 of the time.
    trials = 40_000
    for strategy, num in ((StrategyId.S_ABSTRACT, 1), (StrategyId.S_PRIME_ABSTRACT, 3)):
        state = ClassifierState(oracle_small=1, oracle_large=3, coin=SplitMix64(5))
        q_first = sum(choose_first_pivot(strategy, state) is Q for _ in range(trials))
        assert abs(q_first / trials - num / 4) < 0.01


def test_sampling_strategy_locks_majority_after_budget():
    # Budget 2: p-first while sampling, then lock.  Two larges seen -> lock
    # q-first regardless of later classes.
    got = choices_for(StrategyId.N_SAMPLING, [L, L, S, S, S], sample_budget=2)
    assert got == [P, P, Q, Q, Q]
    # Tie at the lock point keeps the smaller pivot first.
    got = choices_for(StrategyId.N_SAMPLING, [S, L, M, M], sample_budget=2)
    assert got == [P, P, P, P]


def test_counting_strategy_follows_running_majority():
    # Ties (including the first element) try the larger pivot.
    got = choices_for(StrategyId.L_COUNTING, [S, S, L, L, M])
    assert got == [Q, P, P, P, Q]


def test_oracle_strategy_follows_remaining_majority():
    # s=2, l=1: smalls lead, then the tie and the final element go to q.
    got = choices_for(
        StrategyId.O_ORACLE, [S, S, L], oracle_small=2, oracle_large=1
    )
    assert got == [P, Q, Q]


def test_ideal_strategy_is_fixed_by_totals():
    assert choices_for(StrategyId.N_IDEAL, [L, L], oracle_small=3, oracle_large=2) == [P, P]
    assert choices_for(StrategyId.N_IDEAL, [S, S], oracle_small=2, oracle_large=2) == [Q, Q]


def test_missing_state_raises():
    with pytest.raises(ValueError):
        choose_first_pivot(StrategyId.COIN, ClassifierState())
    with pytest.raises(ValueError):
        choose_first_pivot(StrategyId.O_ORACLE, ClassifierState())
    with pytest.raises(ValueError):
        choose_first_pivot(StrategyId.N_SAMPLING, ClassifierState())
    with pytest.raises(ValueError):
        classify_sequence([3], 1, 5, StrategyId.COIN)  # no rng supplied


def test_sample_budget_rules():
    assert sample_budget_for(SampleRule.HUNDREDTH, 50) == 7
    assert sample_budget_for(SampleRule.HUNDREDTH, 700) == 7
    assert sample_budget_for(SampleRule.HUNDREDTH, 701) == 7
    assert sample_budget_for(SampleRule.HUNDREDTH, 800) == 8
    assert sample_budget_for(SampleRule.HUNDREDTH, 12_345) == 123
    assert sample_budget_for(SampleRule.TWO_THIRDS, 8) == 4
    assert sample_budget_for(SampleRule.TWO_THIRDS, 1000) == 100
    assert sample_budget_for(SampleRule.TWO_THIRDS, 999) == math.ceil(999 ** (2 / 3))
    with pytest.raises(ValueError):
        sample_budget_for(SampleRule.HUNDREDTH, -1)


def test_classify_element_costs():
    c = CostCounters()
    assert classify_element(1, 3, 7, P, c) is S
    assert c.comparisons == 1  # small found via p: one comparison
    c.reset()
    assert classify_element(9, 3, 7, Q, c) is L
    assert c.comparisons == 1  # large found via q: one comparison
    c.reset()
    assert classify_element(9, 3, 7, P, c) is L
    assert c.comparisons == 2  # wrong pivot first costs the extra comparison
    c.reset()
    assert classify_element(1, 3, 7, Q, c) is S
    assert c.comparisons == 2
    c.reset()
    assert classify_element(5, 3, 7, P, c) is M
    assert classify_element(5, 3, 7, Q, c) is M
    assert c.comparisons == 4  # mediums always cost two
    assert c.swaps == 0
    with pytest.raises(ValueError):
        classify_element(1, 7, 3, P, c)


def test_act_of_run_counts_wrong_first_meetings():
    assert act_of_run([S, L, M, S, L], [Q, P, P, P, Q]) == 2
    assert act_of_run([], []) == 0
    with pytest.raises(ValueError):
        act_of_run([S], [])


def test_classify_sequence_cost_identity():
    # Total comparisons = (#elements) + (#mediums) + ACT, for every strategy.
    keys = [4, 9, 1, 6, 12, 2, 8, 11, 3]
    p, q = 5, 10
    for strategy in StrategyId:
        rng = SplitMix64(17) if strategy in RANDOMIZED_STRATEGIES else None
        classes, counters, act = classify_sequence(keys, p, q, strategy, rng=rng)
        mediums = sum(cls is M for cls in classes)
        assert counters.comparisons == len(keys) + mediums + act
        assert counters.swaps == 0
        assert classes == [S if k < p else L if k > q else M for k in keys]


def test_make_classifier_state_fills_what_each_strategy_needs():
    keys = [1, 2, 6, 9, 9]
    state = make_classifier_state(StrategyId.O_ORACLE, keys, 3, 7)
    assert (state.oracle_small, state.oracle_large) == (2, 2)
    state = make_classifier_state(StrategyId.SMALLER_FIRST, keys, 3, 7)
    assert state.oracle_small is None and state.coin is None
    rng = SplitMix64(0)
    state = make_classifier_state(StrategyId.COIN, keys, 3, 7, rng=rng)
    assert state.coin is rng
    state = make_classifier_state(
        StrategyId.N_SAMPLING, list(range(100)), -1, 1000, sample_rule=SampleRule.TWO_THIRDS
    )
    assert state.sample_budget == math.ceil(102 ** (2 / 3))


def test_strategy_sets():
    assert StrategyId.COIN in RANDOMIZED_STRATEGIES
    assert StrategyId.N_IDEAL in ORACLE_STRATEGIES
    assert StrategyId.SMALLER_FIRST not in RANDOMIZED_STRATEGIES | ORACLE_STRATEGIES
