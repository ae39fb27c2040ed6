"""Classification strategies: which pivot does each element meet first?

Partitioning with two pivots p < q puts every other element into one of
three classes: SMALL (< p), MEDIUM (between), LARGE (> q).  Deciding a
class takes one comparison when the element is compared against the
"right" pivot first (small against p, large against q) and two otherwise;
mediums always need two.  A *strategy* is the rule that picks, before each
classification, which pivot to try first.  The total partition cost is then
(#elements) + (#mediums) + (#elements compared against the wrong pivot
first); the last term is the additional-comparison tally (ACT) that
separates good strategies from bad ones.

Strategies provided:

* ``SMALLER_FIRST`` / ``LARGER_FIRST`` — constant choice.
* ``ALTERNATE`` — strict alternation, smaller pivot first on the first
  element.
* ``COIN`` — fair counted-out coin per element.
* ``S_ABSTRACT`` — tries the larger pivot first with probability
  s/(s+l), where s and l are the true small/large totals (oracle
  knowledge); models the scanning behavior of the two-pointer hole
  partitioner.
* ``S_PRIME_ABSTRACT`` — the mirrored rule (probability l/(s+l)).
* ``N_SAMPLING`` — smaller pivot first for a sampling prefix, then locks
  the majority guess for the remainder.
* ``L_COUNTING`` — follows the running majority of classes seen so far.
* ``O_ORACLE`` — follows the true majority of classes still to come
  (oracle knowledge).
* ``N_IDEAL`` — fixed choice from the true totals: smaller pivot first
  iff s > l.

Oracle-informed strategies (``S_ABSTRACT``, ``S_PRIME_ABSTRACT``,
``O_ORACLE``, ``N_IDEAL``) need the true totals in
``ClassifierState.oracle_small``/``oracle_large``; ``classify_sequence``
fills them with an uncounted pre-scan.  Randomized strategies draw from a
``SplitMix64`` stream so runs are reproducible and both engines can share
one coin sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .core import CostCounters, SplitMix64, compare_lt

__all__ = [
    "PivotChoice",
    "ElementClass",
    "StrategyId",
    "SampleRule",
    "ClassifierState",
    "sample_budget_for",
    "choose_first_pivot",
    "classify_element",
    "classify_sequence",
    "act_of_run",
    "RANDOMIZED_STRATEGIES",
    "ORACLE_STRATEGIES",
]


class PivotChoice(Enum):
    """Which pivot an element is compared against first."""

    P_FIRST = "p_first"
    Q_FIRST = "q_first"


class ElementClass(Enum):
    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"


class StrategyId(Enum):
    SMALLER_FIRST = "smaller_first"
    LARGER_FIRST = "larger_first"
    ALTERNATE = "alternate"
    COIN = "coin"
    S_ABSTRACT = "s_abstract"
    S_PRIME_ABSTRACT = "s_prime_abstract"
    N_SAMPLING = "n_sampling"
    L_COUNTING = "l_counting"
    O_ORACLE = "o_oracle"
    N_IDEAL = "n_ideal"


#: Strategies that consume coin flips.
RANDOMIZED_STRATEGIES = frozenset(
    {StrategyId.COIN, StrategyId.S_ABSTRACT, StrategyId.S_PRIME_ABSTRACT}
)

#: Strategies that need the true small/large totals up front.
ORACLE_STRATEGIES = frozenset(
    {
        StrategyId.S_ABSTRACT,
        StrategyId.S_PRIME_ABSTRACT,
        StrategyId.O_ORACLE,
        StrategyId.N_IDEAL,
    }
)


class SampleRule(Enum):
    """How large the sampling prefix of ``N_SAMPLING`` is, given subarray size n."""

    HUNDREDTH = "hundredth"  # max(n // 100, 7): the practical default
    TWO_THIRDS = "twothirds"  # ceil(n ** (2/3)): the theoretical schedule


def sample_budget_for(rule: SampleRule, n: int) -> int:
    """Sampling-prefix length for a subarray of n keys (pivots included)."""
    if n < 0:
        raise ValueError("subarray size must be nonnegative")
    if rule is SampleRule.HUNDREDTH:
        return max(n // 100, 7)
    if rule is SampleRule.TWO_THIRDS:
        return math.ceil(n ** (2.0 / 3.0))
    raise ValueError(f"unknown sample rule: {rule!r}")


@dataclass
class ClassifierState:
    """Mutable per-partition state a strategy may consult.

    ``seen_*`` and ``level`` describe the classifications made so far.
    ``oracle_small``/``oracle_large`` hold the true totals and are only set
    for oracle-informed strategies.  ``sample_budget``/``locked_choice``
    belong to ``N_SAMPLING``; ``coin`` is the randomness stream for the
    randomized strategies.
    """

    seen_small: int = 0
    seen_medium: int = 0
    seen_large: int = 0
    level: int = 0
    oracle_small: int | None = None
    oracle_large: int | None = None
    sample_budget: int | None = None
    locked_choice: PivotChoice | None = None
    coin: SplitMix64 | None = None

    def record(self, cls: ElementClass) -> None:
        if cls is ElementClass.SMALL:
            self.seen_small += 1
        elif cls is ElementClass.MEDIUM:
            self.seen_medium += 1
        else:
            self.seen_large += 1
        self.level += 1


def _require_oracle(strategy: StrategyId, state: ClassifierState) -> tuple[int, int]:
    if state.oracle_small is None or state.oracle_large is None:
        raise ValueError(
            f"strategy {strategy.value} needs oracle small/large totals in the classifier state"
        )
    return state.oracle_small, state.oracle_large


def _require_coin(strategy: StrategyId, state: ClassifierState) -> SplitMix64:
    if state.coin is None:
        raise ValueError(f"strategy {strategy.value} needs a coin stream in the classifier state")
    return state.coin


def choose_first_pivot(strategy: StrategyId, state: ClassifierState) -> PivotChoice:
    """Pick the pivot to compare the next element against first."""
    if strategy is StrategyId.SMALLER_FIRST:
        return PivotChoice.P_FIRST
    if strategy is StrategyId.LARGER_FIRST:
        return PivotChoice.Q_FIRST
    if strategy is StrategyId.ALTERNATE:
        # Starts with the smaller pivot on the very first element.
        return PivotChoice.P_FIRST if state.level % 2 == 0 else PivotChoice.Q_FIRST
    if strategy is StrategyId.COIN:
        return PivotChoice.P_FIRST if _require_coin(strategy, state).coin() else PivotChoice.Q_FIRST
    if strategy is StrategyId.S_ABSTRACT:
        s, lg = _require_oracle(strategy, state)
        if s + lg == 0:
            return PivotChoice.P_FIRST  # probability 0 of trying q first
        coin = _require_coin(strategy, state)
        return PivotChoice.Q_FIRST if coin.chance(s, s + lg) else PivotChoice.P_FIRST
    if strategy is StrategyId.S_PRIME_ABSTRACT:
        s, lg = _require_oracle(strategy, state)
        if s + lg == 0:
            return PivotChoice.P_FIRST
        coin = _require_coin(strategy, state)
        return PivotChoice.Q_FIRST if coin.chance(lg, s + lg) else PivotChoice.P_FIRST
    if strategy is StrategyId.N_SAMPLING:
        if state.sample_budget is None:
            raise ValueError("strategy n_sampling needs a sample budget in the classifier state")
        if state.level < state.sample_budget:
            return PivotChoice.P_FIRST
        if state.locked_choice is None:
            # Lock the majority guess; ties keep the smaller pivot first.
            state.locked_choice = (
                PivotChoice.Q_FIRST
                if state.seen_small < state.seen_large
                else PivotChoice.P_FIRST
            )
        return state.locked_choice
    if strategy is StrategyId.L_COUNTING:
        # Running majority of what has been seen; ties try the larger pivot.
        return (
            PivotChoice.P_FIRST
            if state.seen_small > state.seen_large
            else PivotChoice.Q_FIRST
        )
    if strategy is StrategyId.O_ORACLE:
        s, lg = _require_oracle(strategy, state)
        rem_small = s - state.seen_small
        rem_large = lg - state.seen_large
        # Majority of what is still to come; ties try the larger pivot.
        return PivotChoice.P_FIRST if rem_small > rem_large else PivotChoice.Q_FIRST
    if strategy is StrategyId.N_IDEAL:
        s, lg = _require_oracle(strategy, state)
        return PivotChoice.P_FIRST if s > lg else PivotChoice.Q_FIRST
    raise ValueError(f"unknown strategy: {strategy!r}")


def classify_element(key, p, q, choice: PivotChoice, counters: CostCounters) -> ElementClass:
    """Classify one key against pivots p < q, comparing per ``choice``.

    Costs one comparison when the first pivot resolves the class (small
    found via p, large found via q) and two otherwise.
    """
    if not p < q:
        raise ValueError("classify_element requires p < q")
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


def make_classifier_state(
    strategy: StrategyId,
    keys,
    p,
    q,
    *,
    rng: SplitMix64 | None = None,
    sample_rule: SampleRule = SampleRule.HUNDREDTH,
) -> ClassifierState:
    """Build the state a strategy needs to classify ``keys`` against (p, q).

    Oracle totals are filled by an uncounted pre-scan; the sampling budget
    is computed from the subarray size (the keys plus the two pivots).
    """
    state = ClassifierState()
    if strategy in ORACLE_STRATEGIES:
        state.oracle_small = sum(1 for k in keys if k < p)
        state.oracle_large = sum(1 for k in keys if k > q)
    if strategy in RANDOMIZED_STRATEGIES:
        state.coin = rng
    if strategy is StrategyId.N_SAMPLING:
        state.sample_budget = sample_budget_for(sample_rule, len(keys) + 2)
    return state


def classify_sequence(
    keys,
    p,
    q,
    strategy: StrategyId,
    *,
    rng: SplitMix64 | None = None,
    sample_rule: SampleRule = SampleRule.HUNDREDTH,
) -> tuple[list[ElementClass], CostCounters, int]:
    """Classify ``keys`` in order; return (classes, counters, wrong-first count).

    The wrong-first count is the ACT of the run: smalls met via the larger
    pivot plus larges met via the smaller pivot.
    """
    if strategy in RANDOMIZED_STRATEGIES and rng is None:
        raise ValueError(f"strategy {strategy.value} needs an rng for its coin stream")
    state = make_classifier_state(strategy, keys, p, q, rng=rng, sample_rule=sample_rule)
    counters = CostCounters()
    classes: list[ElementClass] = []
    choices: list[PivotChoice] = []
    for key in keys:
        choice = choose_first_pivot(strategy, state)
        cls = classify_element(key, p, q, choice, counters)
        state.record(cls)
        classes.append(cls)
        choices.append(choice)
    return classes, counters, act_of_run(classes, choices)


def act_of_run(classes, choices) -> int:
    """Count elements that met the wrong pivot first (the run's ACT)."""
    if len(classes) != len(choices):
        raise ValueError("classes and choices must have equal length")
    act = 0
    for cls, choice in zip(classes, choices):
        if cls is ElementClass.SMALL and choice is PivotChoice.Q_FIRST:
            act += 1
        elif cls is ElementClass.LARGE and choice is PivotChoice.P_FIRST:
            act += 1
    return act
