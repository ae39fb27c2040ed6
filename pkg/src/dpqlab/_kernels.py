"""Compiled batch engine: bit-exact mirrors of the counted algorithms.

The pure-Python modules are the reference semantics; this module re-implements
the sorting paths on int64 arrays with numba so that the million-sort
correctness sweeps and the large Monte-Carlo runs fit their time budgets.
Everything is a *mirror*, not a reinterpretation:

* the same splitmix64 streams (same rejection sampling, same shuffle order,
  same coin draws, same seed-derivation chain), so both engines generate
  identical inputs and identical randomized-strategy choices for a seed;
* the same comparison and swap counting at every step, including self-swaps,
  failing insertion guards, and sentinel re-probes;
* the same driver (explicit stack, same push order, same cutoff rule).

Equality of counters and output arrays between the engines is enforced by
the parity test suite; any divergence is a bug here.

Only scalar ints, numpy arrays, and the integer codes below cross the numba
boundary.  ``codes_for`` maps a :class:`~dpqlab.sort.SortConfig` to codes.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .classify import SampleRule, StrategyId
from .partition import PartitionerId, SwapSchemeId
from .sort import SelectorMode, SortConfig

__all__ = [
    "codes_for",
    "warm_up",
    "run_sort_seeded",
    "batch_sort_random",
    "run_sort_pattern",
    "sweep_random",
    "sweep_patterns",
    "batch_partition_yaroslavskiy",
    "kernel_derive3",
    "PATTERN_CODES",
]

# --- integer codes ----------------------------------------------------------

KIND_CODES = {
    PartitionerId.YAROSLAVSKIY: 0,
    PartitionerId.SEDGEWICK: 1,
    PartitionerId.SEDGEWICK_MODIFIED: 2,
    PartitionerId.SIMPLE_SMALL: 3,
    PartitionerId.SIMPLE_LARGE: 4,
    PartitionerId.N_SAMPLED: 5,
    PartitionerId.COMPOSED: 6,
}

STRATEGY_CODES = {
    StrategyId.SMALLER_FIRST: 0,
    StrategyId.LARGER_FIRST: 1,
    StrategyId.ALTERNATE: 2,
    StrategyId.COIN: 3,
    StrategyId.S_ABSTRACT: 4,
    StrategyId.S_PRIME_ABSTRACT: 5,
    StrategyId.N_SAMPLING: 6,
    StrategyId.L_COUNTING: 7,
    StrategyId.O_ORACLE: 8,
    StrategyId.N_IDEAL: 9,
}

SCHEME_CODES = {
    None: -1,
    SwapSchemeId.SWAP_A_DIJKSTRA: 0,
    SwapSchemeId.SWAP_B_MEYER: 1,
    SwapSchemeId.SWAP_C_CHEN: 2,
}

RULE_CODES = {SampleRule.HUNDREDTH: 0, SampleRule.TWO_THIRDS: 1}

SELECTOR_CODES = {
    SelectorMode.DIRECT_ENDS: 0,
    SelectorMode.SAMPLE5_TERTILES: 1,
    SelectorMode.SAMPLE_K: 2,
    SelectorMode.MEDIAN_OF_K: 3,
}

#: Deterministic adversarial input shapes for the correctness sweeps.
PATTERN_CODES = {"sorted": 1, "reversed": 2, "all_equal": 3, "two_value": 4}


def codes_for(config: SortConfig) -> tuple[int, int, int, int, int, int, int]:
    """(kind, strategy, scheme, rule, selector_mode, selector_k, cutoff)."""
    spec = config.partitioner
    strategy = -1 if spec.strategy is None else STRATEGY_CODES[spec.strategy]
    sel_k = config.selector.k if config.selector.k is not None else 0
    return (
        KIND_CODES[spec.kind],
        strategy,
        SCHEME_CODES[spec.swap_scheme],
        RULE_CODES[spec.sample_rule],
        SELECTOR_CODES[config.selector.mode],
        sel_k,
        config.cutoff,
    )


# --- splitmix64, mirrored ---------------------------------------------------

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U0 = np.uint64(0)
_U1 = np.uint64(1)
_S30 = np.uint64(30)
_S27 = np.uint64(27)
_S31 = np.uint64(31)


@njit(cache=True, inline="always")
def _mix64(z):
    z = (z ^ (z >> _S30)) * _MIX1
    z = (z ^ (z >> _S27)) * _MIX2
    return z ^ (z >> _S31)


@njit(cache=True, inline="always")
def _next_u64(state):
    state = state + _GAMMA
    return state, _mix64(state)


@njit(cache=True, inline="always")
def _randbelow(state, n):
    """Uniform int64 in [0, n); mirrors the rejection loop exactly."""
    un = np.uint64(n)
    rem = (_U0 - un) % un  # 2**64 mod n
    while True:
        state, u = _next_u64(state)
        if rem == _U0 or u < _U0 - rem:
            return state, np.int64(u % un)


@njit(cache=True)
def _shuffle(arr, state):
    for i in range(len(arr) - 1, 0, -1):
        state, j = _randbelow(state, i + 1)
        t = arr[i]
        arr[i] = arr[j]
        arr[j] = t
    return state


@njit(cache=True, inline="always")
def _coin(state):
    state, u = _next_u64(state)
    return state, (u & _U1) == _U1


@njit(cache=True, inline="always")
def _chance(state, num, den):
    state, v = _randbelow(state, den)
    return state, v < num


@njit(cache=True)
def kernel_derive3(master, k1, k2, k3):
    """Mirror of ``derive_seed(master, k1, k2, k3)``; returns a uint64."""
    state = _mix64(np.uint64(master))
    state = _mix64(state ^ _mix64(np.uint64(k1) + _GAMMA))
    state = _mix64(state ^ _mix64(np.uint64(k2) + _GAMMA))
    state = _mix64(state ^ _mix64(np.uint64(k3) + _GAMMA))
    return state


# --- counted building blocks -------------------------------------------------


@njit(cache=True)
def _insertion(arr, left, right):
    """Counted insertion sort; returns its comparison count."""
    comps = 0
    for i in range(left + 1, right + 1):
        v = arr[i]
        j = i
        while j > left:
            comps += 1
            if v < arr[j - 1]:
                arr[j] = arr[j - 1]
                j -= 1
            else:
                break
        arr[j] = v
    return comps


@njit(cache=True)
def _select_pivots(arr, left, right, sel_mode, sel_k, scratch, idxs):
    """Mirror of ``select_pivots``; returns (comparisons, swaps)."""
    comps = 0
    swaps = 0
    if sel_mode == 0:  # direct ends
        return comps, swaps
    k = 5 if sel_mode == 1 else sel_k
    size = right - left + 1
    if size < k:
        return comps, swaps  # direct-ends fallback
    if k == 1:
        idxs[0] = (left + right) // 2
    else:
        span = right - left
        for i in range(k):
            idxs[i] = left + (i * span) // (k - 1)
    for i in range(k):
        scratch[i] = arr[idxs[i]]
    for i in range(1, k):
        v = scratch[i]
        j = i
        while j > 0:
            comps += 1
            if v < scratch[j - 1]:
                scratch[j] = scratch[j - 1]
                j -= 1
            else:
                break
        scratch[j] = v
    for i in range(k):
        arr[idxs[i]] = scratch[i]
    if sel_mode == 3:  # median at left
        m = idxs[(k - 1) // 2]
        t = arr[left]
        arr[left] = arr[m]
        arr[m] = t
        swaps += 1
        return comps, swaps
    lo_rank = (k + 1) // 3 - 1
    hi_rank = 2 * (k + 1) // 3 - 1
    i1 = idxs[lo_rank]
    i2 = idxs[hi_rank]
    t = arr[left]
    arr[left] = arr[i1]
    arr[i1] = t
    swaps += 1
    if i2 == left:
        i2 = i1
    t = arr[right]
    arr[right] = arr[i2]
    arr[i2] = t
    swaps += 1
    return comps, swaps


# --- named partition procedures ----------------------------------------------
#
# Each returns (pos_p, pos_q, comparisons, swaps) for its own work.


@njit(cache=True)
def _part_yaroslavskiy(arr, p, q, left, right):
    comps = 0
    swaps = 0
    l = left + 1
    g = right - 1
    k = l
    while k <= g:
        comps += 1
        if arr[k] < p:
            t = arr[k]
            arr[k] = arr[l]
            arr[l] = t
            swaps += 1
            l += 1
        else:
            comps += 1
            if q < arr[k]:
                while True:
                    comps += 1
                    if q < arr[g] and k < g:
                        g -= 1
                    else:
                        break
                t = arr[k]
                arr[k] = arr[g]
                arr[g] = t
                swaps += 1
                g -= 1
                comps += 1
                if arr[k] < p:
                    t = arr[k]
                    arr[k] = arr[l]
                    arr[l] = t
                    swaps += 1
                    l += 1
        k += 1
    t = arr[left]
    arr[left] = arr[l - 1]
    arr[l - 1] = t
    t = arr[right]
    arr[right] = arr[g + 1]
    arr[g + 1] = t
    swaps += 2
    return l - 1, g + 1, comps, swaps


@njit(cache=True)
def _part_simple_small(arr, p, q, left, right):
    comps = 0
    swaps = 0
    l = left + 1
    g = right - 1
    k = l
    while k <= g:
        comps += 1
        if arr[k] < p:
            t = arr[k]
            arr[k] = arr[l]
            arr[l] = t
            swaps += 1
            l += 1
            k += 1
        else:
            comps += 1
            if arr[k] < q:
                k += 1
            else:
                t = arr[k]
                arr[k] = arr[g]
                arr[g] = t
                swaps += 1
                g -= 1
    t = arr[left]
    arr[left] = arr[l - 1]
    arr[l - 1] = t
    t = arr[right]
    arr[right] = arr[g + 1]
    arr[g + 1] = t
    swaps += 2
    return l - 1, g + 1, comps, swaps


@njit(cache=True)
def _part_simple_large(arr, p, q, left, right):
    comps = 0
    swaps = 0
    l = left + 1
    g = right - 1
    k = l
    while k <= g:
        while True:
            comps += 1
            if q < arr[g]:
                g -= 1
            else:
                break
        while True:
            comps += 1
            if arr[k] < q:
                comps += 1
                if arr[k] < p:
                    t = arr[k]
                    arr[k] = arr[l]
                    arr[l] = t
                    swaps += 1
                    l += 1
                k += 1
            else:
                break
        if k < g:
            t = arr[k]
            arr[k] = arr[g]
            arr[g] = t
            swaps += 1
            comps += 1
            if arr[k] < p:
                t = arr[l]
                arr[l] = arr[k]
                arr[k] = t
                swaps += 1
                l += 1
            g -= 1
        k += 1
    t = arr[left]
    arr[left] = arr[l - 1]
    arr[l - 1] = t
    t = arr[right]
    arr[right] = arr[g + 1]
    arr[g + 1] = t
    swaps += 2
    return l - 1, g + 1, comps, swaps


@njit(cache=True)
def _part_sedgewick(arr, p, q, left, right):
    comps = 0
    swaps = 0
    i = left
    i1 = left
    j = right
    j1 = right
    broke = False
    while True:
        i += 1
        while True:
            comps += 1
            if q < arr[i]:
                break
            if i >= j:
                broke = True
                break
            comps += 1
            if arr[i] < p:
                arr[i1] = arr[i]
                swaps += 1
                i1 += 1
                arr[i] = arr[i1]
            i += 1
        if broke:
            break
        j -= 1
        while True:
            comps += 1
            if arr[j] < p:
                break
            comps += 1
            if q < arr[j]:
                arr[j1] = arr[j]
                swaps += 1
                j1 -= 1
                arr[j] = arr[j1]
            if i >= j:
                broke = True
                break
            j -= 1
        if broke:
            break
        arr[i1] = arr[j]
        swaps += 1
        i1 += 1
        arr[j1] = arr[i]
        swaps += 1
        j1 -= 1
        arr[i] = arr[i1]
        arr[j] = arr[j1]
    swaps += 2
    arr[i1] = p
    arr[j1] = q
    return i1, j1, comps, swaps


@njit(cache=True)
def _part_sedgewick_modified(arr, p, q, left, right):
    comps = 0
    swaps = 0
    i = left
    i1 = left
    j = right
    j1 = right
    broke = False
    while True:
        i += 1
        while True:
            if i >= j:
                broke = True
                break
            comps += 1
            if arr[i] < p:
                arr[i1] = arr[i]
                swaps += 1
                i1 += 1
                arr[i] = arr[i1]
            else:
                comps += 1
                if q < arr[i]:
                    break
            i += 1
        if broke:
            break
        j -= 1
        while True:
            comps += 1
            if q < arr[j]:
                arr[j1] = arr[j]
                swaps += 1
                j1 -= 1
                arr[j] = arr[j1]
            else:
                comps += 1
                if arr[j] < p:
                    break
            if i >= j:
                broke = True
                break
            j -= 1
        if broke:
            break
        arr[i1] = arr[j]
        swaps += 1
        i1 += 1
        arr[j1] = arr[i]
        swaps += 1
        j1 -= 1
        arr[i] = arr[i1]
        arr[j] = arr[j1]
    swaps += 2
    arr[i1] = p
    arr[j1] = q
    return i1, j1, comps, swaps


@njit(cache=True)
def _part_n_sampled(arr, p, q, left, right, rule):
    comps = 0
    swaps = 0
    size = right - left + 1
    if rule == 0:
        budget = max(size // 100, 7)
    else:
        budget = int(np.ceil(size ** (2.0 / 3.0)))
    l = left + 1
    g = right - 1
    k = l
    seen_small = 0
    seen_large = 0
    level = 0
    locked = -1
    while k <= g:
        if level < budget:
            q_first = False
        else:
            if locked < 0:
                locked = 1 if seen_small < seen_large else 0
            q_first = locked == 1
        if q_first:
            comps += 1
            if arr[k] < q:
                comps += 1
                if arr[k] < p:
                    cls = 0
                else:
                    cls = 1
            else:
                cls = 2
        else:
            comps += 1
            if arr[k] < p:
                cls = 0
            else:
                comps += 1
                if arr[k] < q:
                    cls = 1
                else:
                    cls = 2
        level += 1
        if cls == 0:
            seen_small += 1
            t = arr[k]
            arr[k] = arr[l]
            arr[l] = t
            swaps += 1
            l += 1
            k += 1
        elif cls == 1:
            k += 1
        else:
            seen_large += 1
            t = arr[k]
            arr[k] = arr[g]
            arr[g] = t
            swaps += 1
            g -= 1
    t = arr[left]
    arr[left] = arr[l - 1]
    arr[l - 1] = t
    t = arr[right]
    arr[right] = arr[g + 1]
    arr[g + 1] = t
    swaps += 2
    return l - 1, g + 1, comps, swaps


# --- composed partitioner (strategy x swap scheme) ----------------------------
#
# Classifier state lives in scalars threaded through the inlined helpers
# (an array would defeat register allocation in the element loops), and the
# strategy dispatch is folded away by compiling one thin wrapper per
# strategy whose constant argument lets the inlined body specialize.
# ``locked`` is -1 before the sampling strategy commits, else 0/1.


@njit(cache=True, inline="always")
def _classify_step(arr, p, q, pos, strategy, ora_s, ora_l, budget,
                   seen_s, seen_l, level, locked, rng, comps):
    """One counted classification; choice logic mirrors
    ``choose_first_pivot``.  Returns
    (cls, seen_s, seen_l, level, locked, rng, comps)."""
    if strategy == 0:  # smaller first
        q_first = False
    elif strategy == 1:  # larger first
        q_first = True
    elif strategy == 2:  # alternate
        q_first = level % 2 == 1
    elif strategy == 3:  # coin
        rng, heads = _coin(rng)
        q_first = not heads
    elif strategy == 4:  # s_abstract
        tot = ora_s + ora_l
        if tot == 0:
            q_first = False
        else:
            rng, q_first = _chance(rng, ora_s, tot)
    elif strategy == 5:  # s_prime_abstract
        tot = ora_s + ora_l
        if tot == 0:
            q_first = False
        else:
            rng, q_first = _chance(rng, ora_l, tot)
    elif strategy == 6:  # n_sampling
        if level < budget:
            q_first = False
        else:
            if locked < 0:
                locked = 1 if seen_s < seen_l else 0
            q_first = locked == 1
    elif strategy == 7:  # l_counting
        q_first = not (seen_s > seen_l)
    elif strategy == 8:  # o_oracle
        q_first = not (ora_s - seen_s > ora_l - seen_l)
    else:  # n_ideal
        q_first = not (ora_s > ora_l)
    if q_first:
        comps += 1
        if arr[pos] < q:
            comps += 1
            if arr[pos] < p:
                c = 0
            else:
                c = 1
        else:
            c = 2
    else:
        comps += 1
        if arr[pos] < p:
            c = 0
        else:
            comps += 1
            if arr[pos] < q:
                c = 1
            else:
                c = 2
    if c == 0:
        seen_s += 1
    elif c == 2:
        seen_l += 1
    level += 1
    return c, seen_s, seen_l, level, locked, rng, comps


@njit(cache=True, inline="always")
def _oracle_budget(arr, p, q, left, right, strategy, rule):
    """Uncounted pre-scan totals and sampling budget for a partition."""
    ora_s = 0
    ora_l = 0
    budget = 0
    if strategy == 4 or strategy == 5 or strategy == 8 or strategy == 9:
        for pos in range(left + 1, right):
            if arr[pos] < p:
                ora_s += 1
            elif q < arr[pos]:
                ora_l += 1
    if strategy == 6:
        size = right - left + 1
        if rule == 0:
            budget = max(size // 100, 7)
        else:
            budget = int(np.ceil(size ** (2.0 / 3.0)))
    return ora_s, ora_l, budget


@njit(cache=True, inline="always")
def _scheme0_impl(arr, known, p, q, left, right, rule, rng, strategy):
    """One swap per misplaced element, classifying from the right end.

    This scheme never re-queries a remembered class: a swapped-in class can
    only land above the descending scan pointer, so the memo is skipped
    entirely (the parity suite pins equality with the reference).
    """
    comps = 0
    swaps = 0
    lo = left + 1
    hi = right - 1
    seen_s = 0
    seen_l = 0
    level = 0
    locked = -1
    ora_s, ora_l, budget = _oracle_budget(arr, p, q, left, right, strategy, rule)
    i = lo
    j = hi
    k = hi
    while i <= j:
        c, seen_s, seen_l, level, locked, rng, comps = _classify_step(
            arr, p, q, j, strategy, ora_s, ora_l, budget,
            seen_s, seen_l, level, locked, rng, comps)
        if c == 0:
            t = arr[i]
            arr[i] = arr[j]
            arr[j] = t
            swaps += 1
            i += 1
        elif c == 1:
            j -= 1
        else:
            t = arr[j]
            arr[j] = arr[k]
            arr[k] = t
            swaps += 1
            j -= 1
            k -= 1
    t = arr[left]
    arr[left] = arr[left + seen_s]
    arr[left + seen_s] = t
    t = arr[right]
    arr[right] = arr[right - seen_l]
    arr[right - seen_l] = t
    swaps += 2
    return left + seen_s, right - seen_l, rng, comps, swaps


@njit(cache=True, inline="always")
def _scheme1_impl(arr, known, p, q, left, right, rule, rng, strategy):
    """Like scheme 0 but skips smalls already in place.

    The forward small scan re-queries remembered classes for free, so this
    scheme keeps the classify-once memo.
    """
    comps = 0
    swaps = 0
    lo = left + 1
    hi = right - 1
    for pos in range(lo, hi + 1):
        known[pos] = -1
    seen_s = 0
    seen_l = 0
    level = 0
    locked = -1
    ora_s, ora_l, budget = _oracle_budget(arr, p, q, left, right, strategy, rule)
    i = lo
    j = hi
    k = hi
    while i <= j:
        cls = known[j]
        if cls < 0:
            cc, seen_s, seen_l, level, locked, rng, comps = _classify_step(
                arr, p, q, j, strategy, ora_s, ora_l, budget,
                seen_s, seen_l, level, locked, rng, comps)
            known[j] = cc
            cls = cc
        if cls == 0:
            while i <= hi:
                ci = known[i]
                if ci < 0:
                    cc, seen_s, seen_l, level, locked, rng, comps = _classify_step(
                        arr, p, q, i, strategy, ora_s, ora_l, budget,
                        seen_s, seen_l, level, locked, rng, comps)
                    known[i] = cc
                    ci = cc
                if ci == 0:
                    i += 1
                else:
                    break
            if i < j:
                t = arr[i]
                arr[i] = arr[j]
                arr[j] = t
                kt = known[i]
                known[i] = known[j]
                known[j] = kt
                swaps += 1
                i += 1
        elif cls == 1:
            j -= 1
        else:
            t = arr[j]
            arr[j] = arr[k]
            arr[k] = t
            kt = known[j]
            known[j] = known[k]
            known[k] = kt
            swaps += 1
            j -= 1
            k -= 1
    t = arr[left]
    arr[left] = arr[left + seen_s]
    arr[left + seen_s] = t
    t = arr[right]
    arr[right] = arr[right - seen_l]
    arr[right - seen_l] = t
    swaps += 2
    return left + seen_s, right - seen_l, rng, comps, swaps


@njit(cache=True, inline="always")
def _class_at_smaller(arr, known, p, q, pos, comps):
    """Memoized smaller-pivot-first classification (two-stage scheme)."""
    cls = known[pos]
    if cls >= 0:
        return np.int64(cls), comps
    comps += 1
    if arr[pos] < p:
        c = 0
    else:
        comps += 1
        if arr[pos] < q:
            c = 1
        else:
            c = 2
    known[pos] = c
    return np.int64(c), comps


@njit(cache=True)
def _scheme2_smaller(arr, known, p, q, left, right, rule, rng):
    """Two stages (smalls leftward, then larges rightward), smaller-first.

    This scheme hard-codes its comparison order, so it composes with the
    smaller-first strategy only; class tests run before the pointer guards
    so crossing elements are still classified.
    """
    comps = 0
    swaps = 0
    lo = left + 1
    hi = right - 1
    for pos in range(lo, hi + 1):
        known[pos] = -1
    i = lo
    j = hi
    while i < j:
        while True:
            ci, comps = _class_at_smaller(arr, known, p, q, i, comps)
            if ci == 0 and i < j:
                i += 1
            else:
                break
        while True:
            cj, comps = _class_at_smaller(arr, known, p, q, j, comps)
            if cj != 0 and i < j:
                j -= 1
            else:
                break
        if i < j:
            t = arr[i]
            arr[i] = arr[j]
            arr[j] = t
            kt = known[i]
            known[i] = known[j]
            known[j] = kt
            swaps += 1
            i += 1
            j -= 1
    if i <= hi:
        ci, comps = _class_at_smaller(arr, known, p, q, i, comps)
    if i < hi:
        j = i
        k = hi
        while j < k:
            while True:
                cj, comps = _class_at_smaller(arr, known, p, q, j, comps)
                if cj != 2 and j < k:
                    j += 1
                else:
                    break
            while True:
                ck, comps = _class_at_smaller(arr, known, p, q, k, comps)
                if ck == 2 and j < k:
                    k -= 1
                else:
                    break
            if j < k:
                t = arr[j]
                arr[j] = arr[k]
                arr[k] = t
                kt = known[j]
                known[j] = known[k]
                known[k] = kt
                swaps += 1
                j += 1
                k -= 1
    small = 0
    large = 0
    for pos in range(lo, hi + 1):
        if known[pos] == 0:
            small += 1
        elif known[pos] == 2:
            large += 1
    t = arr[left]
    arr[left] = arr[left + small]
    arr[left + small] = t
    t = arr[right]
    arr[right] = arr[right - large]
    arr[right - large] = t
    swaps += 2
    return left + small, right - large, rng, comps, swaps


@njit(cache=True)
def _c0_s0(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 0)


@njit(cache=True)
def _c0_s1(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 1)


@njit(cache=True)
def _c0_s2(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 2)


@njit(cache=True)
def _c0_s3(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 3)


@njit(cache=True)
def _c0_s4(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 4)


@njit(cache=True)
def _c0_s5(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 5)


@njit(cache=True)
def _c0_s6(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 6)


@njit(cache=True)
def _c0_s7(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 7)


@njit(cache=True)
def _c0_s8(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 8)


@njit(cache=True)
def _c0_s9(arr, known, p, q, left, right, rule, rng):
    return _scheme0_impl(arr, known, p, q, left, right, rule, rng, 9)


@njit(cache=True)
def _c1_s0(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 0)


@njit(cache=True)
def _c1_s1(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 1)


@njit(cache=True)
def _c1_s2(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 2)


@njit(cache=True)
def _c1_s3(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 3)


@njit(cache=True)
def _c1_s4(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 4)


@njit(cache=True)
def _c1_s5(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 5)


@njit(cache=True)
def _c1_s6(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 6)


@njit(cache=True)
def _c1_s7(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 7)


@njit(cache=True)
def _c1_s8(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 8)


@njit(cache=True)
def _c1_s9(arr, known, p, q, left, right, rule, rng):
    return _scheme1_impl(arr, known, p, q, left, right, rule, rng, 9)


@njit(cache=True)
def _part_composed(arr, known, p, q, left, right, scheme, strategy, rule, rng):
    if scheme == 0:
        if strategy == 0:
            return _c0_s0(arr, known, p, q, left, right, rule, rng)
        elif strategy == 1:
            return _c0_s1(arr, known, p, q, left, right, rule, rng)
        elif strategy == 2:
            return _c0_s2(arr, known, p, q, left, right, rule, rng)
        elif strategy == 3:
            return _c0_s3(arr, known, p, q, left, right, rule, rng)
        elif strategy == 4:
            return _c0_s4(arr, known, p, q, left, right, rule, rng)
        elif strategy == 5:
            return _c0_s5(arr, known, p, q, left, right, rule, rng)
        elif strategy == 6:
            return _c0_s6(arr, known, p, q, left, right, rule, rng)
        elif strategy == 7:
            return _c0_s7(arr, known, p, q, left, right, rule, rng)
        elif strategy == 8:
            return _c0_s8(arr, known, p, q, left, right, rule, rng)
        elif strategy == 9:
            return _c0_s9(arr, known, p, q, left, right, rule, rng)
    elif scheme == 1:
        if strategy == 0:
            return _c1_s0(arr, known, p, q, left, right, rule, rng)
        elif strategy == 1:
            return _c1_s1(arr, known, p, q, left, right, rule, rng)
        elif strategy == 2:
            return _c1_s2(arr, known, p, q, left, right, rule, rng)
        elif strategy == 3:
            return _c1_s3(arr, known, p, q, left, right, rule, rng)
        elif strategy == 4:
            return _c1_s4(arr, known, p, q, left, right, rule, rng)
        elif strategy == 5:
            return _c1_s5(arr, known, p, q, left, right, rule, rng)
        elif strategy == 6:
            return _c1_s6(arr, known, p, q, left, right, rule, rng)
        elif strategy == 7:
            return _c1_s7(arr, known, p, q, left, right, rule, rng)
        elif strategy == 8:
            return _c1_s8(arr, known, p, q, left, right, rule, rng)
        elif strategy == 9:
            return _c1_s9(arr, known, p, q, left, right, rule, rng)
    return _scheme2_smaller(arr, known, p, q, left, right, rule, rng)


# --- driver -------------------------------------------------------------------


@njit(cache=True)
def _sort(arr, kind, strategy, scheme, rule, sel_mode, sel_k, cutoff, coin_seed,
          stack, known, scratch, idxs):
    comps = 0
    swaps = 0
    rng = np.uint64(coin_seed)
    top = 0
    stack[top] = 0
    stack[top + 1] = len(arr) - 1
    top = 2
    while top > 0:
        hi = stack[top - 1]
        lo = stack[top - 2]
        top -= 2
        if hi - lo + 1 <= cutoff:
            comps += _insertion(arr, lo, hi)
            continue
        c, s = _select_pivots(arr, lo, hi, sel_mode, sel_k, scratch, idxs)
        comps += c
        swaps += s
        comps += 1  # pivot-ordering comparison
        if arr[hi] < arr[lo]:
            t = arr[lo]
            arr[lo] = arr[hi]
            arr[hi] = t
            swaps += 1
        p = arr[lo]
        q = arr[hi]
        if kind == 0:
            pp, pq, c, s = _part_yaroslavskiy(arr, p, q, lo, hi)
        elif kind == 1:
            pp, pq, c, s = _part_sedgewick(arr, p, q, lo, hi)
        elif kind == 2:
            pp, pq, c, s = _part_sedgewick_modified(arr, p, q, lo, hi)
        elif kind == 3:
            pp, pq, c, s = _part_simple_small(arr, p, q, lo, hi)
        elif kind == 4:
            pp, pq, c, s = _part_simple_large(arr, p, q, lo, hi)
        elif kind == 5:
            pp, pq, c, s = _part_n_sampled(arr, p, q, lo, hi, rule)
        else:
            pp, pq, rng, c, s = _part_composed(
                arr, known, p, q, lo, hi, scheme, strategy, rule, rng
            )
        comps += c
        swaps += s
        stack[top] = pq + 1
        stack[top + 1] = hi
        stack[top + 2] = pp + 1
        stack[top + 3] = pq - 1
        stack[top + 4] = lo
        stack[top + 5] = pp - 1
        top += 6
    return comps, swaps


@njit(cache=True)
def run_sort_seeded(arr, kind, strategy, scheme, rule, sel_mode, sel_k, cutoff, coin_seed):
    """Sort a caller-provided int64 array; returns (comparisons, swaps)."""
    n = len(arr)
    cap = max(n, 1)
    stack = np.empty(2 * cap + 64, np.int64)
    known = np.empty(cap, np.int8)
    scratch = np.empty(64, np.int64)
    idxs = np.empty(64, np.int64)
    return _sort(arr, kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                 coin_seed, stack, known, scratch, idxs)


@njit(cache=True)
def batch_sort_random(kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                      n, trial_start, trials, master_seed):
    """Sort ``trials`` fresh random permutations of 1..n; verify each.

    Trial indices run from ``trial_start`` (so workers can split a run into
    ranges without changing any result).  Per-trial streams: permutation
    seed derive(master, n, t, 0), coin seed derive(master, n, t, 1) —
    identical to the pure-Python harness.
    Returns (comparisons[], swaps[], verified_count).
    """
    comps_out = np.empty(trials, np.int64)
    swaps_out = np.empty(trials, np.int64)
    cap = max(n, 1)
    arr = np.empty(cap, np.int64)[:n]
    stack = np.empty(2 * cap + 64, np.int64)
    known = np.empty(cap, np.int8)
    scratch = np.empty(64, np.int64)
    idxs = np.empty(64, np.int64)
    ok = 0
    for tt in range(trials):
        t = trial_start + tt
        for i in range(n):
            arr[i] = i + 1
        _shuffle(arr, kernel_derive3(master_seed, n, t, 0))
        coin_seed = kernel_derive3(master_seed, n, t, 1)
        c, s = _sort(arr, kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                     coin_seed, stack, known, scratch, idxs)
        comps_out[tt] = c
        swaps_out[tt] = s
        good = True
        for i in range(n):
            if arr[i] != i + 1:
                good = False
                break
        if good:
            ok += 1
    return comps_out, swaps_out, ok


@njit(cache=True)
def run_sort_pattern(kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                     n, pattern, coin_seed):
    """Sort one deterministic adversarial input; verify the result.

    Patterns: 1 sorted, 2 reversed, 3 all-equal, 4 alternating two-value.
    Returns (comparisons, swaps, verified).
    """
    cap = max(n, 1)
    arr = np.empty(cap, np.int64)[:n]
    for i in range(n):
        if pattern == 1:
            arr[i] = i + 1
        elif pattern == 2:
            arr[i] = n - i
        elif pattern == 3:
            arr[i] = 7
        else:
            arr[i] = 1 + (i % 2)
    c, s = run_sort_seeded(arr, kind, strategy, scheme, rule, sel_mode, sel_k,
                           cutoff, coin_seed)
    good = True
    ones = (n + 1) // 2
    for i in range(n):
        if pattern == 1 or pattern == 2:
            want = i + 1
        elif pattern == 3:
            want = 7
        else:
            want = 1 if i < ones else 2
        if arr[i] != want:
            good = False
            break
    return c, s, good


@njit(cache=True)
def sweep_random(kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                 n_max, trials, master_seed):
    """Sort seeded random permutations for every size 0..n_max.

    Runs ``trials`` permutations per size with the same per-trial seed
    streams as :func:`batch_sort_random` and returns the number of runs
    whose output failed verification (0 means every run sorted correctly).
    """
    cap = max(n_max, 1)
    buf = np.empty(cap, np.int64)
    stack = np.empty(2 * cap + 64, np.int64)
    known = np.empty(cap, np.int8)
    scratch = np.empty(64, np.int64)
    idxs = np.empty(64, np.int64)
    failures = 0
    for n in range(n_max + 1):
        arr = buf[:n]
        for t in range(trials):
            for i in range(n):
                arr[i] = i + 1
            _shuffle(arr, kernel_derive3(master_seed, n, t, 0))
            coin_seed = kernel_derive3(master_seed, n, t, 1)
            _sort(arr, kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                  coin_seed, stack, known, scratch, idxs)
            for i in range(n):
                if arr[i] != i + 1:
                    failures += 1
                    break
    return failures


@njit(cache=True)
def sweep_patterns(kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                   n_max, master_seed):
    """Sort every adversarial pattern at every size 0..n_max.

    Coin seeds derive from (master, n, pattern_code, 1).  Returns the
    number of runs whose output failed verification.
    """
    cap = max(n_max, 1)
    buf = np.empty(cap, np.int64)
    stack = np.empty(2 * cap + 64, np.int64)
    known = np.empty(cap, np.int8)
    scratch = np.empty(64, np.int64)
    idxs = np.empty(64, np.int64)
    failures = 0
    for n in range(n_max + 1):
        arr = buf[:n]
        ones = (n + 1) // 2
        for pattern in range(1, 5):
            for i in range(n):
                if pattern == 1:
                    arr[i] = i + 1
                elif pattern == 2:
                    arr[i] = n - i
                elif pattern == 3:
                    arr[i] = 7
                else:
                    arr[i] = 1 + (i % 2)
            coin_seed = kernel_derive3(master_seed, n, pattern, 1)
            _sort(arr, kind, strategy, scheme, rule, sel_mode, sel_k, cutoff,
                  coin_seed, stack, known, scratch, idxs)
            for i in range(n):
                if pattern == 1 or pattern == 2:
                    want = i + 1
                elif pattern == 3:
                    want = 7
                else:
                    want = 1 if i < ones else 2
                if arr[i] != want:
                    failures += 1
                    break
    return failures


@njit(cache=True)
def batch_partition_yaroslavskiy(n, trials, master_seed):
    """One three-pointer partition per fresh random permutation of 1..n.

    Pivots are the ordered end elements; the driver's pivot-ordering
    comparison is included.  Returns (comparisons[], medium_counts[]).
    """
    comps_out = np.empty(trials, np.int64)
    medium_out = np.empty(trials, np.int64)
    arr = np.empty(n, np.int64)
    for t in range(trials):
        for i in range(n):
            arr[i] = i + 1
        _shuffle(arr, kernel_derive3(master_seed, n, t, 0))
        comps = 1
        if arr[n - 1] < arr[0]:
            tv = arr[0]
            arr[0] = arr[n - 1]
            arr[n - 1] = tv
        p = arr[0]
        q = arr[n - 1]
        pp, pq, c, s = _part_yaroslavskiy(arr, p, q, 0, n - 1)
        comps_out[t] = comps + c
        medium_out[t] = pq - pp - 1
    return comps_out, medium_out


def warm_up() -> None:
    """Compile every kernel path once (tiny inputs)."""
    one = np.uint64(1)
    for kind in range(6):
        batch_sort_random(kind, -1, -1, 0, 0, 0, 2, 8, 0, 1, one)
    for strategy in range(10):
        for scheme in range(3):
            if scheme == 2 and strategy != 0:
                continue
            batch_sort_random(6, strategy, scheme, 0, 1, 0, 2, 12, 0, 1, one)
    run_sort_pattern(0, -1, -1, 0, 0, 0, 16, 8, 4, one)
    sweep_random(0, -1, -1, 0, 0, 0, 2, 8, 1, one)
    sweep_patterns(0, -1, -1, 0, 0, 0, 2, 8, one)
    batch_partition_yaroslavskiy(8, 1, one)
