"""Exact and asymptotic cost analysis for dual-pivot partitioning and sorting.

The module has four layers:

* **Per-partition means.**  Closed forms (exact fractions) for the average
  comparison count of one partition step under each classification strategy,
  and for the average swap count of each swap scheme, as functions of the
  subarray size.  The adaptive counting strategies have no closed form and
  are evaluated by dynamic programs over classification histories.
* **Whole-sort recurrences.**  The average sorting cost satisfies a linear
  recurrence in the partition cost; solving it with rolling prefix sums
  costs O(1) per size, for both uniform pivot pairs (ends of the subarray)
  and pivots drawn as the tertiles of a 5-element sample.
* **Sampled-pivot models.**  Exact finite-size evaluations of the expected
  partition cost when pivots are tertiles of a k-element sample, plus the
  classical closed-form leading coefficients for median-of-k quicksort and
  tertile dual-pivot quicksort.
* **Side statistics.**  The balanced-suffix (zero-crossing) mean, the
  misplaced-element means, and a doubling estimator for the n*ln(n)
  coefficient of a cost table.

Counting conventions match the counted implementations: a partition step's
comparisons include the driver's pivot-ordering comparison, and swap-scheme
means include the two final pivot-placement swaps.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .classify import StrategyId
from .partition import SwapSchemeId

__all__ = [
    "SWITCH_SCHEME",
    "harmonic",
    "exact_partition_cost",
    "comparison_cost_table",
    "act_oracle_table",
    "act_oracle_total",
    "act_counting_cell",
    "act_counting_total",
    "swap_partition_cost",
    "swap_cost_table",
    "misplaced_group_mean",
    "misplaced_total_mean",
    "misplaced_swap_lower_bound",
    "solve_uniform_recurrence",
    "solve_sample5_recurrence",
    "expected_sample_sort_comparisons",
    "leading_coefficient_estimate",
    "sample5_partition_cost_yaroslavskiy",
    "sample5_partition_cost_ideal",
    "sample5_cost_table",
    "sample_k_partition_cost",
    "median_classic_coefficient",
    "tertile_dual_coefficient",
    "sample_table_entries",
    "expected_zero_crossings",
]

#: Analysis-only swap model: run the cheaper mirror of the one-sided scheme,
#: picking per partition whichever of the two class orientations is cheaper.
SWITCH_SCHEME = "swap_switch_meyer"


def harmonic(n: int) -> Fraction:
    """The n-th harmonic number, exactly."""
    if n < 0:
        raise ValueError("harmonic number needs n >= 0")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# Per-partition comparison means
# ---------------------------------------------------------------------------
#
# With ordered pivots at the ends of a subarray of size n, the pair
# (s, l) = (#smaller, #larger) is uniform over the C(n, 2) ordered pairs,
# and the mean comparison count of a partition step is
#
#     1  +  (n - 2)  +  E[m]  +  E[extra],
#
# (the pivot-ordering comparison, one comparison per element, a second per
# medium element, and a second per element whose first comparison tried the
# unhelpful pivot).  E[m] = (n - 2) / 3.  The strategies differ only in
# E[extra]; for the oblivious and constant-coin strategies the sum over one
# diagonal t = s + l has a small closed form, accumulated below.


def _diagonal_extra_sum(strategy: StrategyId, t: int) -> Fraction:
    """Sum of the strategy's mean extra-comparison count over the cells s+l=t."""
    if strategy in (
        StrategyId.SMALLER_FIRST,
        StrategyId.LARGER_FIRST,
        StrategyId.ALTERNATE,
        StrategyId.COIN,
    ):
        # Each cell contributes l, s, their slot-weighted mix, or (s+l)/2;
        # summed over a diagonal all four give the same triangle number.
        return Fraction(t * (t + 1), 2)
    if strategy is StrategyId.S_ABSTRACT:
        # sum_{s+l=t} (s^2 + l^2) / t  ==  (t + 1)(2t + 1) / 3
        return Fraction((t + 1) * (2 * t + 1), 3) if t else Fraction(0)
    if strategy is StrategyId.S_PRIME_ABSTRACT:
        # sum_{s+l=t} 2sl / t  ==  (t^2 - 1) / 3
        return Fraction(t * t - 1, 3) if t else Fraction(0)
    if strategy is StrategyId.N_IDEAL:
        # sum_{s+l=t} min(s, l)  ==  floor(t^2 / 4)
        return Fraction(t * t // 4)
    raise ValueError(f"no closed diagonal sum for strategy {strategy.value}")


_CLOSED_FORM_STRATEGIES = frozenset(
    {
        StrategyId.SMALLER_FIRST,
        StrategyId.LARGER_FIRST,
        StrategyId.ALTERNATE,
        StrategyId.COIN,
        StrategyId.S_ABSTRACT,
        StrategyId.S_PRIME_ABSTRACT,
        StrategyId.N_IDEAL,
    }
)


def exact_partition_cost(strategy: StrategyId, n: int) -> Fraction:
    """Exact mean comparison count of one partition step at subarray size n.

    Supports the seven strategies with closed diagonal sums directly and the
    two counting strategies through their history dynamic programs (those
    cost O(n^4) work and are only meant for moderate n).
    """
    if n < 2:
        raise ValueError("a partition step needs n >= 2")
    base = Fraction(n - 1) + Fraction(n - 2, 3)
    if strategy in _CLOSED_FORM_STRATEGIES:
        extra = sum(
            (_diagonal_extra_sum(strategy, t) for t in range(n - 1)), Fraction(0)
        )
        return base + extra / math.comb(n, 2)
    if strategy is StrategyId.O_ORACLE:
        return base + act_oracle_total(n)
    if strategy is StrategyId.L_COUNTING:
        return base + act_counting_total(n)
    if strategy is StrategyId.N_SAMPLING:
        raise ValueError(
            "the sampling strategy's cost depends on its budget schedule; "
            "at sizes where the budget covers the subarray it equals "
            "smaller_first (use that closed form)"
        )
    raise ValueError(f"unknown strategy: {strategy!r}")


def comparison_cost_table(strategy: StrategyId, n_max: int) -> list[float]:
    """Float per-size partition comparison costs for sizes 0..n_max.

    Entries 0 and 1 are zero (nothing to do); entry n is the float value of
    :func:`exact_partition_cost`, built incrementally in O(1) per size.
    """
    if strategy not in _CLOSED_FORM_STRATEGIES:
        raise ValueError(f"no O(1)-per-size cost table for strategy {strategy.value}")
    costs = [0.0] * (n_max + 1)
    running = 0.0
    for n in range(2, n_max + 1):
        running += float(_diagonal_extra_sum(strategy, n - 2))
        costs[n] = (n - 1) + (n - 2) / 3.0 + running / math.comb(n, 2)
    return costs


# ---------------------------------------------------------------------------
# Counting strategies: dynamic programs over classification histories
# ---------------------------------------------------------------------------
#
# Medium elements influence neither these strategies' decisions nor the
# extra-comparison count, so both programs live on the (small, large) counts
# alone.


def act_oracle_table(n: int) -> list[list[Fraction]]:
    """Mean extra comparisons of the remaining-majority strategy, per cell.

    ``table[s][l]`` is the exact mean for a partition step whose remaining
    elements hold s smalls and l larges, examined in uniformly random order.
    The strategy tries the smaller pivot first iff s > l (ties try the
    larger pivot), re-deciding from the true remaining counts each step.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    top = n - 2
    table = [[Fraction(0)] * (top - i + 1) for i in range(top + 1)]
    for i in range(top + 1):
        for j in range(top - i + 1):
            if i + j == 0:
                continue
            pick_p = i > j
            value = Fraction(0)
            if i:  # next examined element is small
                value += Fraction(i, i + j) * ((0 if pick_p else 1) + table[i - 1][j])
            if j:  # next examined element is large
                value += Fraction(j, i + j) * ((1 if pick_p else 0) + table[i][j - 1])
            table[i][j] = value
    return table


def act_oracle_total(n: int) -> Fraction:
    """Mean extra comparisons of the remaining-majority strategy at size n."""
    table = act_oracle_table(n)
    total = sum(
        (table[s][lg] for s in range(n - 1) for lg in range(n - 1 - s)), Fraction(0)
    )
    return total / math.comb(n, 2)


def act_counting_cell(s: int, lg: int, *, exact: bool = True) -> Fraction | float:
    """Mean extra comparisons of the seen-majority strategy for one (s, l) cell.

    The strategy tries the smaller pivot first iff it has *seen* more smalls
    than larges so far (ties try the larger pivot).  Summing over the lattice
    walk of seen-counts (i, j): the walk visits (i, j) with probability
    C(i+j, i) * C(R, s-i) / C(s+l, s) where R = s + l - i - j, and the next
    element is then misclassified with probability (s-i)/R under a
    larger-first choice and (l-j)/R under a smaller-first choice, which
    absorb into binomials of R - 1.
    """
    if s < 0 or lg < 0:
        raise ValueError("cell counts must be nonnegative")
    t = s + lg
    if t == 0:
        return Fraction(0) if exact else 0.0
    if exact:
        total = 0
        for i in range(s + 1):
            for j in range(lg + 1):
                r = t - i - j
                if r == 0:
                    continue
                paths = math.comb(i + j, i)
                if i > j:  # smaller pivot first; larges pay
                    total += paths * math.comb(r - 1, s - i)
                else:  # larger pivot first; smalls pay
                    total += paths * math.comb(r - 1, s - i - 1) if i < s else 0
        return Fraction(total, math.comb(t, s))
    # Float mode: forward visit-probability program, O(s*l) flops.
    prev = [0.0] * (lg + 1)
    prev[0] = 1.0
    total = 0.0
    for i in range(s + 1):
        row = prev if i == 0 else None
        if row is None:
            row = [0.0] * (lg + 1)
            for j in range(lg + 1):
                rem = t - (i - 1) - j
                row[j] = prev[j] * (s - i + 1) / rem if rem else 0.0
        for j in range(1, lg + 1):
            rem = t - i - (j - 1)
            if rem:
                row[j] += row[j - 1] * (lg - j + 1) / rem
        for j in range(lg + 1):
            r = t - i - j
            if r == 0 or row[j] == 0.0:
                continue
            if i > j:
                total += row[j] * (lg - j) / r
            else:
                total += row[j] * (s - i) / r
        prev = row
    return total


def act_counting_total(n: int, *, exact: bool = True) -> Fraction | float:
    """Mean extra comparisons of the seen-majority strategy at size n."""
    if n < 2:
        raise ValueError("needs n >= 2")
    zero = Fraction(0) if exact else 0.0
    total = zero
    for s in range(n - 1):
        for lg in range(n - 1 - s):
            total += act_counting_cell(s, lg, exact=exact)
    return total / math.comb(n, 2)


# ---------------------------------------------------------------------------
# Swap-scheme means
# ---------------------------------------------------------------------------
#
# Conditioned on (s, m, l), over a uniformly random arrangement of the
# N = n - 2 classified elements the schemes make on average
#
#   one-sided (classify high, swap every non-medium):  s + l
#   skip-in-place smalls:                              s(N-s)/N + l
#   two-stage (smalls, then larges within the rest):   s(N-s)/N + lm/(N-s)
#
# swaps, plus two pivot-placement swaps each.  The switch model runs the
# skip-in-place scheme in whichever class orientation is cheaper: its cell
# cost is s(N-s)/N + l when s > l, else l(N-l)/N + s.


def _powsum(d: int, a: int, b: int) -> int:
    """Sum of k^d for k in a..b (d <= 3), via the Faulhaber polynomials."""
    if b < a:
        return 0

    def upto(m: int) -> int:
        if m < 0:
            return 0
        if d == 0:
            return m + 1
        if d == 1:
            return m * (m + 1) // 2
        if d == 2:
            return m * (m + 1) * (2 * m + 1) // 6
        if d == 3:
            return (m * (m + 1) // 2) ** 2
        raise ValueError("power sums implemented for d <= 3")

    return upto(b) - upto(a - 1)


def _swap_cell_sum(scheme, n: int) -> Fraction:
    """Sum over all (s, l) cells of the scheme's conditional mean swap count."""
    big_n = n - 2
    if big_n <= 0:
        return Fraction(0)
    if scheme is SwapSchemeId.SWAP_A_DIJKSTRA:
        # sum of (s + l) = 2 * C(n, 3)
        return Fraction(2 * math.comb(n, 3))
    if scheme is SwapSchemeId.SWAP_B_MEYER:
        # sum_s s(N-s)(N-s+1)/N  +  sum of l
        hyper = sum(s * (big_n - s) * (big_n - s + 1) for s in range(big_n + 1))
        return Fraction(hyper, big_n) + math.comb(n, 3)
    if scheme is SwapSchemeId.SWAP_C_CHEN:
        # first stage as above; second stage sums (R^2 - 1)/6 over R = N - s
        hyper = sum(s * (big_n - s) * (big_n - s + 1) for s in range(big_n + 1))
        second = Fraction(_powsum(2, 1, big_n) - big_n, 6)
        return Fraction(hyper, big_n) + second
    if scheme == SWITCH_SCHEME:
        return _switch_cell_sum(big_n)
    raise ValueError(f"unknown swap scheme: {scheme!r}")


def _switch_cell_sum(big_n: int) -> Fraction:
    """Closed form of sum_{s+l<=N} [s>l ? s(N-s)/N + l : l(N-l)/N + s].

    Mirror symmetry folds the sum onto s > l twice plus the diagonal.  For
    s > l the l-range is 0..min(s-1, N-s), which splits at h = floor(N/2)
    into power sums (checked exhaustively against the raw double sum).
    """
    if big_n <= 0:
        return Fraction(0)
    h = big_n // 2
    # U = sum_{s>l} s(N-s): count of l values is s for s <= h, N-s+1 beyond.
    u = sum(s * s * (big_n - s) for s in range(1, h + 1))
    u += sum(s * (big_n - s) * (big_n - s + 1) for s in range(h + 1, big_n + 1))
    # V = sum_{s>l} l = sum_s C(count, 2)
    v = sum(s * (s - 1) // 2 for s in range(1, h + 1))
    v += sum((big_n - s + 1) * (big_n - s) // 2 for s in range(h + 1, big_n + 1))
    # Diagonal s = l <= N/2 contributes s(N-s)/N + s once.
    diag_sl = _powsum(1, 0, h)
    diag_s2 = _powsum(2, 0, h)
    diag = Fraction(big_n * diag_sl - diag_s2, big_n) + diag_sl
    return Fraction(2 * u, big_n) + 2 * v + diag


def swap_partition_cost(scheme, n: int) -> Fraction:
    """Exact mean swap count of one partition step at subarray size n.

    ``scheme`` is a :class:`SwapSchemeId` or :data:`SWITCH_SCHEME`.  Includes
    the two pivot-placement swaps (counted even when they are self-swaps).
    """
    if n < 2:
        raise ValueError("a partition step needs n >= 2")
    return 2 + _swap_cell_sum(scheme, n) / math.comb(n, 2)


def swap_cost_table(scheme, n_max: int) -> list[float]:
    """Float per-size partition swap costs for sizes 0..n_max, O(1) per size.

    The one-sided scheme's cell sum telescopes over diagonals; the others
    involve size-dependent divisors, so their closed forms (quartic power
    sums) are evaluated directly per size.
    """
    costs = [0.0] * (n_max + 1)
    for n in range(2, n_max + 1):
        big_n = n - 2
        pairs = math.comb(n, 2)
        if scheme is SwapSchemeId.SWAP_A_DIJKSTRA:
            cell = 2.0 * math.comb(n, 3)
        elif scheme is SwapSchemeId.SWAP_B_MEYER:
            cell = _hyper_closed(big_n) + math.comb(n, 3)
        elif scheme is SwapSchemeId.SWAP_C_CHEN:
            cell = _hyper_closed(big_n)
            cell += (_powsum(2, 1, big_n) - big_n) / 6.0 if big_n else 0.0
        elif scheme == SWITCH_SCHEME:
            cell = _switch_closed(big_n)
        else:
            raise ValueError(f"unknown swap scheme: {scheme!r}")
        costs[n] = 2.0 + cell / pairs
    return costs


def _hyper_closed(big_n: int) -> float:
    """sum_s s(N-s)(N-s+1)/N as a closed polynomial (float)."""
    if big_n <= 0:
        return 0.0
    # sum s(N-s)(N-s+1) = (N+1)[N*P1 - P2] - [N*P2 - P3] with Pd = sum s^d.
    p1 = _powsum(1, 0, big_n)
    p2 = _powsum(2, 0, big_n)
    p3 = _powsum(3, 0, big_n)
    return ((big_n + 1) * (big_n * p1 - p2) - (big_n * p2 - p3)) / big_n


def _switch_closed(big_n: int) -> float:
    """Float of :func:`_switch_cell_sum` via power sums, O(1) per size."""
    if big_n <= 0:
        return 0.0
    h = big_n // 2
    # sum_{1..h} s^2 (N - s)  and  sum_{h+1..N} s(N-s)(N-s+1)
    u_low = big_n * _powsum(2, 1, h) - _powsum(3, 1, h)
    a, b = h + 1, big_n
    # expand s(N-s)(N-s+1) = s[(N)(N+1) - (2N+1)s + s^2]
    u_high = (
        big_n * (big_n + 1) * _powsum(1, a, b)
        - (2 * big_n + 1) * _powsum(2, a, b)
        + _powsum(3, a, b)
    )
    v = (_powsum(2, 1, h) - _powsum(1, 1, h)) // 2
    v += (
        big_n * (big_n + 1) * _powsum(0, a, b)
        - (2 * big_n + 1) * _powsum(1, a, b)
        + _powsum(2, a, b)
    ) // 2
    diag_sl = _powsum(1, 0, h)
    diag_s2 = _powsum(2, 0, h)
    diag = (big_n * diag_sl - diag_s2) / big_n + diag_sl
    return (2.0 * (u_low + u_high)) / big_n + 2.0 * v + diag


# ---------------------------------------------------------------------------
# Misplaced elements
# ---------------------------------------------------------------------------


def misplaced_group_mean(n: int) -> Fraction:
    """Mean size of one misplaced-element group at size n: (n - 3) / 12.

    With ordered pivots at the ends, the n - 2 in-between slots split into
    the three destination zones; each of the six (class, foreign zone)
    groups has the same mean occupancy.
    """
    if n < 3:
        raise ValueError("needs n >= 3 (no in-between slots otherwise)")
    return Fraction(n - 3, 12)


def misplaced_total_mean(n: int) -> Fraction:
    """Mean total count of elements outside their destination zone."""
    return 6 * misplaced_group_mean(n)


def misplaced_swap_lower_bound(n: int) -> Fraction:
    """Mean swaps any scheme needs: each swap fixes at most two elements."""
    return misplaced_total_mean(n) / 2


# ---------------------------------------------------------------------------
# Whole-sort recurrences
# ---------------------------------------------------------------------------


def solve_uniform_recurrence(costs) -> list:
    """Average sorting cost for every size given per-size partition costs.

    Under uniformly random ordered pivot pairs, the three subproblem sizes
    are an exchangeable composition of n - 2, giving

        E(C_n) = cost(n) + 6 / (n(n-1)) * sum_{k=0}^{n-2} (n-1-k) E(C_k).

    ``costs[n]`` is the partition cost at size n (entries 0 and 1 ignored);
    works with floats or fractions alike.  Returns E(C) for sizes 0..len-1.
    """
    n_max = len(costs) - 1
    if n_max < 0:
        return []
    zero = 0 * costs[-1]  # match the numeric type of the cost table
    out = [zero] * (n_max + 1)
    sum_e = zero  # sum of E(C_k) for k <= n-2
    sum_ke = zero  # sum of k * E(C_k) for k <= n-2
    for n in range(2, n_max + 1):
        # prefix sums currently cover k <= n-3; fold in k = n-2
        sum_e += out[n - 2]
        sum_ke += (n - 2) * out[n - 2]
        weighted = (n - 1) * sum_e - sum_ke
        out[n] = costs[n] + 6 * weighted / (n * (n - 1))
    return out


def solve_sample5_recurrence(costs, *, selection_overhead=None) -> list:
    """Average sorting cost per size with 5-sample tertile pivot selection.

    The pivot pair lands on (p, q) with probability s*m*l / C(n, 5), giving

        E(C_n) = cost(n) + c5 + 3/C(n,5) * sum_k k*C(n-1-k, 3)*E(C_k)

    for n >= 5, where c5 is the constant per-partition cost of sorting the
    sample (``selection_overhead``, defaulting to the exact insertion-sort
    mean on 5 random keys).  Sizes 2..4 fall back to the uniform-pair rule.
    The k-weight expands into powers of k, so four rolling moments give
    O(1) work per size.
    """
    n_max = len(costs) - 1
    if selection_overhead is None:
        selection_overhead = float(expected_sample_sort_comparisons(5))
    out = [0.0] * (n_max + 1)
    sum_e = 0.0
    sum_ke = 0.0
    moments = [0.0] * 5  # sum of k^j * E(C_k), j = 0..4, over k <= n-2
    for n in range(2, n_max + 1):
        k = n - 2
        e_k = out[k]
        sum_e += e_k
        sum_ke += k * e_k
        power = 1.0
        for j in range(5):
            moments[j] += power * e_k
            power *= k
        if n < 5:
            weighted = (n - 1) * sum_e - sum_ke
            out[n] = costs[n] + 6.0 * weighted / (n * (n - 1))
            continue
        a, b, c = n - 1, n - 2, n - 3
        # k * C(n-1-k, 3) * 6 = abc*k - (ab+ac+bc)*k^2 + (a+b+c)*k^3 - k^4
        e1 = a + b + c
        e2 = a * b + a * c + b * c
        e3 = a * b * c
        weighted = e3 * moments[1] - e2 * moments[2] + e1 * moments[3] - moments[4]
        out[n] = costs[n] + selection_overhead + weighted / (2 * math.comb(n, 5))
    return out


def expected_sample_sort_comparisons(k: int) -> Fraction:
    """Exact mean comparison count of insertion sort on k random keys."""
    if k < 0:
        raise ValueError("needs k >= 0")
    if k > 8:
        raise ValueError("exhaustive enumeration capped at k = 8")
    total = 0
    for perm in itertools.permutations(range(k)):
        vals = list(perm)
        for i in range(1, k):
            j = i
            while j > 0:
                total += 1  # comparison vals[j-1] vs vals[j]
                if vals[j - 1] <= vals[j]:
                    break
                vals[j - 1], vals[j] = vals[j], vals[j - 1]
                j -= 1
    return Fraction(total, math.factorial(k))


def leading_coefficient_estimate(value_n, value_2n, n: int) -> float:
    """Estimate a from cost(n) ~ a*n*ln(n) + b*n + o(n) by doubling.

    cost(2n) - 2*cost(n) = 2*ln(2)*a*n + o(n): the difference cancels the
    linear term exactly, unlike the naive quotient cost(n)/(n*ln n), whose
    b/ln(n) residue decays far too slowly to be usable.
    """
    return (value_2n - 2.0 * value_n) / (2.0 * math.log(2.0) * n)


# ---------------------------------------------------------------------------
# Sampled-pivot partition cost models
# ---------------------------------------------------------------------------


def sample5_partition_cost_yaroslavskiy(n: int) -> Fraction:
    """Exact mean partition comparisons of the three-pointer loop's cost
    model when the pivots are the tertiles of a 5-element sample.

    The model charges (n-2) + m + l(2s+m)/(n-2) per step; pivot pairs are
    weighted s*m*l / C(n, 5).  Tends to (34/21) n.
    """
    if n < 5:
        raise ValueError("5-sample selection needs n >= 5")
    big_n = n - 2
    total = 0
    for t in range(big_n + 1):
        m = big_n - t
        # sum over s+l=t of l(2s+m) * s*m*l  ==  m * (2*A + m*B), where
        # A = sum s^2 l^2 = (t^5 - t)/30 and B = sum s l^2 = (t^4 - t^2)/12.
        a_sum = (t**5 - t) // 30
        b_sum = (t**4 - t * t) // 12
        total += m * (2 * a_sum + m * b_sum)
    extra = Fraction(total, (n - 2) * math.comb(n, 5))
    return Fraction(n - 1) + Fraction(n - 2, 3) + extra


def sample5_partition_cost_ideal(n: int) -> Fraction:
    """Exact mean partition comparisons of the fewer-side-first model when
    the pivots are the tertiles of a 5-element sample.

    The model charges (n-2) + m + min(s, l) per step.  Tends to (37/24) n.
    """
    if n < 5:
        raise ValueError("5-sample selection needs n >= 5")
    big_n = n - 2
    total = 0
    for t in range(big_n + 1):
        m = big_n - t
        half = (t - 1) // 2  # s < t/2  <=>  s <= half
        # I(t) = sum over s+l=t of min(s,l)*s*l, folded onto s < t/2;
        # each folded term is s * s * (t - s) = t*s^2 - s^3.
        inner = 2 * (t * _powsum(2, 0, half) - _powsum(3, 0, half))
        if t % 2 == 0:
            inner += (t // 2) ** 3
        total += m * inner
    extra = Fraction(total, math.comb(n, 5))
    return Fraction(n - 1) + Fraction(n - 2, 3) + extra


def sample5_cost_table(model: str, n_max: int) -> list[float]:
    """Float per-size partition costs of a 5-sample tertile model, O(1)/size.

    ``model`` is ``"yaroslavskiy"`` or ``"ideal"``.  The per-diagonal sums
    depend on the size only through the medium count m = (n-2) - t, so
    expanding its powers leaves rolling sums over t.  Sizes 2..4 cannot
    fit a 5-element sample and get the uniform-pivot-pair model cost, the
    same fallback the sorting driver uses.
    """
    if model not in ("yaroslavskiy", "ideal"):
        raise ValueError("model must be 'yaroslavskiy' or 'ideal'")
    costs = [0.0] * (n_max + 1)
    for n in range(2, min(4, n_max) + 1):
        big_n = n - 2
        extra = 0.0
        for t in range(big_n + 1):
            m = big_n - t
            if model == "ideal":
                extra += sum(min(s, t - s) for s in range(t + 1))
            elif n > 2:
                extra += sum(
                    (t - s) * (2 * s + m) for s in range(t + 1)
                ) / big_n
        costs[n] = (n - 1) + (n - 2) / 3.0 + extra / math.comb(n, 2)
    # Rolling sums over the diagonal polynomials.
    sum_a = sum_ta = 0.0  # A(t) = sum s^2 l^2 and t*A(t)
    sum_b = sum_tb = sum_t2b = 0.0  # B(t) = sum s l^2, with t and t^2 weights
    sum_i = sum_ti = 0.0  # I(t) = sum min(s,l) s l and t*I(t)
    for n in range(2, n_max + 1):
        t = n - 2
        a_val = (t**5 - t) / 30.0
        b_val = (t**4 - t * t) / 12.0
        half = (t - 1) // 2
        i_val = 2.0 * (t * _powsum(2, 0, half) - _powsum(3, 0, half))
        if t % 2 == 0:
            i_val += float((t // 2) ** 3)
        sum_a += a_val
        sum_ta += t * a_val
        sum_b += b_val
        sum_tb += t * b_val
        sum_t2b += t * t * b_val
        sum_i += i_val
        sum_ti += t * i_val
        if n < 5:
            continue
        big_n = float(n - 2)
        if model == "yaroslavskiy":
            total = 2.0 * (big_n * sum_a - sum_ta)
            total += big_n * big_n * sum_b - 2.0 * big_n * sum_tb + sum_t2b
            total /= big_n
        else:
            total = big_n * sum_i - sum_ti
        pairs = math.lgamma(n + 1) - math.lgamma(6.0) - math.lgamma(n - 4)
        costs[n] = (n - 1) + (n - 2) / 3.0 + total * math.exp(-pairs)
    return costs


def sample_k_partition_cost(k: int, n: int, *, exact: bool = False) -> Fraction | float:
    """Mean partition comparisons of the fewer-side-first model with pivots
    drawn as the tertiles of a k-element sample (k = 3j + 2).

    Pivot pairs land on (s, m, l) with probability
    C(s,j) C(m,j) C(l,j) / C(n,k); the model charges (n-2) + m + min(s, l).
    The expected medium count stays (n-2)/3 by symmetry.  Exact mode sums
    big integers (fine up to a few thousand); float mode runs the same sums
    in float64, which C(n, k) keeps within range for n up to ~10^5.
    """
    if k < 5 or (k + 1) % 3:
        raise ValueError("sample size must satisfy k = 3j + 2, k >= 5")
    if n < k:
        raise ValueError("sample selection needs n >= k")
    j = (k - 2) // 3
    big_n = n - 2
    if exact:
        total = 0
        for t in range(big_n + 1):
            m_count = big_n - t
            weight_m = math.comb(m_count, j)
            if not weight_m:
                continue
            inner = 0
            for s in range(t + 1):
                inner += math.comb(s, j) * math.comb(t - s, j) * min(s, t - s)
            total += weight_m * inner
        extra = Fraction(total, math.comb(n, k))
        return Fraction(n - 1) + Fraction(n - 2, 3) + extra
    import numpy as np

    values = np.arange(big_n + 1, dtype=np.float64)
    binom_j = _float_binomials(big_n, j)
    total = 0.0
    for t in range(big_n + 1):
        weight_m = binom_j[big_n - t]
        if weight_m == 0.0:
            continue
        s = values[: t + 1]
        inner = binom_j[: t + 1] * binom_j[t::-1] * np.minimum(s, t - s)
        total += weight_m * float(inner.sum())
    log_pairs = math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)
    extra = total * math.exp(-log_pairs)
    return (n - 1) + (n - 2) / 3.0 + extra


def _float_binomials(n_max: int, j: int):
    """Float array of C(v, j) for v = 0..n_max."""
    import numpy as np

    out = np.zeros(n_max + 1, dtype=np.float64)
    if j > n_max:
        return out
    value = 1.0
    out[j] = 1.0
    for v in range(j + 1, n_max + 1):
        value = out[v - 1] * v / (v - j)
        out[v] = value
    return out


def median_classic_coefficient(k: int) -> float:
    """n*ln(n) coefficient of classical quicksort with median-of-k pivots."""
    if k < 1 or k % 2 == 0:
        raise ValueError("median selection needs odd k >= 1")
    return 1.0 / float(harmonic(k + 1) - harmonic((k + 1) // 2))


def tertile_dual_coefficient(k: int, a: float) -> float:
    """n*ln(n) coefficient of dual-pivot quicksort with k-sample tertile
    pivots and partition cost a*n + O(n^(1-eps))."""
    if k < 5 or (k + 1) % 3:
        raise ValueError("tertile selection needs k = 3j + 2, k >= 5")
    return a / float(harmonic(k + 1) - harmonic((k + 1) // 3))


def sample_table_entries(k: int, n: int) -> tuple[float, float]:
    """(median-of-k classic, tertile-of-k dual-pivot) n*ln(n) coefficients.

    The classic entry is closed-form (partition cost n - 1, so a = 1); the
    dual-pivot entry evaluates the fewer-side-first sampled model at finite
    size n to estimate its linear coefficient.
    """
    a = sample_k_partition_cost(k, n) / n
    return median_classic_coefficient(k), tertile_dual_coefficient(k, a)


# ---------------------------------------------------------------------------
# Balanced even-length suffixes (zero crossings)
# ---------------------------------------------------------------------------


def expected_zero_crossings(n: int, *, exact: bool | None = None) -> Fraction | float:
    """Mean count of balanced even-length suffixes of a two-class sequence.

    Model: s is uniform on 1..n/2, the s smalls sit in uniformly random
    positions among n - s larges, and a suffix of length 2i is balanced when
    it holds i of each class:

        E(Z_n) = (2/n) * sum_{i,s} C(2i, i) * C(n-2i, s-i) / C(n, s).

    Even n only.  Exact mode returns a fraction (big binomials; meant for
    n up to a few hundred); float mode works in log space.
    """
    if n < 2 or n % 2:
        raise ValueError("the balanced-suffix statistic needs even n >= 2")
    if exact is None:
        exact = n <= 256
    half = n // 2
    if exact:
        total = Fraction(0)
        for s in range(1, half + 1):
            acc = 0
            for i in range(1, s + 1):
                acc += math.comb(2 * i, i) * math.comb(n - 2 * i, s - i)
            total += Fraction(acc, math.comb(n, s))
        return Fraction(2, n) * total
    log_fact = [0.0] * (n + 1)
    for v in range(2, n + 1):
        log_fact[v] = log_fact[v - 1] + math.log(v)

    def log_comb(a: int, b: int) -> float:
        return log_fact[a] - log_fact[b] - log_fact[a - b]

    total = 0.0
    for s in range(1, half + 1):
        log_denom = log_comb(n, s)
        acc = 0.0
        for i in range(1, s + 1):
            acc += math.exp(
                log_comb(2 * i, i) + log_comb(n - 2 * i, s - i) - log_denom
            )
        total += acc
    return 2.0 * total / n
