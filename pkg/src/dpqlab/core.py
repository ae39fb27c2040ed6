"""Counted primitives shared by every sorting and partitioning routine.

All cost accounting in this package flows through exactly two choke points:
``compare_lt`` (one key comparison) and ``swap_elements`` (one exchange).
The conventions, fixed here once so that every higher layer agrees with the
analytical model:

* every call to ``compare_lt`` increments the comparison counter, including
  boundary/guard comparisons that a cleverer implementation could skip;
* every call to ``swap_elements`` increments the swap counter, *including
  self-swaps* (``i == j``) — degenerate pivot placements pay for their swap;
* index arithmetic (loop guards such as ``k <= g``) is never counted;
* keys of mixed kinds (numbers vs strings) refuse to compare.

Randomness comes from splitmix64, a tiny, well-documented 64-bit generator
(Steele, Lea & Flood's SplittableRandom finalizer).  It is used both for
random permutations (via an unbiased rejection-sampling Fisher-Yates
shuffle) and as the counted-out coin stream for randomized classification
strategies.  The compiled batch engine reproduces the exact same streams,
so both engines generate identical inputs and identical coin flips for a
given seed.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "CostCounters",
    "SplitMix64",
    "compare_lt",
    "swap_elements",
    "random_permutation",
    "derive_seed",
    "verify_sorted_permutation",
    "GENERATOR_ID",
]

#: Identifier recorded in benchmark output rows so results can be traced to
#: the exact input-generation procedure.
GENERATOR_ID = "splitmix64-fisher-yates-v1"

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


@dataclass
class CostCounters:
    """Mutable comparison/swap tallies threaded through the algorithms."""

    comparisons: int = 0
    swaps: int = 0

    def reset(self) -> None:
        self.comparisons = 0
        self.swaps = 0

    def copy(self) -> "CostCounters":
        return CostCounters(self.comparisons, self.swaps)


def _mix64(z: int) -> int:
    """splitmix64 finalizer: avalanche a 64-bit state into an output word."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 stream: state advances by the golden-gamma each draw.

    Provides unbiased bounded integers via rejection sampling, a Fisher-
    Yates shuffle built on them, and fair coins for randomized strategies.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        return _mix64(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) with no modulo bias (rejection loop)."""
        if n <= 0:
            raise ValueError("randbelow requires n >= 1")
        # Largest multiple of n that fits in 64 bits; draws at or above it
        # would wrap unevenly, so they are rejected.
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def shuffle(self, arr: list) -> None:
        """In-place Fisher-Yates shuffle (uniform over all permutations)."""
        for i in range(len(arr) - 1, 0, -1):
            j = self.randbelow(i + 1)
            arr[i], arr[j] = arr[j], arr[i]

    def coin(self) -> bool:
        """Fair coin."""
        return bool(self.next_u64() & 1)

    def chance(self, num: int, den: int) -> bool:
        """True with probability exactly num/den (integer arithmetic)."""
        if den <= 0:
            raise ValueError("chance requires den >= 1")
        return self.randbelow(den) < num


def derive_seed(master_seed: int, *keys: int) -> int:
    """Derive a child seed from a master seed and an index tuple.

    Deterministic and order-sensitive, so (seed, trial) pairs map to the
    same child stream no matter how trials are scheduled across workers.
    """
    state = _mix64(master_seed & _MASK64)
    for k in keys:
        state = _mix64(state ^ _mix64((k & _MASK64) + _GAMMA))
    return state


def _is_string_key(key) -> bool:
    return isinstance(key, str)


def compare_lt(a, b, counters: CostCounters) -> bool:
    """Counted strict key comparison ``a < b``.

    Mixed-kind comparisons (number vs string) are refused: they indicate a
    caller bug, not an ordering question.
    """
    if _is_string_key(a) != _is_string_key(b):
        raise TypeError(
            f"cannot compare keys of different kinds: {type(a).__name__} vs {type(b).__name__}"
        )
    counters.comparisons += 1
    return a < b


def swap_elements(arr, i: int, j: int, counters: CostCounters) -> None:
    """Counted exchange ``arr[i] <-> arr[j]``; self-swaps (i == j) count too."""
    counters.swaps += 1
    arr[i], arr[j] = arr[j], arr[i]


def random_permutation(n: int, seed: int) -> list[int]:
    """Uniform random permutation of 1..n driven by splitmix64(seed)."""
    if n < 0:
        raise ValueError("permutation size must be nonnegative")
    arr = list(range(1, n + 1))
    SplitMix64(seed).shuffle(arr)
    return arr


def verify_sorted_permutation(output, original) -> bool:
    """Check that ``output`` is ascending and a rearrangement of ``original``.

    Works for inputs with duplicate keys (multiset equality, non-strict
    ascending order).
    """
    if len(output) != len(original):
        return False
    for i in range(1, len(output)):
        if output[i] < output[i - 1]:
            return False
    return sorted(original) == list(output)
