"""Monte-Carlo benchmark harness: seeded trial runs aggregated per size.

Each (size, configuration) pair runs a fixed number of independent trials.
Trial ``t`` at size ``n`` always uses the permutation stream seeded with
``derive_seed(master, n, t, 0)`` and the coin stream seeded with
``derive_seed(master, n, t, 1)``, so results depend only on the run spec —
not on the worker count, the trial execution order, or the engine (the
compiled kernels and the pure-Python engine produce identical counts; the
parity suite enforces that).

Integer-key runs sort fresh random permutations of 1..n.  String-key runs
sort reshuffles of a fixed n-line sample drawn from a deduplicated corpus
(the sample is chosen once per size with the corpus stream
``derive_seed(master, n, 2)``).

Wall-clock timings are deliberately not part of the records (identical run
specs must produce byte-identical tables); they are emitted as
informational log lines instead.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import GENERATOR_ID, SplitMix64, derive_seed, random_permutation
from .sort import SortConfig, dual_pivot_quicksort

__all__ = ["GENERATOR_ID", "BenchRecord", "run_bench", "prepare_string_keys"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRecord:
    """Aggregated counts for one (size, configuration) benchmark cell.

    ``scaled_comparisons`` is ``mean_comparisons / (n * ln(n))`` (0 when the
    scale factor is not positive, i.e. n < 2).  ``seed`` is the run's master
    seed; per-trial seeds derive from it.  ``string_keys`` flags corpus runs.
    """

    n: int
    strategy: str
    selector: str
    trials: int
    mean_comparisons: float
    stderr_comparisons: float
    mean_swaps: float
    stderr_swaps: float
    scaled_comparisons: float
    seed: int
    generator_id: str
    string_keys: bool


def _mean_stderr(values) -> tuple[float, float]:
    a = np.asarray(values, dtype=np.float64)
    mean = float(a.mean()) if a.size else 0.0
    stderr = float(a.std(ddof=1) / math.sqrt(a.size)) if a.size > 1 else 0.0
    return mean, stderr


def _trial_ranges(trials: int, workers: int) -> list[tuple[int, int]]:
    """Split 0..trials into per-worker (start, count) ranges."""
    parts = max(1, min(workers, trials))
    bounds = [trials * i // parts for i in range(parts + 1)]
    return [(a, b - a) for a, b in zip(bounds, bounds[1:]) if b > a]


# --- trial executors (module-level so worker processes can import them) -----


def _run_int_kernel(args):
    codes, n, start, count, master = args
    from . import _kernels as K

    comps, swaps, ok = K.batch_sort_random(*codes, n, start, count, np.uint64(master))
    if ok != count:
        raise RuntimeError(f"sorted-output verification failed at n={n}")
    return start, np.asarray(comps), np.asarray(swaps)


def _run_int_pure(args):
    config, n, start, count, master = args
    comps = np.empty(count, np.int64)
    swaps = np.empty(count, np.int64)
    for i in range(count):
        t = start + i
        arr = random_permutation(n, derive_seed(master, n, t, 0))
        trial_config = SortConfig(
            partitioner=config.partitioner,
            selector=config.selector,
            cutoff=config.cutoff,
            seed=derive_seed(master, n, t, 1),
        )
        counters = dual_pivot_quicksort(arr, trial_config)
        if arr != list(range(1, n + 1)):
            raise RuntimeError(f"sorted-output verification failed at n={n}")
        comps[i] = counters.comparisons
        swaps[i] = counters.swaps
    return start, comps, swaps


def _run_strings(args):
    config, keys, n, start, count, master = args
    comps = np.empty(count, np.int64)
    swaps = np.empty(count, np.int64)
    expected = sorted(keys)
    for i in range(count):
        t = start + i
        arr = list(keys)
        SplitMix64(derive_seed(master, n, t, 0)).shuffle(arr)
        trial_config = SortConfig(
            partitioner=config.partitioner,
            selector=config.selector,
            cutoff=config.cutoff,
            seed=derive_seed(master, n, t, 1),
        )
        counters = dual_pivot_quicksort(arr, trial_config)
        if arr != expected:
            raise RuntimeError(f"sorted-output verification failed at n={n}")
        comps[i] = counters.comparisons
        swaps[i] = counters.swaps
    return start, comps, swaps


def _collect(task_fn, tasks, trials: int, workers: int):
    comps = np.empty(trials, np.int64)
    swaps = np.empty(trials, np.int64)
    if len(tasks) == 1 or workers <= 1:
        results = map(task_fn, tasks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(task_fn, tasks))
    for start, c, s in results:
        comps[start : start + len(c)] = c
        swaps[start : start + len(s)] = s
    return comps, swaps


def prepare_string_keys(lines, n: int, master_seed: int) -> list[str]:
    """Fixed n-key sample for string benchmarks: dedupe, seeded shuffle, take n."""
    distinct = list(dict.fromkeys(lines))
    if n > len(distinct):
        raise ValueError(
            f"corpus has only {len(distinct)} distinct lines; cannot sample n={n}"
        )
    SplitMix64(derive_seed(master_seed, n, 2)).shuffle(distinct)
    return distinct[:n]


def run_bench(
    sizes,
    config: SortConfig,
    trials: int,
    master_seed: int,
    *,
    workers: int = 1,
    corpus_lines=None,
    engine: str = "auto",
) -> list[BenchRecord]:
    """Run the benchmark matrix; one :class:`BenchRecord` per size.

    ``engine`` is ``auto`` (compiled kernels for integer keys, pure Python
    for strings), ``kernels``, or ``python``.  Identical arguments produce
    identical records regardless of ``workers`` or engine.
    """
    if trials < 1:
        raise ValueError("bench needs trials >= 1")
    if not sizes:
        raise ValueError("bench needs at least one size")
    if engine not in ("auto", "kernels", "python"):
        raise ValueError(f"unknown engine {engine!r}")
    if corpus_lines is not None and engine == "kernels":
        raise ValueError("string keys run on the pure engine only")

    records = []
    for n in sizes:
        started = time.perf_counter()
        ranges = _trial_ranges(trials, workers)
        if corpus_lines is not None:
            keys = tuple(prepare_string_keys(corpus_lines, n, master_seed))
            tasks = [(config, keys, n, a, c, master_seed) for a, c in ranges]
            comps, swaps = _collect(_run_strings, tasks, trials, workers)
        elif engine == "python":
            tasks = [(config, n, a, c, master_seed) for a, c in ranges]
            comps, swaps = _collect(_run_int_pure, tasks, trials, workers)
        else:
            from ._kernels import codes_for

            codes = codes_for(config)
            tasks = [(codes, n, a, c, master_seed) for a, c in ranges]
            comps, swaps = _collect(_run_int_kernel, tasks, trials, workers)

        mean_c, se_c = _mean_stderr(comps)
        mean_s, se_s = _mean_stderr(swaps)
        scale = n * math.log(n) if n >= 2 else 0.0
        records.append(
            BenchRecord(
                n=n,
                strategy=config.partitioner.label(),
                selector=config.selector.label(),
                trials=trials,
                mean_comparisons=mean_c,
                stderr_comparisons=se_c,
                mean_swaps=mean_s,
                stderr_swaps=se_s,
                scaled_comparisons=mean_c / scale if scale > 0 else 0.0,
                seed=master_seed,
                generator_id=GENERATOR_ID,
                string_keys=corpus_lines is not None,
            )
        )
        logger.info(
            "bench timing (informational): n=%d %s/%s trials=%d elapsed=%.3fs",
            n,
            config.partitioner.label(),
            config.selector.label(),
            trials,
            time.perf_counter() - started,
        )
    return records
