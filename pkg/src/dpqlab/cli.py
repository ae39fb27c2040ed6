"""Command-line front end: benchmarks, exact tables, oracle cross-checks.

Subcommands
-----------
``sort``
    One seeded, verified sort per size (or of an input corpus sample);
    emits the counted comparisons/swaps.
``bench``
    Monte-Carlo runs: one aggregated record per size (see
    :class:`dpqlab.bench.BenchRecord` for the schema).
``exact``
    Exact-analysis tables: mean partition cost, mean sort cost from the
    size recurrence, and the doubling estimate of the n·ln n coefficient,
    for a strategy, a swap scheme, or a 5-sample pivot model.  The two
    counting strategies run through their history dynamic programs and
    report the partition cost only, at sizes the programs can afford.
``table1``
    Leading-coefficient comparison of median-of-k classic quicksort vs
    tertile-of-k dual-pivot quicksort for k in {5, 11, 17, 41}, printed
    beside the frozen reference values.
``zerocross``
    Expected balanced-suffix (zero-crossing) counts with doubling
    differences.
``oracle-check``
    Re-derives the exhaustive-enumeration means and compares them with the
    closed-form analysis values; any mismatch is reported and exits 2.

Output contract: the header row is always present; identical invocations
produce byte-identical output (wall-clock timings go to stderr as
informational log lines only); decimals use ``.``, exact rationals render
as ``num/den``; JSON output mirrors the CSV rows one object per row.
Exit codes: 0 success, 1 usage/configuration error, 2 oracle mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import analysis, oracle
from .bench import GENERATOR_ID, BenchRecord, prepare_string_keys, run_bench
from .classify import SampleRule, StrategyId
from .core import CostCounters, SplitMix64, derive_seed, random_permutation
from .partition import PartitionerId, PartitionerSpec, SwapSchemeId
from .sort import SelectorMode, SelectorSpec, SortConfig, dual_pivot_quicksort

__all__ = ["RunSpec", "main"]

logger = logging.getLogger(__name__)

#: Frozen reference values for the table1 command: leading n·ln n
#: coefficients of median-of-k classic and tertile-of-k dual-pivot
#: quicksort at k = 5, 11, 17, 41.
TABLE1_KS = (5, 11, 17, 41)
TABLE1_CLASSIC_REFERENCE = {5: 1.622, 11: 1.531, 17: 1.501, 41: 1.468}
TABLE1_DUAL_REFERENCE = {5: 1.623, 11: 1.545, 17: 1.523, 41: 1.504}

#: Size at which the finite 5-sample/tertile models are evaluated for
#: coefficient extraction (drift below the working tolerance there).
TABLE1_MODEL_SIZE = 10_000

#: Largest size for which `exact` emits big-rational values; beyond this
#: the float tables take over (the rational column is left empty).
EXACT_RATIONAL_LIMIT = 10_000


@dataclass(frozen=True)
class RunSpec:
    """Everything one CLI invocation does; equal specs give identical output."""

    command: str
    sizes: tuple[int, ...]
    trials: int
    seed: int
    partitioner: str | None
    strategy: str | None
    selector: str
    cutoff: int
    swap_scheme: str | None
    sample_rule: str
    input_path: str | None
    out: str | None
    fmt: str
    workers: int


class _Parser(argparse.ArgumentParser):
    """argparse with the documented exit code for usage errors (1, not 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


class UsageError(ValueError):
    """Invalid flag combination or unusable input; exits 1."""


# --- spec -> domain objects ---------------------------------------------------


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise UsageError(f"sizes must be comma-separated integers, got {text!r}")
    if not sizes:
        raise UsageError("needs at least one size")
    if any(n < 0 for n in sizes):
        raise UsageError("sizes must be nonnegative")
    return sizes


def _parse_selector(text: str) -> SelectorSpec:
    name, _, karg = text.partition(":")
    try:
        mode = SelectorMode(name)
    except ValueError:
        choices = ", ".join(m.value for m in SelectorMode)
        raise UsageError(f"unknown selector {name!r} (choices: {choices})")
    k = None
    if karg:
        try:
            k = int(karg)
        except ValueError:
            raise UsageError(f"selector sample size must be an integer, got {karg!r}")
    try:
        return SelectorSpec(mode, k)
    except ValueError as exc:
        raise UsageError(str(exc))


def _partitioner_from(spec: RunSpec) -> PartitionerSpec:
    strategy = StrategyId(spec.strategy) if spec.strategy else None
    scheme = SwapSchemeId(spec.swap_scheme) if spec.swap_scheme else None
    rule = SampleRule(spec.sample_rule)
    name = spec.partitioner
    if name is None:
        name = "composed" if (strategy or scheme) else "yaroslavskiy"
    kind = PartitionerId(name)
    try:
        if kind is PartitionerId.COMPOSED:
            if strategy is None or scheme is None:
                raise UsageError(
                    "the composed partitioner needs both --strategy and --swap-scheme"
                )
            return PartitionerSpec(kind, strategy=strategy, swap_scheme=scheme)
        if kind is PartitionerId.N_SAMPLED:
            return PartitionerSpec(kind, sample_rule=rule)
        if strategy is not None or scheme is not None:
            raise UsageError(
                f"partitioner {kind.value!r} does not take a strategy or swap scheme"
            )
        return PartitionerSpec(kind)
    except ValueError as exc:
        raise UsageError(str(exc))


def _sort_config(spec: RunSpec) -> SortConfig:
    selector = _parse_selector(spec.selector)
    if selector.mode is SelectorMode.MEDIAN_OF_K:
        raise UsageError("median_of_k picks a single pivot; dual-pivot runs need a tertile selector")
    try:
        return SortConfig(
            partitioner=_partitioner_from(spec),
            selector=selector,
            cutoff=spec.cutoff,
            seed=spec.seed,
        )
    except ValueError as exc:
        raise UsageError(str(exc))


def _read_corpus(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return [line.rstrip("\n") for line in fh if line.rstrip("\n")]
    except OSError as exc:
        raise UsageError(f"cannot read input file: {exc}")


# --- row formatting ------------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def _json_value(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return float(value)
    return value


def emit_rows(rows: list[dict], fmt: str, out):
    if fmt == "json":
        payload = [{k: _json_value(v) for k, v in row.items()} for row in rows]
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    if rows:
        writer.writerow(rows[0].keys())
        for row in rows:
            writer.writerow([_cell(v) for v in row.values()])


# --- sort ----------------------------------------------------------------------


def _sort_rows_int(spec: RunSpec, config: SortConfig) -> list[dict]:
    import numpy as np

    from . import _kernels as K

    rows = []
    kind, strat, scheme, rule, sel_mode, sel_k, cutoff = K.codes_for(config)
    for n in spec.sizes:
        perm = random_permutation(n, derive_seed(spec.seed, n, 0, 0))
        arr = np.array(perm, dtype=np.int64) if perm else np.empty(0, np.int64)
        coin = derive_seed(spec.seed, n, 0, 1)
        comps, swaps = K.run_sort_seeded(
            arr, kind, strat, scheme, rule, sel_mode, sel_k, cutoff, np.uint64(coin)
        )
        rows.append(_sort_row(spec, config, n, comps, swaps, list(arr) == sorted(perm)))
    return rows


def _sort_rows_strings(spec: RunSpec, config: SortConfig, lines: list[str]) -> list[dict]:
    rows = []
    sizes = spec.sizes or (len(dict.fromkeys(lines)),)
    for n in sizes:
        keys = prepare_string_keys(lines, n, spec.seed)
        arr = list(keys)
        SplitMix64(derive_seed(spec.seed, n, 0, 0)).shuffle(arr)
        config_n = SortConfig(
            partitioner=config.partitioner,
            selector=config.selector,
            cutoff=config.cutoff,
            seed=derive_seed(spec.seed, n, 0, 1),
        )
        counters = dual_pivot_quicksort(arr, config_n)
        rows.append(
            _sort_row(
                spec, config, n, counters.comparisons, counters.swaps,
                arr == sorted(keys), string_keys=True,
            )
        )
    return rows


def _sort_row(spec, config, n, comps, swaps, verified, *, string_keys=False) -> dict:
    return {
        "n": n,
        "partitioner": config.partitioner.label(),
        "selector": config.selector.label(),
        "cutoff": config.cutoff,
        "comparisons": int(comps),
        "swaps": int(swaps),
        "verified": bool(verified),
        "seed": spec.seed,
        "string_keys": string_keys,
    }


def cmd_sort(spec: RunSpec) -> tuple[list[dict], int]:
    config = _sort_config(spec)
    if spec.input_path is not None:
        rows = _sort_rows_strings(spec, config, _read_corpus(spec.input_path))
    else:
        if not spec.sizes:
            raise UsageError("sort needs --sizes (or --input)")
        rows = _sort_rows_int(spec, config)
    return rows, 0


# --- bench ---------------------------------------------------------------------


def cmd_bench(spec: RunSpec) -> tuple[list[dict], int]:
    if spec.trials < 1:
        raise UsageError("bench needs --trials >= 1")
    if not spec.sizes:
        raise UsageError("bench needs --sizes")
    config = _sort_config(spec)
    corpus = _read_corpus(spec.input_path) if spec.input_path is not None else None
    try:
        records = run_bench(
            list(spec.sizes),
            config,
            spec.trials,
            spec.seed,
            workers=spec.workers,
            corpus_lines=corpus,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    return [vars(rec).copy() for rec in records], 0


# --- exact ---------------------------------------------------------------------


def _exact_strategy_rows(strategy: StrategyId, sizes, rule: SampleRule) -> list[dict]:
    n_top = 2 * max(sizes)
    try:
        costs = analysis.comparison_cost_table(strategy, n_top)
    except ValueError as exc:
        raise UsageError(str(exc))
    sort_means = analysis.solve_uniform_recurrence(costs)
    rows = []
    for n in sizes:
        if n < 2:
            raise UsageError("exact tables need sizes >= 2")
        exact_val = (
            analysis.exact_partition_cost(strategy, n)
            if n <= EXACT_RATIONAL_LIMIT
            else None
        )
        rows.append(_exact_row(strategy.value, "uniform_ends", "partition_comparisons",
                               n, exact_val, costs[n]))
        rows.append(_exact_row(strategy.value, "uniform_ends", "sort_comparisons",
                               n, None, sort_means[n]))
        coeff = analysis.leading_coefficient_estimate(sort_means[n], sort_means[2 * n], n)
        rows.append(_exact_row(strategy.value, "uniform_ends", "leading_coefficient",
                               n, None, coeff))
    return rows


def _exact_scheme_rows(scheme, sizes) -> list[dict]:
    label = scheme if isinstance(scheme, str) else scheme.value
    n_top = 2 * max(sizes)
    costs = analysis.swap_cost_table(scheme, n_top)
    sort_means = analysis.solve_uniform_recurrence(costs)
    rows = []
    for n in sizes:
        if n < 2:
            raise UsageError("exact tables need sizes >= 2")
        exact_val = (
            analysis.swap_partition_cost(scheme, n)
            if n <= EXACT_RATIONAL_LIMIT
            else None
        )
        rows.append(_exact_row(label, "uniform_ends", "partition_swaps",
                               n, exact_val, costs[n]))
        rows.append(_exact_row(label, "uniform_ends", "sort_swaps",
                               n, None, sort_means[n]))
        coeff = analysis.leading_coefficient_estimate(sort_means[n], sort_means[2 * n], n)
        rows.append(_exact_row(label, "uniform_ends", "leading_coefficient",
                               n, None, coeff))
    return rows


#: The counting strategies have no O(1)-per-size cost table, so `exact`
#: serves their per-partition cost straight from the history dynamic
#: programs: rationals up to the first limit, floats up to the second,
#: and no sort-recurrence rows (those need costs at every size).
_DP_STRATEGIES = (StrategyId.O_ORACLE, StrategyId.L_COUNTING)
_DP_RATIONAL_LIMIT = 64
_DP_SIZE_LIMIT = 128


def _exact_dp_strategy_rows(strategy: StrategyId, sizes) -> list[dict]:
    rows = []
    for n in sizes:
        if n < 2:
            raise UsageError("exact tables need sizes >= 2")
        if n > _DP_SIZE_LIMIT:
            raise UsageError(
                f"the counting strategies' dynamic programs are capped at n = {_DP_SIZE_LIMIT}"
            )
        if n <= _DP_RATIONAL_LIMIT:
            value = analysis.exact_partition_cost(strategy, n)
            rows.append(_exact_row(strategy.value, "uniform_ends",
                                   "partition_comparisons", n, value, float(value)))
        else:
            base = (n - 1) + (n - 2) / 3.0
            if strategy is StrategyId.O_ORACLE:
                extra = float(analysis.act_oracle_total(n))
            else:
                extra = analysis.act_counting_total(n, exact=False)
            rows.append(_exact_row(strategy.value, "uniform_ends",
                                   "partition_comparisons", n, None, base + extra))
    return rows


_SAMPLE5_MODELS = {
    StrategyId.SMALLER_FIRST: "yaroslavskiy",
    StrategyId.N_IDEAL: "ideal",
}


def _exact_sample5_rows(strategy: StrategyId, sizes) -> list[dict]:
    model = _SAMPLE5_MODELS.get(strategy)
    if model is None:
        names = ", ".join(s.value for s in _SAMPLE5_MODELS)
        raise UsageError(f"5-sample exact models exist for strategies: {names}")
    n_top = 2 * max(sizes)
    costs = analysis.sample5_cost_table(model, n_top)
    sort_means = analysis.solve_sample5_recurrence(costs)
    exact_fn = (
        analysis.sample5_partition_cost_yaroslavskiy
        if model == "yaroslavskiy"
        else analysis.sample5_partition_cost_ideal
    )
    rows = []
    for n in sizes:
        if n < 2:
            raise UsageError("exact tables need sizes >= 2")
        exact_val = exact_fn(n) if n <= EXACT_RATIONAL_LIMIT else None
        rows.append(_exact_row(strategy.value, "sample5_tertiles",
                               "partition_comparisons", n, exact_val, costs[n]))
        rows.append(_exact_row(strategy.value, "sample5_tertiles",
                               "sort_comparisons", n, None, sort_means[n]))
        coeff = analysis.leading_coefficient_estimate(sort_means[n], sort_means[2 * n], n)
        rows.append(_exact_row(strategy.value, "sample5_tertiles",
                               "leading_coefficient", n, None, coeff))
    return rows


def _exact_row(strategy, pivot_model, metric, n, value_exact, value_decimal) -> dict:
    return {
        "n": n,
        "strategy": strategy,
        "pivot_model": pivot_model,
        "metric": metric,
        "value_exact": value_exact,
        "value_decimal": float(value_decimal),
    }


def cmd_exact(spec: RunSpec) -> tuple[list[dict], int]:
    if not spec.sizes:
        raise UsageError("exact needs --sizes")
    selector = _parse_selector(spec.selector)
    rows: list[dict] = []
    if spec.swap_scheme is not None:
        scheme = (
            analysis.SWITCH_SCHEME
            if spec.swap_scheme == analysis.SWITCH_SCHEME
            else SwapSchemeId(spec.swap_scheme)
        )
        rows += _exact_scheme_rows(scheme, spec.sizes)
    if spec.strategy is not None or spec.swap_scheme is None:
        strategy = StrategyId(spec.strategy) if spec.strategy else StrategyId.SMALLER_FIRST
        if selector.mode is SelectorMode.SAMPLE5_TERTILES:
            rows += _exact_sample5_rows(strategy, spec.sizes)
        elif selector.mode is SelectorMode.DIRECT_ENDS:
            if strategy in _DP_STRATEGIES:
                rows += _exact_dp_strategy_rows(strategy, spec.sizes)
            else:
                rows += _exact_strategy_rows(strategy, spec.sizes, SampleRule(spec.sample_rule))
        else:
            raise UsageError(
                "exact models exist for selectors direct_ends and sample5_tertiles"
            )
    return rows, 0


# --- table1 --------------------------------------------------------------------


def cmd_table1(spec: RunSpec) -> tuple[list[dict], int]:
    rows = []
    for k in TABLE1_KS:
        classic, dual = analysis.sample_table_entries(k, TABLE1_MODEL_SIZE)
        rows.append(
            {
                "k": k,
                "classic_median_coefficient": classic,
                "classic_reference": TABLE1_CLASSIC_REFERENCE[k],
                "dual_tertile_coefficient": dual,
                "dual_reference": TABLE1_DUAL_REFERENCE[k],
            }
        )
    return rows, 0


# --- zerocross -----------------------------------------------------------------


def cmd_zerocross(spec: RunSpec) -> tuple[list[dict], int]:
    if not spec.sizes:
        raise UsageError("zerocross needs --sizes")
    rows = []
    for n in spec.sizes:
        if n < 2 or n % 2:
            raise UsageError("the balanced-suffix statistic needs even sizes >= 2")
        value = analysis.expected_zero_crossings(n)
        doubled = analysis.expected_zero_crossings(2 * n)
        rows.append(
            {
                "n": n,
                "value_exact": value if isinstance(value, Fraction) else None,
                "value_decimal": float(value),
                "doubling_difference": float(doubled) - float(value),
            }
        )
    return rows, 0


# --- oracle-check --------------------------------------------------------------

_CHECK_STRATEGIES = (
    StrategyId.SMALLER_FIRST,
    StrategyId.LARGER_FIRST,
    StrategyId.ALTERNATE,
    StrategyId.N_IDEAL,
    StrategyId.O_ORACLE,
    StrategyId.L_COUNTING,
    StrategyId.S_ABSTRACT,
)


def _check_partition_comparisons(n: int):
    if n < 2:
        return
    for strategy in _CHECK_STRATEGIES:
        want = oracle.strategy_partition_comparisons(n, strategy)
        got = analysis.exact_partition_cost(strategy, n)
        yield f"partition_comparisons[{strategy.value}]", want, got


def _check_act_tables(n: int):
    if n < 2:
        return
    want_o = oracle.strategy_act_table(n, StrategyId.O_ORACLE)
    table_o = analysis.act_oracle_table(n)
    for (s, lg), want in sorted(want_o.items()):
        yield f"act_cell[o_oracle,s={s},l={lg}]", want, table_o[s][lg]
    want_l = oracle.strategy_act_table(n, StrategyId.L_COUNTING)
    for (s, lg), want in sorted(want_l.items()):
        got = analysis.act_counting_cell(s, lg)
        yield f"act_cell[l_counting,s={s},l={lg}]", want, got


def _check_swap_means(n: int):
    if n < 2:
        return
    for scheme in SwapSchemeId:
        spec = PartitionerSpec(
            PartitionerId.COMPOSED,
            strategy=StrategyId.SMALLER_FIRST,
            swap_scheme=scheme,
        )
        _, want = oracle.partitioner_cost_means(n, spec)
        got = analysis.swap_partition_cost(scheme, n)
        yield f"partition_swaps[{scheme.value}]", want, got


def _check_misplaced(n: int):
    if n < 3:
        return
    groups = oracle.misplaced_group_means(n)
    target = analysis.misplaced_group_mean(n)
    for name, want in sorted(groups.items()):
        yield f"misplaced[{name}]", want, target


def _check_zero_crossings(n: int):
    if n < 2 or n % 2 or n > 10:
        return
    want = oracle.zero_crossings_mean(n)
    got = analysis.expected_zero_crossings(n, exact=True)
    yield "zero_crossings", want, got


def _check_pivot_pairs(n: int):
    if not 5 <= n <= 7:
        return
    freqs = oracle.pivot_pair_frequencies(n, SelectorSpec(SelectorMode.SAMPLE5_TERTILES))
    denom = math.comb(n, 5)
    for (p, q), want in sorted(freqs.items()):
        s, m, lg = p - 1, q - p - 1, n - q
        yield f"pivot_pair[p={p},q={q}]", want, Fraction(s * m * lg, denom)


_ORACLE_CHECKS = (
    _check_partition_comparisons,
    _check_act_tables,
    _check_swap_means,
    _check_misplaced,
    _check_zero_crossings,
    _check_pivot_pairs,
)


def cmd_oracle_check(spec: RunSpec) -> tuple[list[dict], int]:
    if not spec.sizes:
        raise UsageError("oracle-check needs --sizes")
    if max(spec.sizes) > oracle.PERMUTATION_LIMIT:
        raise UsageError(
            f"exhaustive checks are capped at n = {oracle.PERMUTATION_LIMIT}"
        )
    rows = []
    mismatches = 0
    for n in spec.sizes:
        for check in _ORACLE_CHECKS:
            for label, want, got in check(n) or ():
                ok = want == got
                if not ok:
                    mismatches += 1
                rows.append(
                    {
                        "n": n,
                        "check": label,
                        "exhaustive": want,
                        "analysis": got,
                        "status": "PASS" if ok else "FAIL",
                    }
                )
    return rows, (2 if mismatches else 0)


# --- argument parsing / entry ---------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="dpqlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_common(p, *, sizes=True, config=True, run=False):
        if sizes:
            p.add_argument("--sizes", "--n", dest="sizes", type=str, default=None,
                           help="comma-separated list of sizes")
        if config:
            p.add_argument("--partitioner", choices=[k.value for k in PartitionerId])
            p.add_argument("--strategy", choices=[s.value for s in StrategyId])
            p.add_argument("--swap-scheme",
                           choices=[s.value for s in SwapSchemeId] + [analysis.SWITCH_SCHEME])
            p.add_argument("--selector", default="direct_ends",
                           help="direct_ends | sample5_tertiles | sample_k:<k> | median_of_k:<k>")
            p.add_argument("--cutoff", type=int, default=16)
            p.add_argument("--sample-rule", choices=[r.value for r in SampleRule],
                           default=SampleRule.HUNDREDTH.value)
        if run:
            p.add_argument("--trials", type=int, default=50)
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--input", dest="input_path", default=None,
                           help="newline-delimited UTF-8 corpus (string-key mode)")
            p.add_argument("--workers", type=int, default=1)
        p.add_argument("--format", dest="fmt", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    add_common(sub.add_parser("sort", help="run one verified, counted sort per size"),
               run=True)
    add_common(sub.add_parser("bench", help="Monte-Carlo benchmark records"), run=True)
    add_common(sub.add_parser("exact", help="exact cost tables and coefficients"))
    add_common(sub.add_parser("table1", help="sampled-pivot coefficient comparison"),
               sizes=False, config=False)
    add_common(sub.add_parser("zerocross", help="expected zero-crossing counts"),
               sizes=True, config=False)
    add_common(sub.add_parser("oracle-check",
                              help="exhaustive enumeration vs closed forms"),
               sizes=True, config=False)
    return parser


_COMMANDS = {
    "sort": cmd_sort,
    "bench": cmd_bench,
    "exact": cmd_exact,
    "table1": cmd_table1,
    "zerocross": cmd_zerocross,
    "oracle-check": cmd_oracle_check,
}


def _spec_from(args: argparse.Namespace) -> RunSpec:
    sizes = _parse_sizes(args.sizes) if getattr(args, "sizes", None) else ()
    return RunSpec(
        command=args.command,
        sizes=sizes,
        trials=getattr(args, "trials", 1),
        seed=getattr(args, "seed", 0),
        partitioner=getattr(args, "partitioner", None),
        strategy=getattr(args, "strategy", None),
        selector=getattr(args, "selector", "direct_ends"),
        cutoff=getattr(args, "cutoff", 16),
        swap_scheme=getattr(args, "swap_scheme", None),
        sample_rule=getattr(args, "sample_rule", SampleRule.HUNDREDTH.value),
        input_path=getattr(args, "input_path", None),
        out=args.out,
        fmt=args.fmt,
        workers=getattr(args, "workers", 1),
    )


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        spec = _spec_from(args)
        rows, code = _COMMANDS[spec.command](spec)
    except UsageError as exc:
        print(f"dpqlab {args.command}: error: {exc}", file=sys.stderr)
        return 1
    buffer = io.StringIO()
    emit_rows(rows, spec.fmt, buffer)
    if spec.out:
        with open(spec.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
