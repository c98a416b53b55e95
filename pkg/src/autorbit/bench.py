"""Timing harness and analytic cost model for the two quotient paths.

Measures the equivalence decision on the uniform family C4^n with
x = (1, ..., 1) and y = (3, ..., 3), so the group exponent stays constant
while the rank grows.  Timing uses a monotonic clock, warm-up calls, and
batched trials; per-rank trial means (with their spread) go into the CSV and
the scaling exponent is a log-log least-squares fit over them.

The analytic model emits operation counts for plotting the crossover between
the two paths at exponent 10**20: the sweep path costs about
2e7 + 4*n*67 + 67*n*log2(n) operations (factoring the exponent, valuations,
sorting; 67 ~ log2(10**20) is the bit-length budget), against n**2.8074 for
the matrix path.  The model crossover sits just above rank 400.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import kernels
from .equivalence import are_automorphic
from .groups import AbelianGroup, GroupElement

CSV_HEADER = "rank,method,mean_ms,stddev_ms"

# Default schedule: arithmetic steps of ten plus powers of two, so both the
# dense low-rank region and the tail get coverage.
_ARITHMETIC = tuple(3 + 10 * k for k in range(17))
_GEOMETRIC = tuple(2**k for k in range(1, 10))


@dataclass(frozen=True)
class BenchRow:
    rank: int
    method: str
    mean_ms: float
    stddev_ms: float


@dataclass(frozen=True)
class PowerFit:
    coefficient: float
    exponent: float
    r_squared: float


def default_rank_schedule(max_rank: int = 512) -> list[int]:
    """Default rank schedule: {3 + 10k} union {2^k}, capped."""
    return sorted(n for n in set(_ARITHMETIC) | set(_GEOMETRIC) if n <= max_rank)


def c4_instance(rank: int) -> tuple[AbelianGroup, GroupElement, GroupElement]:
    """The benchmark family: C4^rank with x all-ones and y all-threes."""
    G = AbelianGroup([4] * rank)
    return G, G.element([1] * rank), G.element([3] * rank)


def _time_callable(
    fn: Callable[[], object], trials: int, target_batch_s: float = 0.02
) -> list[float]:
    """Per-call seconds for each trial, batching calls so one trial takes
    roughly target_batch_s."""
    fn()  # warm-up
    t0 = time.perf_counter()
    fn()
    single = max(time.perf_counter() - t0, 1e-9)
    batch = max(1, min(100_000, int(target_batch_s / single)))
    out = []
    for _ in range(trials):
        t0 = time.perf_counter()
        for _ in range(batch):
            fn()
        out.append((time.perf_counter() - t0) / batch)
    return out


def run_scaling(
    ranks: Iterable[int],
    methods: Sequence[str] = ("fast", "snf"),
    trials: int = 5,
    backend: str = "auto",
    snf_max_rank: int | None = None,
) -> list[BenchRow]:
    """Time the decision procedure per rank and method; returns CSV-ready rows.

    backend 'auto' uses whatever the kernels module selected at import;
    'pure'/'compiled' force one; 'both' measures each method under both,
    labelling methods 'fast@pure' etc.
    """
    ranks = list(ranks)
    if backend == "both":
        rows = []
        for b in ("compiled", "pure"):
            if b == "compiled" and not kernels.compiled_available():
                continue
            for row in run_scaling(ranks, methods, trials, b, snf_max_rank):
                rows.append(
                    BenchRow(row.rank, f"{row.method}@{b}", row.mean_ms, row.stddev_ms)
                )
        return rows
    rows = []
    for rank in ranks:
        G, x, y = c4_instance(rank)
        for method in methods:
            if method == "snf" and snf_max_rank is not None and rank > snf_max_rank:
                continue
            fn = lambda: are_automorphic(G, x, y, method=method)  # noqa: E731
            if backend in ("pure", "compiled"):
                with kernels.forced(backend):
                    samples = _time_callable(fn, trials)
            else:
                samples = _time_callable(fn, trials)
            mean_ms = statistics.fmean(samples) * 1e3
            stddev_ms = (statistics.stdev(samples) * 1e3) if len(samples) > 1 else 0.0
            rows.append(BenchRow(rank, method, mean_ms, stddev_ms))
    return rows


def method_points(rows: Sequence[BenchRow], method: str) -> list[tuple[int, float]]:
    """(rank, mean_ms) pairs for one method, rank-sorted."""
    return sorted((r.rank, r.mean_ms) for r in rows if r.method == method)


def fit_power_law(points: Sequence[tuple[float, float]]) -> PowerFit:
    """Least-squares fit of t = c * n^a on log-log axes.

    >>> fit = fit_power_law([(n, 0.5 * n**1.25) for n in (2, 4, 8, 16)])
    >>> round(fit.exponent, 6), round(fit.coefficient, 6)
    (1.25, 0.5)
    """
    if len(points) < 2:
        raise ValueError("need at least two points to fit")
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(t) for _, t in points]
    mx = statistics.fmean(xs)
    my = statistics.fmean(ys)
    sxx = sum((a - mx) ** 2 for a in xs)
    sxy = sum((a - mx) * (b - my) for a, b in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    syy = sum((b - my) ** 2 for b in ys)
    r2 = 1.0 if syy == 0 else 1.0 - sum(
        (b - (intercept + slope * a)) ** 2 for a, b in zip(xs, ys)
    ) / syy
    return PowerFit(math.exp(intercept), slope, r2)


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(f"{r.rank},{r.method},{r.mean_ms:.6f},{r.stddev_ms:.6f}")
    return "\n".join(lines) + "\n"


# --- analytic model -------------------------------------------------------

MODEL_CSV_HEADER = "rank,fast_model_ops,snf_model_ops"


def model_operation_counts(rank: int) -> tuple[float, float]:
    """Model operation counts at exponent 10**20 for one decision:
    sweep path 2e7 + 4n*67 + 67n*log2(n), matrix path n^2.8074."""
    n = rank
    fast_ops = 2e7 + 4 * n * 67 + 67 * n * math.log2(n) if n > 1 else 2e7 + 4 * 67
    snf_ops = float(n) ** 2.8074
    return fast_ops, snf_ops


def model_rows(max_rank: int = 600, step: int = 1) -> list[tuple[int, float, float]]:
    return [
        (n, *model_operation_counts(n)) for n in range(1, max_rank + 1, step)
    ]


def model_crossover(max_rank: int = 100_000) -> int:
    """Smallest rank at which the sweep-path model undercuts the matrix-path
    model; the matrix path wins below it."""
    for n in range(2, max_rank + 1):
        fast_ops, snf_ops = model_operation_counts(n)
        if fast_ops <= snf_ops:
            return n
    raise ValueError(f"no crossover below rank {max_rank}")


def model_to_csv(rows: Sequence[tuple[int, float, float]]) -> str:
    lines = [MODEL_CSV_HEADER]
    for n, fast_ops, snf_ops in rows:
        lines.append(f"{n},{fast_ops:.3f},{snf_ops:.3f}")
    return "\n".join(lines) + "\n"
