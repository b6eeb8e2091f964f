"""Deterministic micro-benchmark harness for the multiplication methods.

Counts are derived from the trace each method already produces, so two runs
with the same seed and configuration emit identical metrics; only the elapsed
wall time differs.  Every trial's result is checked against the schoolbook
oracle before any metric for it is recorded — a mismatch aborts the run.

Counting rules (fixed, documented here so the CSV is comparable across runs):
each residue or carry lookup counts as one single-digit multiplication, a kept
whole product counts as one, the trailing decimal split counts once for its
pair of terms, and a wedge term counts as two (it evaluates two digit
products).  ``carry_count`` is the number of columns that emit a non-zero
carry while the signed columns are normalized.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass
from typing import Sequence

from .cross_mul import MulTrace, plum_mul, rapid_mul, wedge_mul, wedge_mul_single
from .digit_string import DigitString, normalize_stats
from .oracle import Nat, o_mul

__all__ = ["BenchMetrics", "run_bench", "metrics_to_csv", "BENCH_METHODS", "CSV_HEADER"]

CSV_HEADER = "method,size,trials,mul_count,carry_count,max_abs_col,mean_abs_col,elapsed_ns"

_MUL_WEIGHT = {
    "residue": 1,
    "carry": 1,
    "product": 1,
    "product_ones": 1,
    "product_tens": 0,
    "wedge": 2,
}


@dataclass(frozen=True)
class BenchMetrics:
    """Aggregated counts for one (method, size) cell of the run."""

    method: str
    size: int
    trials: int
    mul_count: int
    carry_count: int
    max_abs_col: int
    mean_abs_col: float
    elapsed_ns: int


def _seeded_rng(seed: int, *labels: int | str) -> random.Random:
    key = ":".join([str(seed), *map(str, labels)]).encode()
    return random.Random(int.from_bytes(hashlib.sha256(key).digest()[:8], "big"))


def _random_operand(rng: random.Random, size: int) -> DigitString:
    digits = [rng.randint(1, 9)] + [rng.randint(0, 9) for _ in range(size - 1)]
    return DigitString(tuple(digits))


def _run_method(method: str, a: DigitString, b: DigitString) -> tuple[DigitString, MulTrace]:
    if method == "cross":
        return rapid_mul(a, b)
    if method == "plum":
        return plum_mul(a, b)
    if method == "wedge":
        return wedge_mul(a, b)
    if method == "wedge_single":
        return wedge_mul_single(a, int(b))
    raise ValueError(f"unknown bench method {method!r}")


BENCH_METHODS = ("cross", "plum", "wedge", "wedge_single")


def run_bench(
    sizes: Sequence[int],
    trials: int,
    seed: int,
    methods: Sequence[str] = BENCH_METHODS,
) -> list[BenchMetrics]:
    """Run every (method, size) cell, oracle-checking each trial before counting.

    Operands are drawn from a per-(size, trial) seeded generator, so the
    result set is independent of execution order.  Output rows are sorted by
    (method, size).
    """
    if not methods:
        raise ValueError("bench needs at least one method")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError(f"sizes must be positive, got {sizes!r}")
    for method in methods:
        if method not in BENCH_METHODS:
            raise ValueError(f"unknown bench method {method!r}; expected subset of {BENCH_METHODS}")

    results = []
    for method in sorted(methods):
        for size in sorted(sizes):
            mul_count = 0
            carry_count = 0
            max_abs = 0
            abs_sum = 0
            col_count = 0
            elapsed = 0
            for trial in range(trials):
                rng_a = _seeded_rng(seed, method, size, trial, 0)
                rng_b = _seeded_rng(seed, method, size, trial, 1)
                a = _random_operand(rng_a, size)
                if method == "wedge_single":
                    b = DigitString((rng_b.randint(1, 9),))
                else:
                    b = _random_operand(rng_b, size)

                start = time.perf_counter_ns()
                product, trace = _run_method(method, a, b)
                elapsed += time.perf_counter_ns() - start

                expected = o_mul(Nat.from_digits(a.digits), Nat.from_digits(b.digits))
                if str(product) != str(expected):
                    raise RuntimeError(
                        f"oracle mismatch for {method} on {a} * {b}: got {product}, expected {expected}"
                    )

                for column in trace.columns:
                    for term in column.terms:
                        mul_count += _MUL_WEIGHT[term.kind]
                    abs_sum += abs(column.total)
                    col_count += 1
                    max_abs = max(max_abs, abs(column.total))
                carry_count += normalize_stats(trace.signed, trace.radix_power)[1]
            mean_abs = abs_sum / col_count if col_count else 0.0
            results.append(
                BenchMetrics(method, size, trials, mul_count, carry_count, max_abs, mean_abs, elapsed)
            )
    return results


def metrics_to_csv(metrics: Sequence[BenchMetrics]) -> str:
    """CSV with LF line endings, one row per (method, size)."""
    lines = [CSV_HEADER]
    for m in metrics:
        lines.append(
            f"{m.method},{m.size},{m.trials},{m.mul_count},{m.carry_count},"
            f"{m.max_abs_col},{m.mean_abs_col:.6f},{m.elapsed_ns}"
        )
    return "\n".join(lines) + "\n"
