"""Timing of Sq^1 on iterated suspensions of RP^2, fast pair loop vs. direct evaluation."""

from __future__ import annotations

import csv
import logging
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, TextIO

from .f2linear import cohomology_basis
from .spaces import iterated_suspension, rp2
from .steenrod import sq_class, sq_cochain, sq_direct_oracle

log = logging.getLogger(__name__)


@dataclass
class BenchRow:
    i: int
    n_simplices: int
    n_target: int
    support: int
    repeats: int
    fast_s: float
    direct_s: float

    @property
    def speedup(self) -> float:
        return self.direct_s / self.fast_s


CSV_HEADER = tuple(f.name for f in fields(BenchRow))


def repeats_for(i: int, repeats_base: int) -> int:
    return max(1, repeats_base // 2 ** i)


def _mean_time(fn, args, repeats: int, expected) -> float:
    fn(*args)  # warm-up, not timed
    total = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        total += time.perf_counter() - t0
        if out != expected:
            raise AssertionError(f"{fn.__name__} disagrees with the reference result")
    return total / repeats


def run_suspension_benchmark(max_i: int = 6, repeats_base: int = 1000) -> list[BenchRow]:
    if max_i < 0 or repeats_base < 1:
        raise ValueError("need max_i >= 0 and repeats_base >= 1")
    base = rp2()
    rows = []
    for i in range(max_i + 1):
        X = iterated_suspension(base, i).complex
        n = 1 + i
        H = cohomology_basis(X, n)
        target = cohomology_basis(X, n + 1)
        if sq_class(H, 0, 1, target) != (1,):
            raise RuntimeError(f"Sq^1 vanishes on suspension {i} of RP^2")
        alpha = H.basis[0]
        expected = sq_cochain(alpha, 1, X)
        if sq_direct_oracle(alpha, 1, X) != expected:
            raise AssertionError("fast and direct Sq^1 disagree")
        reps = repeats_for(i, repeats_base)
        fast = _mean_time(sq_cochain, (alpha, 1, X), reps, expected)
        direct = _mean_time(sq_direct_oracle, (alpha, 1, X), reps, expected)
        row = BenchRow(i, len(X), len(X.simplices(n + 1)), len(alpha), reps, fast, direct)
        log.info("i=%d simplices=%d fast=%.3es direct=%.3es", i, row.n_simplices, fast, direct)
        rows.append(row)
    return rows


def write_csv(rows: Iterable[BenchRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(repr(v) if isinstance(v, float) else v for v in astuple(row))

