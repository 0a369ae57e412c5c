"""Seeded Monte Carlo estimates of Type I error and power.

Replicate ``k`` of a configuration draws its graph from the stream keyed by
``(seed, k)`` (see :mod:`rggdim.geometry`), so a replicate's outcome depends
only on the configuration and ``k``.  Results are aggregated by integer
addition, so any worker count or schedule gives the same report.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from rggdim.dimtest import Outcome, TestResult, _check_alpha, _check_m0, outcome_from_counts
from rggdim.errors import EstimationFailedError, InvalidInputError
from rggdim.geometry import RggParams, generate_rgg
from rggdim.motifs import motif_counts_fast


@dataclass(frozen=True)
class SimConfig:
    n: int
    m: int
    r: float
    m0: int
    alpha: float = 0.05
    reps: int = 1000
    seed: int = 0

    def __post_init__(self):
        params = RggParams(self.n, self.m, self.r, self.seed)
        if params.n < 4:
            raise InvalidInputError(f"the test needs n >= 4 nodes, got n={self.n}")
        if int(self.reps) != self.reps or self.reps < 1:
            raise InvalidInputError(f"reps must be a positive integer, got {self.reps!r}")
        object.__setattr__(self, "n", params.n)
        object.__setattr__(self, "m", params.m)
        object.__setattr__(self, "r", params.r)
        object.__setattr__(self, "seed", params.seed)
        object.__setattr__(self, "m0", _check_m0(self.m0))
        object.__setattr__(self, "alpha", _check_alpha(self.alpha))
        object.__setattr__(self, "reps", int(self.reps))

    @property
    def params(self) -> RggParams:
        return RggParams(self.n, self.m, self.r, self.seed)


@dataclass(frozen=True)
class SimReport:
    config: SimConfig
    rejections: int
    degenerate_count: int

    @property
    def valid_reps(self) -> int:
        return self.config.reps - self.degenerate_count

    @property
    def rejection_rate(self) -> float:
        return self.rejections / self.valid_reps

    @property
    def std_error(self) -> float:
        p = self.rejection_rate
        return math.sqrt(p * (1.0 - p) / self.valid_reps)


def run_replicate(config: SimConfig, replicate_index: int) -> Outcome:
    if replicate_index < 0:
        raise InvalidInputError("replicate_index must be non-negative")
    _, A = generate_rgg(config.params, key=(replicate_index,))
    return outcome_from_counts(motif_counts_fast(A), config.m0, config.alpha)


def _run_chunk(task) -> tuple[int, int, int]:
    cell, config, start, stop = task
    rejections = degenerate = 0
    for k in range(start, stop):
        outcome = run_replicate(config, k)
        if isinstance(outcome, TestResult):
            rejections += outcome.reject
        else:
            degenerate += 1
    return cell, rejections, degenerate


def _tasks(configs: Sequence[SimConfig], chunk: int):
    for cell, config in enumerate(configs):
        for start in range(0, config.reps, chunk):
            yield cell, config, start, min(config.reps, start + chunk)


def estimate_many(configs: Sequence[SimConfig], workers: int = 1, chunk: int = 50) -> list[SimReport]:
    """Estimate rejection rates for several configurations, optionally across processes."""
    if workers < 1:
        raise InvalidInputError(f"workers must be >= 1, got {workers}")
    totals = [[0, 0] for _ in configs]
    tasks = list(_tasks(configs, chunk))
    if workers == 1 or len(tasks) <= 1:
        results = map(_run_chunk, tasks)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_run_chunk, tasks)
    try:
        for cell, rejections, degenerate in results:
            totals[cell][0] += rejections
            totals[cell][1] += degenerate
    finally:
        if pool is not None:
            pool.shutdown()

    reports = []
    for config, (rejections, degenerate) in zip(configs, totals):
        if degenerate == config.reps:
            raise EstimationFailedError(f"all {config.reps} replicates were degenerate for {config}")
        reports.append(SimReport(config, rejections, degenerate))
    return reports


def estimate_rejection_rate(config: SimConfig, workers: int = 1) -> SimReport:
    return estimate_many([config], workers=workers)[0]
