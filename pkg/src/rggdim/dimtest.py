"""The dimension test: pivotal statistic, variance estimate, p-value, decision.

For a hypothesised dimension ``m0`` write ``q = (3/4)**m0``.  Then

    D_n      = tri3 - q * path2
    sigma2   = (36 - 24q) S1 + (16q^2 - 48q) S2 + 8q^2 S3 + 4q^2 S4 + 8q^2 S5
    T        = sqrt(2) * D_n / (n^2 * sqrt(sigma2)),   S_i = raw_i / n^4

and the test rejects when ``|T| >= z_{alpha/2}``.  ``D_n`` and ``sigma2`` are
evaluated as exact rationals (powers of 3, 4, 12, 16 times integer counts)
and rounded once, so they are reproducible to the last bit.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import asdict, dataclass
from typing import Iterable, Union

from rggdim.errors import DegenerateVarianceError, InvalidInputError
from rggdim.graph import AdjacencyMatrix
from rggdim.motifs import MotifCounts, motif_counts_fast

_SQRT2 = math.sqrt(2.0)


def norm_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * math.erfc(-x / _SQRT2)


def norm_sf(x: float) -> float:
    return 0.5 * math.erfc(x / _SQRT2)


def _bisect(f, target: float, lo: float = -40.0, hi: float = 40.0) -> float:
    # f increasing; stop once the bracket cannot shrink further
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if f(mid) < target:
            lo = mid
        else:
            hi = mid


def norm_ppf(p: float) -> float:
    """Inverse of :func:`norm_cdf` by bisection, consistent with it by construction."""
    if not 0.0 < p < 1.0:
        raise InvalidInputError(f"probability must lie in (0, 1), got {p!r}")
    if p == 0.5:
        return 0.0
    return _bisect(norm_cdf, p)


def upper_quantile(tail: float) -> float:
    """``z`` with ``P(Z >= z) = tail``; bisects on the tail to keep precision for small levels."""
    if not 0.0 < tail < 1.0:
        raise InvalidInputError(f"tail probability must lie in (0, 1), got {tail!r}")
    return _bisect(lambda z: -norm_sf(z), -tail)


@lru_cache(maxsize=64)
def critical_value(alpha: float) -> float:
    return upper_quantile(alpha / 2.0)


@dataclass(frozen=True)
class TestResult:
    __test__ = False

    n: int
    m0: int
    alpha: float
    d_n: float
    sigma2_hat: float
    statistic: float
    p_value: float
    reject: bool

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DegenerateResult:
    """Outcome when the variance estimate is not positive and no p-value exists."""

    n: int
    m0: int
    alpha: float
    d_n: float
    sigma2_hat: float
    status: str = "degenerate_variance"

    def as_dict(self) -> dict:
        return asdict(self)


Outcome = Union[TestResult, DegenerateResult]


def _check_m0(m0) -> int:
    if isinstance(m0, bool) or int(m0) != m0 or m0 < 1:
        raise InvalidInputError(f"m0 must be a positive integer, got {m0!r}")
    return int(m0)


def _check_alpha(alpha) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise InvalidInputError(f"alpha must lie in (0, 1), got {alpha!r}")
    return alpha


def compute_dn(counts: MotifCounts, m0: int) -> float:
    m0 = _check_m0(m0)
    scale = 4**m0
    return (scale * counts.tri3 - 3**m0 * counts.path2) / scale


def compute_sigma2_hat(counts: MotifCounts, m0: int) -> float:
    m0 = _check_m0(m0)
    n = counts.n
    if n < 4:
        raise InvalidInputError(f"variance estimate needs n >= 4, got n={n}")
    # coefficients multiplied through by 16**m0 so they are integers
    p9, p12, p16 = 9**m0, 12**m0, 16**m0
    coef = (36 * p16 - 24 * p12, 16 * p9 - 48 * p12, 8 * p9, 4 * p9, 8 * p9)
    numerator = sum(c * r for c, r in zip(coef, counts.raw()))
    return numerator / (p16 * n**4)


def evaluate_counts(counts: MotifCounts, m0: int, alpha: float = 0.05) -> TestResult:
    """Run the test on precomputed motif counts; raises on degenerate variance."""
    m0 = _check_m0(m0)
    alpha = _check_alpha(alpha)
    n = counts.n
    d_n = compute_dn(counts, m0)
    sigma2 = compute_sigma2_hat(counts, m0)
    if not sigma2 > 0.0:
        raise DegenerateVarianceError(
            f"variance estimate {sigma2!r} is not positive for m0={m0}", d_n=d_n, sigma2_hat=sigma2
        )
    statistic = _SQRT2 * d_n / (n * n * math.sqrt(sigma2))
    p_value = math.erfc(abs(statistic) / _SQRT2)
    reject = abs(statistic) >= critical_value(alpha)
    return TestResult(n, m0, alpha, d_n, sigma2, statistic, p_value, reject)


def run_test(A: AdjacencyMatrix, m0: int, alpha: float = 0.05) -> TestResult:
    _check_m0(m0)
    _check_alpha(alpha)
    if A.n < 4:
        raise InvalidInputError(f"the test needs n >= 4 nodes, got n={A.n}")
    return evaluate_counts(motif_counts_fast(A), m0, alpha)


def outcome_from_counts(counts: MotifCounts, m0: int, alpha: float = 0.05) -> Outcome:
    try:
        return evaluate_counts(counts, m0, alpha)
    except DegenerateVarianceError as exc:
        return DegenerateResult(counts.n, int(m0), float(alpha), exc.d_n, exc.sigma2_hat)


def scan_m0(A: AdjacencyMatrix, m0_values: Iterable[int], alpha: float = 0.05) -> list[Outcome]:
    """Test each ``m0`` in turn, sharing one set of motif counts."""
    m0_values = [_check_m0(m0) for m0 in m0_values]
    if not m0_values:
        return []
    _check_alpha(alpha)
    if A.n < 4:
        raise InvalidInputError(f"the test needs n >= 4 nodes, got n={A.n}")
    counts = motif_counts_fast(A)
    return [outcome_from_counts(counts, m0, alpha) for m0 in m0_values]
