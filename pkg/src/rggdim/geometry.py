"""Torus point sampling, the L-infinity torus metric, and RGG construction.

Random streams come from numpy's Philox counter-based generator seeded through
``SeedSequence(seed, spawn_key=key)``.  A replicate index (or any other tuple of
non-negative integers) goes into ``key``, so replicate ``k`` always sees the
same stream no matter which worker draws it.  Within a stream node ``i`` takes
the ``m`` consecutive doubles at positions ``i*m .. i*m+m-1``.  The generator
family is fixed for this release; changing it changes every sampled graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from rggdim.errors import InvalidInputError
from rggdim.graph import AdjacencyMatrix

_MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class RggParams:
    n: int
    m: int
    r: float
    seed: int = 0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidInputError(f"n must be a positive integer, got {self.n!r}")
        if int(self.m) != self.m or self.m < 1:
            raise InvalidInputError(f"m must be a positive integer, got {self.m!r}")
        r = float(self.r)
        if not 0.0 <= r <= 0.5:
            raise InvalidInputError(f"r must lie in [0, 0.5], got {self.r!r}")
        if int(self.seed) != self.seed or not 0 <= self.seed <= _MAX_SEED:
            raise InvalidInputError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "seed", int(self.seed))


@dataclass(frozen=True, eq=False)
class PointCloud:
    """``n`` latent positions in ``[0, 1)^m``, one row per node."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        if pts.ndim != 2 or pts.shape[1] < 1:
            raise InvalidInputError("points must be an n-by-m array with m >= 1")
        if pts.size and (pts.min() < 0.0 or pts.max() >= 1.0):
            raise InvalidInputError("coordinates must lie in [0, 1)")
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def m(self) -> int:
        return self.points.shape[1]

    def __eq__(self, other):
        if not isinstance(other, PointCloud):
            return NotImplemented
        return np.array_equal(self.points, other.points)


def make_rng(seed: int, key: Sequence[int] = ()) -> np.random.Generator:
    """Philox generator for stream ``key`` under master ``seed``."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.Philox(ss))


def torus_distance(a, b) -> float:
    a = np.atleast_1d(np.asarray(a, dtype=np.float64))
    b = np.atleast_1d(np.asarray(b, dtype=np.float64))
    if a.ndim != 1 or a.shape != b.shape or a.size == 0:
        raise InvalidInputError(f"points must share a dimension m >= 1, got shapes {a.shape} and {b.shape}")
    delta = np.abs(a - b)
    return float(np.max(np.minimum(delta, 1.0 - delta)))


def torus_distances(x, y) -> np.ndarray:
    """Row-wise torus distance between two equally shaped ``(k, m)`` arrays."""
    delta = np.abs(np.asarray(x, dtype=np.float64) - np.asarray(y, dtype=np.float64))
    return np.minimum(delta, 1.0 - delta).max(axis=-1)


def pairwise_torus_distances(points) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    n, m = pts.shape
    dist = np.zeros((n, n))
    # one coordinate at a time keeps peak memory at O(n^2)
    for k in range(m):
        col = pts[:, k]
        delta = np.abs(col[:, None] - col[None, :])
        np.minimum(delta, 1.0 - delta, out=delta)
        np.maximum(dist, delta, out=dist)
    return dist


def sample_points(params: RggParams, key: Sequence[int] = ()) -> PointCloud:
    rng = make_rng(params.seed, key)
    return PointCloud(rng.random((params.n, params.m)))


def rgg_from_points(cloud: PointCloud, r: float) -> AdjacencyMatrix:
    dense = pairwise_torus_distances(cloud.points) <= r
    np.fill_diagonal(dense, False)
    return AdjacencyMatrix.from_dense(dense)


def generate_rgg(params: RggParams, key: Sequence[int] = ()) -> tuple[PointCloud, AdjacencyMatrix]:
    """Sample node positions and connect every pair at torus distance ``<= r``."""
    cloud = sample_points(params, key)
    return cloud, rgg_from_points(cloud, params.r)
