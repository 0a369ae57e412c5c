"""Bit-packed adjacency matrices and the integer kernels behind motif counting.

Row ``i`` is stored as ``ceil(n / 64)`` little-endian ``uint64`` words; bit
``j % 64`` of word ``j // 64`` is ``A[i, j]``.  Every kernel here is exact
integer arithmetic (AND + popcount), never floating point.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from rggdim.errors import InvalidInputError

# tr(A^4) <= n^4 must fit in int64
MAX_NODES = 55_000

# bytes of scratch allowed per block in the common-neighbour kernel
_BLOCK_BYTES = 1 << 25


class AdjacencyMatrix:
    """Immutable symmetric 0/1 matrix with zero diagonal."""

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: np.ndarray):
        rows = np.ascontiguousarray(rows, dtype=np.uint64)
        words = _words(n)
        if rows.shape != (n, words):
            raise InvalidInputError(f"expected rows of shape {(n, words)}, got {rows.shape}")
        rows.flags.writeable = False
        self._n = n
        self._rows = rows

    @classmethod
    def from_dense(cls, dense, validate: bool = True) -> AdjacencyMatrix:
        dense = np.asarray(dense).astype(bool, copy=False)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise InvalidInputError("adjacency matrix must be square")
        n = dense.shape[0]
        if n > MAX_NODES:
            raise InvalidInputError(f"n={n} exceeds the supported maximum {MAX_NODES}")
        if validate:
            if dense.diagonal().any():
                raise InvalidInputError("adjacency matrix must have a zero diagonal")
            if not np.array_equal(dense, dense.T):
                raise InvalidInputError("adjacency matrix must be symmetric")
        return cls(n, _pack(dense))

    @classmethod
    def empty(cls, n: int) -> AdjacencyMatrix:
        return cls(n, np.zeros((n, _words(n)), dtype=np.uint64))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    def to_dense(self) -> np.ndarray:
        """Boolean ``n x n`` copy of the matrix."""
        if self._n == 0:
            return np.zeros((0, 0), dtype=bool)
        bits = np.unpackbits(self._rows.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self._n].astype(bool)

    def edges(self) -> list[tuple[int, int]]:
        """Unordered edges as ``(i, j)`` with ``i < j``, ascending."""
        i, j = np.nonzero(np.triu(self.to_dense(), k=1))
        return list(zip(i.tolist(), j.tolist()))

    def num_edges(self) -> int:
        return int(degrees(self).sum()) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((int(self._rows[i, j >> 6]) >> (j & 63)) & 1)

    def permute(self, perm) -> AdjacencyMatrix:
        """Relabel so that new node ``k`` is old node ``perm[k]``."""
        perm = np.asarray(perm)
        dense = self.to_dense()
        return AdjacencyMatrix.from_dense(dense[np.ix_(perm, perm)], validate=False)

    def with_edge(self, i: int, j: int) -> AdjacencyMatrix:
        dense = self.to_dense()
        if i != j:
            dense[i, j] = dense[j, i] = True
        return AdjacencyMatrix.from_dense(dense, validate=False)

    def __eq__(self, other):
        if not isinstance(other, AdjacencyMatrix):
            return NotImplemented
        return self._n == other._n and np.array_equal(self._rows, other._rows)

    def __hash__(self):
        return hash((self._n, self._rows.tobytes()))

    def __repr__(self):
        return f"AdjacencyMatrix(n={self._n}, edges={self.num_edges()})"


def _words(n: int) -> int:
    return (n + 63) // 64


def _pack(dense: np.ndarray) -> np.ndarray:
    n = dense.shape[0]
    words = _words(n)
    packed = np.packbits(dense, axis=1, bitorder="little")
    buf = np.zeros((n, words * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    return buf.view("<u8").astype(np.uint64, copy=False)


def from_edge_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> AdjacencyMatrix:
    if n < 0 or n > MAX_NODES:
        raise InvalidInputError(f"node count must be in [0, {MAX_NODES}], got {n}")
    dense = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise InvalidInputError(f"edge ({i}, {j}) out of range for n={n}")
        if i != j:
            dense[i, j] = dense[j, i] = True
    return AdjacencyMatrix(n, _pack(dense))


def degrees(A: AdjacencyMatrix) -> np.ndarray:
    return np.bitwise_count(A.rows).sum(axis=1, dtype=np.int64)


def common_neighbors(A: AdjacencyMatrix, i: int, j: int) -> int:
    if i == j:
        raise InvalidInputError("common_neighbors needs two distinct nodes")
    if not (0 <= i < A.n and 0 <= j < A.n):
        raise InvalidInputError(f"node index out of range for n={A.n}")
    return int(np.bitwise_count(A.rows[i] & A.rows[j]).sum())


def common_neighbor_matrix(A: AdjacencyMatrix) -> np.ndarray:
    """Return ``A @ A`` as int64, entry ``(i, k)`` = popcount(row_i & row_k).

    The diagonal holds the degrees.  Rows are processed in blocks so scratch
    memory stays bounded; total work is ``n^2 * ceil(n/64)`` word operations.
    """
    n = A.n
    rows = A.rows
    words = rows.shape[1]
    out = np.empty((n, n), dtype=np.int64)
    if n == 0:
        return out
    block = max(1, _BLOCK_BYTES // max(1, n * words * 8))
    for start in range(0, n, block):
        stop = min(n, start + block)
        anded = rows[start:stop, None, :] & rows[None, :, :]
        np.sum(np.bitwise_count(anded), axis=2, dtype=np.int64, out=out[start:stop])
    return out


class WalkCounts(NamedTuple):
    trace3: int
    trace4: int
    sum2: int
    sum3: int
    diag3: np.ndarray


def closed_walk_counts(A: AdjacencyMatrix) -> WalkCounts:
    """``tr(A^3)``, ``tr(A^4)``, ``1'A^2 1``, ``1'A^3 1`` and ``diag(A^3)``."""
    return walk_counts_from(A, common_neighbor_matrix(A), degrees(A))


def walk_counts_from(A: AdjacencyMatrix, sq: np.ndarray, deg: np.ndarray) -> WalkCounts:
    dense = A.to_dense()
    # diag(A^3)_i = sum_k A_ik (A^2)_ik
    diag3 = np.where(dense, sq, 0).sum(axis=1, dtype=np.int64)
    trace3 = int(diag3.sum())
    trace4 = int(np.einsum("ij,ij->", sq, sq, dtype=np.int64))
    sum2 = int(np.dot(deg, deg))
    # 1'A^3 1 = d' A d
    sum3 = int(np.dot(deg, np.where(dense, deg[None, :], 0).sum(axis=1, dtype=np.int64)))
    return WalkCounts(trace3, trace4, sum2, sum3, diag3)


def closed_walk_counts_naive(A: AdjacencyMatrix) -> WalkCounts:
    """Plain integer matrix powers; reference path for small graphs."""
    M = A.to_dense().astype(object)
    M2 = M.dot(M)
    M3 = M2.dot(M)
    M4 = M3.dot(M)
    diag3 = np.array([int(v) for v in np.diagonal(M3)], dtype=np.int64)
    return WalkCounts(
        int(np.trace(M3)), int(np.trace(M4)), int(M2.sum()), int(M3.sum()), diag3
    )
