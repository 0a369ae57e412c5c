"""Exact ordered-tuple motif sums.

Every count is a sum over tuples of *distinct* node indices in which each
ordering counts separately, so one triangle contributes 6 to ``tri3``.

    tri3   sum A_ij A_jk A_ki
    path2  sum A_ij A_ik
    raw1   sum A_ij A_jk A_kl A_li A_ik   (4-cycle with the i-k chord)
    raw2   sum A_ij A_jk A_ki A_il        (triangle with a pendant at i)
    raw3   sum A_ij A_ik A_il             (3-star centred at i)
    raw4   sum A_ij A_jk A_kl A_li        (4-cycle)
    raw5   sum A_ij A_jk A_kl             (3-edge path)

The four-node sums are returned without the ``1/n^4`` normalisation.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from itertools import permutations

import numpy as np

from rggdim.graph import AdjacencyMatrix, common_neighbor_matrix, degrees, walk_counts_from


@dataclass(frozen=True)
class MotifCounts:
    n: int
    tri3: int
    path2: int
    raw1: int
    raw2: int
    raw3: int
    raw4: int
    raw5: int

    def raw(self) -> tuple[int, int, int, int, int]:
        return (self.raw1, self.raw2, self.raw3, self.raw4, self.raw5)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def motif_counts_oracle(A: AdjacencyMatrix) -> MotifCounts:
    """Literal enumeration of every ordered distinct triple and quadruple.

    Cost is ``O(n^4)`` Python operations; keep ``n`` to a few dozen.
    """
    n = A.n
    a = A.to_dense().astype(int).tolist()
    tri3 = path2 = 0
    for i, j, k in permutations(range(n), 3):
        path2 += a[i][j] * a[i][k]
        tri3 += a[i][j] * a[j][k] * a[k][i]
    r1 = r2 = r3 = r4 = r5 = 0
    for i, j, k, l in permutations(range(n), 4):
        ij, jk, kl, li, ik, il = a[i][j], a[j][k], a[k][l], a[l][i], a[i][k], a[i][l]
        r1 += ij * jk * kl * li * ik
        r2 += ij * jk * ik * il
        r3 += ij * ik * il
        r4 += ij * jk * kl * li
        r5 += ij * jk * kl
    return MotifCounts(n, tri3, path2, r1, r2, r3, r4, r5)


def motif_counts_fast(A: AdjacencyMatrix) -> MotifCounts:
    """Closed-form counts from degrees and the common-neighbour matrix ``C = A^2``.

    The identities used (``d`` = degrees, ``diag3`` = diagonal of ``A^3``)::

        tri3  = tr(A^3)
        path2 = 1'A^2 1 - 1'A 1
        raw1  = sum_{i,k} A_ik (C_ik^2 - C_ik)
        raw2  = diag3 . d - 2 tr(A^3)
        raw3  = sum_i d_i (d_i - 1)(d_i - 2)
        raw4  = tr(A^4) - 2 sum_i d_i^2 + sum_i d_i
        raw5  = 1'A^3 1 - 2 1'A^2 1 + 1'A 1 - tr(A^3)

    Terms such as ``tr(A)`` and ``tr(A * A^3)`` (elementwise) vanish because
    the diagonal is zero and are left out.
    """
    n = A.n
    deg = degrees(A)
    sq = common_neighbor_matrix(A)
    walks = walk_counts_from(A, sq, deg)
    dense = A.to_dense()
    c = np.where(dense, sq, 0)
    sum1 = int(deg.sum())
    tri3 = walks.trace3
    return MotifCounts(
        n=n,
        tri3=tri3,
        path2=walks.sum2 - sum1,
        raw1=int(np.einsum("ij,ij->", c, c - 1, dtype=np.int64)),
        raw2=int(np.dot(walks.diag3, deg)) - 2 * tri3,
        raw3=int(np.sum(deg * (deg - 1) * (deg - 2), dtype=np.int64)),
        raw4=walks.trace4 - 2 * walks.sum2 + sum1,
        raw5=walks.sum3 - 2 * walks.sum2 + sum1 - tri3,
    )
