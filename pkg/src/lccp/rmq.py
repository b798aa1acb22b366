"""Sparse-table range-minimum queries with O(1) lookups."""
from __future__ import annotations

from typing import Sequence

import numba
import numpy as np

from .errors import InputEmpty, RangeInvalid


def _floor_log2_table(m: int) -> np.ndarray:
    """``log[k] = floor(log2(k))`` for 1 <= k <= m; ``log[0]`` is unused."""
    return np.array([0] + [k.bit_length() - 1 for k in range(1, m + 1)], dtype=np.int64)


class SparseTableRMQ:
    """Range minima over an integer array ``A[1..m]``.

    ``levels[l][i]`` (0-based ``i``) is the minimum of the window of length
    ``2**l`` starting at ``A[i+1]``. Preprocessing is O(m log m); queries
    combine two overlapping windows.
    """

    def __init__(self, a: Sequence[int] | np.ndarray):
        source = np.array(a, dtype=np.int64)
        if source.ndim != 1 or source.size == 0:
            raise InputEmpty("cannot build an RMQ over an empty array")
        m = source.size
        self.source = source
        self.log_table = _floor_log2_table(m)
        depth = int(self.log_table[m]) + 1
        # padded 2D layout so compiled kernels can index it directly
        table = np.zeros((depth, m), dtype=np.int64)
        table[0] = source
        for level in range(1, depth):
            half = 1 << (level - 1)
            width = m - (1 << level) + 1
            np.minimum(table[level - 1, :width], table[level - 1, half:half + width],
                       out=table[level, :width])
        self.table = table
        self._log = self.log_table.tolist()

    def __len__(self) -> int:
        return self.source.size

    @property
    def levels(self) -> list[np.ndarray]:
        m = self.source.size
        return [self.table[level, : m - (1 << level) + 1] for level in range(self.table.shape[0])]

    def range_min(self, x: int, y: int) -> int:
        """Minimum of ``A[x..y]``, 1-based and inclusive."""
        if not 1 <= x <= y <= self.source.size:
            raise RangeInvalid(f"invalid range [{x}, {y}] for length {self.source.size}")
        level = self._log[y - x + 1]
        row = self.table[level]
        return int(min(row[x - 1], row[y - (1 << level)]))


@numba.njit(cache=True, nogil=True)
def range_min_kernel(table, log_table, x, y):
    """Compiled counterpart of :meth:`SparseTableRMQ.range_min` without checks."""
    level = log_table[y - x + 1]
    a = table[level, x - 1]
    b = table[level, y - (1 << level)]
    return a if a < b else b


def build_rmq(a: Sequence[int] | np.ndarray) -> SparseTableRMQ:
    return SparseTableRMQ(a)


def range_min(rmq: SparseTableRMQ, x: int, y: int) -> int:
    return rmq.range_min(x, y)
