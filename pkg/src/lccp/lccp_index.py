"""Longest common compatible prefix queries on partial words.

The index stores lccp(i, j) for every position i and every transit
position j (plus a zero row and column for the virtual position n+1).
Any other pair reduces to one stored cell after skipping ``d`` symbols,
where ``d`` is the distance to the nearest type change of either position:
inside that stretch either a hole is involved (always compatible) or both
sides are solid, where exact lcp over the solidified word decides.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numba
import numpy as np

from .errors import NotATransitColumn, PositionOutOfRange
from .partial_word import PartialWord, compute_next_change, transit_positions
from .rmq import range_min_kernel
from .suffix_index import SuffixIndex

TABLE_DTYPE = np.int32


@numba.njit(cache=True, nogil=True)
def _table_get(table, column, i, j):
    c = column[j]
    if c >= 0:
        return table[i - 1, c]
    c = column[i]
    if c >= 0:
        return table[j - 1, c]
    raise LookupError("neither position is a transit column")


@numba.njit(cache=True, nogil=True)
def _query(holes, next_change, rank, rmq_table, log_table, table, column, n, i, j):
    d = min(next_change[i], next_change[j])
    if not holes[i] and not holes[j]:
        if i == j:
            k = n + 1 - i
        else:
            x = rank[i]
            y = rank[j]
            if x > y:
                x, y = y, x
            k = range_min_kernel(rmq_table, log_table, x + 1, y)
        if k < d:
            return k
    return d + _table_get(table, column, i + d, j + d)


@numba.njit(cache=True, nogil=True)
def _fill(holes, next_change, rank, rmq_table, log_table, table, column, transit, n):
    # every dependency (i+d, j+d) has a strictly larger index sum, so
    # sweeping anti-diagonals from the bottom-right is a valid schedule
    kappa = transit.size
    for s in range(2 * n, 1, -1):
        for c in range(kappa):
            j = transit[c]
            i = s - j
            if 1 <= i <= n:
                table[i - 1, c] = _query(holes, next_change, rank, rmq_table,
                                         log_table, table, column, n, i, j)


@numba.njit(cache=True, nogil=True)
def _query_many(holes, next_change, rank, rmq_table, log_table, table, column, n, ii, jj):
    out = np.empty(ii.size, dtype=np.int64)
    for t in range(ii.size):
        out[t] = _query(holes, next_change, rank, rmq_table, log_table,
                        table, column, n, ii[t], jj[t])
    return out


@dataclass(frozen=True)
class LccpStats:
    n: int
    h: int
    mu: int
    kappa: int
    table_cells: int
    build_seconds: float


class LccpIndex:
    """Constant-time lccp queries over a partial word.

    Attributes:
        word: the indexed partial word.
        sidx: suffix index over the solidified word.
        next_change: 1-based NextChange array, length n+2 (padding at 0, n+1).
        transit: sorted transit positions, length kappa.
        table: ``(n+1) x (kappa+1)`` array; row ``i-1`` holds position i,
            column ``c`` holds transit ``transit[c]`` and the last column
            holds the virtual position n+1. The last row and column are 0.
    """

    def __init__(self, word: PartialWord, sidx: SuffixIndex, next_change: np.ndarray,
                 transit: np.ndarray, table: np.ndarray, build_seconds: float = 0.0):
        n = word.n
        self.word = word
        self.sidx = sidx
        self.next_change = next_change
        self.transit = transit
        self.table = table
        self.build_seconds = build_seconds
        self._column = np.full(n + 2, -1, dtype=np.int64)
        self._column[transit] = np.arange(transit.size, dtype=np.int64)
        self._column[n + 1] = transit.size
        self._holes = np.zeros(n + 2, dtype=np.bool_)
        self._holes[1 : n + 1] = word.holes

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def kappa(self) -> int:
        return int(self.transit.size)

    @property
    def column_of(self) -> dict[int, int]:
        """Column slot of every position in T and of n+1."""
        cols = {int(p): c for c, p in enumerate(self.transit.tolist())}
        cols[self.n + 1] = self.kappa
        return cols

    def _kernel_args(self):
        s = self.sidx
        return (self._holes, self.next_change, s.rank_padded, s.rmq.table,
                s.rmq.log_table, self.table, self._column, self.n)

    def table_get(self, i: int, j: int) -> int:
        """Stored lccp(i, j); one of i, j must be a transit position or n+1."""
        n = self.n
        if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
            raise PositionOutOfRange(f"table index ({i}, {j}) outside 1..{n + 1}")
        c = self._column[j]
        if c >= 0:
            return int(self.table[i - 1, c])
        c = self._column[i]
        if c >= 0:
            return int(self.table[j - 1, c])
        raise NotATransitColumn(f"neither {i} nor {j} is a transit position")

    def lccp(self, i: int, j: int) -> int:
        """Longest common compatible prefix of positions i and j (1-based)."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise PositionOutOfRange(f"positions ({i}, {j}) outside 1..{n}")
        return int(_query(*self._kernel_args(), i, j))

    def lccp_many(self, ii, jj) -> np.ndarray:
        """Vectorized :meth:`lccp` over two equal-length position arrays."""
        ii = np.ascontiguousarray(ii, dtype=np.int64)
        jj = np.ascontiguousarray(jj, dtype=np.int64)
        if ii.shape != jj.shape:
            raise ValueError("position arrays differ in shape")
        n = self.n
        if ii.size and (min(ii.min(), jj.min()) < 1 or max(ii.max(), jj.max()) > n):
            raise PositionOutOfRange(f"positions outside 1..{n}")
        return _query_many(*self._kernel_args(), ii.ravel(), jj.ravel()).reshape(ii.shape)

    def rows(self) -> dict[int, np.ndarray]:
        """``{j: [lccp(1, j), ..., lccp(n, j)]}`` for every transit j."""
        return {int(j): self.table[: self.n, c].astype(np.int64)
                for c, j in enumerate(self.transit.tolist())}

    def stats(self) -> LccpStats:
        return LccpStats(self.n, self.word.h, self.word.mu, self.kappa,
                         int(self.table.size), self.build_seconds)


def preprocess(w: PartialWord, sidx: SuffixIndex) -> LccpIndex:
    """Fill the LCCP table by dynamic programming in O(n*kappa + n) time."""
    start = time.perf_counter()
    n = w.n
    next_change = compute_next_change(w)
    transit = transit_positions(w)
    table = np.zeros((n + 1, transit.size + 1), dtype=TABLE_DTYPE)
    idx = LccpIndex(w, sidx, next_change, transit, table)
    _fill(*idx._kernel_args()[:-1], transit, n)
    idx.build_seconds = time.perf_counter() - start
    return idx


def build_index(w: PartialWord) -> LccpIndex:
    """Suffix index plus LCCP table; ``build_seconds`` covers both."""
    start = time.perf_counter()
    sidx = SuffixIndex.from_partial_word(w)
    idx = preprocess(w, sidx)
    idx.build_seconds = time.perf_counter() - start
    return idx


def table_get(idx: LccpIndex, i: int, j: int) -> int:
    return idx.table_get(i, j)


def lccp_query(idx: LccpIndex, i: int, j: int) -> int:
    return idx.lccp(i, j)


def lccp_stats(idx: LccpIndex) -> LccpStats:
    return idx.stats()


_warm: Optional[bool] = None


def warm_up() -> float:
    """Compile (or load cached) kernels on a tiny word; returns seconds spent."""
    global _warm
    start = time.perf_counter()
    if _warm is None:
        from .partial_word import parse
        idx = build_index(parse(b"ab?a"))
        idx.lccp(1, 2)
        idx.lccp_many([1], [2])
        _warm = True
    return time.perf_counter() - start
