"""Suffix array, rank and LCP arrays of the solidified word, with O(1) lcp.

The solidified word treats every hole as one extra ordinary symbol, so lcp
here is exact matching: a hole only equals another hole.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numba
import numpy as np

from .errors import PositionOutOfRange
from .partial_word import PartialWord
from .rmq import SparseTableRMQ, range_min_kernel


@dataclass(frozen=True, eq=False)
class SolidifiedWord:
    codes: np.ndarray  # int64, length n
    hole_code: Optional[int]  # None when the word has no holes

    @property
    def n(self) -> int:
        return int(self.codes.size)


def solidify(w: PartialWord) -> SolidifiedWord:
    """Map holes to the code one above the largest letter code (0 if none)."""
    letters = w.codes[~w.holes]
    if w.h == 0:
        return SolidifiedWord(w.codes.copy(), None)
    hole_code = int(letters.max()) + 1 if letters.size else 0
    return SolidifiedWord(np.where(w.holes, hole_code, w.codes), hole_code)


def build_suffix_array(s: SolidifiedWord) -> np.ndarray:
    """Suffix array by prefix doubling, O(n log^2 n) with numpy sorts.

    Returns 1-based positions in increasing suffix order. No terminator is
    appended; a suffix that is a proper prefix of another sorts first.
    """
    n = s.n
    # dense ranks of single symbols
    _, rank = np.unique(s.codes, return_inverse=True)
    rank = rank.astype(np.int64).reshape(-1)
    order = np.argsort(rank, kind="stable")
    k = 1
    while k < n and rank.max() < n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        r, sec = rank[order], second[order]
        bumps = np.empty(n, dtype=np.int64)
        bumps[0] = 0
        bumps[1:] = (r[1:] != r[:-1]) | (sec[1:] != sec[:-1])
        new_rank = np.empty(n, dtype=np.int64)
        new_rank[order] = np.cumsum(bumps)
        rank = new_rank
        k <<= 1
    return order.astype(np.int64) + 1


def rank_from_suffix_array(suf: np.ndarray) -> np.ndarray:
    """Inverse permutation: ``rank[i-1]`` is the 1-based rank of position i."""
    rank = np.empty(suf.size, dtype=np.int64)
    rank[suf - 1] = np.arange(1, suf.size + 1, dtype=np.int64)
    return rank


@numba.njit(cache=True)
def _kasai(codes, suf, rank):
    n = codes.size
    lcp = np.empty(n, dtype=np.int64)
    lcp[0] = -1
    h = 0
    for p in range(n):  # text order, 0-based
        r = rank[p] - 1
        if r == 0:
            h = 0
            continue
        q = suf[r - 1] - 1
        while p + h < n and q + h < n and codes[p + h] == codes[q + h]:
            h += 1
        lcp[r] = h
        if h > 0:
            h -= 1
    return lcp


def build_lcp_array(s: SolidifiedWord, suf: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """Kasai's linear-time LCP array; ``lcp[0]`` (that is LCP[1]) is -1."""
    return _kasai(s.codes, np.asarray(suf, dtype=np.int64), np.asarray(rank, dtype=np.int64))


class SuffixIndex:
    """SUF/RANK/LCP over the solidified word plus an RMQ over LCP.

    Arrays are stored 0-based but hold 1-based values: ``suf[r-1]`` is the
    position of rank r, ``rank[i-1]`` the rank of position i and
    ``lcp[r-1]`` the LCP entry of rank r.
    """

    def __init__(self, s: SolidifiedWord):
        self.word = s
        self.n = s.n
        self.suf = build_suffix_array(s)
        self.rank = rank_from_suffix_array(self.suf)
        self.lcp = build_lcp_array(s, self.suf, self.rank)
        self.rmq = SparseTableRMQ(self.lcp)
        # 1-based copy for the compiled kernels: rank_padded[i] = RANK[i]
        self.rank_padded = np.zeros(self.n + 2, dtype=np.int64)
        self.rank_padded[1 : self.n + 1] = self.rank
        self._rank_list = self.rank_padded.tolist()

    @classmethod
    def from_partial_word(cls, w: PartialWord) -> "SuffixIndex":
        return cls(solidify(w))

    def lcp_query(self, i: int, j: int) -> int:
        """Longest common prefix of the suffixes at positions i and j."""
        n = self.n
        if not (1 <= i <= n and 1 <= j <= n):
            raise PositionOutOfRange(f"positions ({i}, {j}) outside 1..{n}")
        if i == j:
            return n + 1 - i
        x, y = self._rank_list[i], self._rank_list[j]
        if x > y:
            x, y = y, x
        return self.rmq.range_min(x + 1, y)


@numba.njit(cache=True, nogil=True)
def lcp_kernel(rank_padded, rmq_table, log_table, n, i, j):
    """Compiled lcp(i, j) for valid 1-based positions."""
    if i == j:
        return n + 1 - i
    x = rank_padded[i]
    y = rank_padded[j]
    if x > y:
        x, y = y, x
    return range_min_kernel(rmq_table, log_table, x + 1, y)


def build_suffix_index(w: PartialWord) -> SuffixIndex:
    return SuffixIndex.from_partial_word(w)


def lcp_query(idx: SuffixIndex, i: int, j: int) -> int:
    return idx.lcp_query(i, j)
