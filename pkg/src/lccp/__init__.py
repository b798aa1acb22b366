"""Longest common compatible prefix (lccp) queries on partial words.

Build an index once, then answer ``lccp(i, j)`` in constant time::

    >>> from lccp import parse, build_index
    >>> idx = build_index(parse("ab??a???bcab?"))
    >>> idx.lccp(2, 9)
    3
"""
from .errors import (IndexFormatError, InputEmpty, LccpError, NotATransitColumn,
                     PositionOutOfRange, RangeInvalid)
from .lccp_index import LccpIndex, LccpStats, build_index, lccp_query, lccp_stats, preprocess, table_get
from .partial_word import (PartialWord, PositionType, compatible, compute_next_change, parse,
                           transit_positions)
from .rmq import SparseTableRMQ, build_rmq, range_min
from .suffix_index import (SolidifiedWord, SuffixIndex, build_lcp_array, build_suffix_array,
                           lcp_query, solidify)

__all__ = [
    "IndexFormatError", "InputEmpty", "LccpError", "NotATransitColumn", "PositionOutOfRange",
    "RangeInvalid", "LccpIndex", "LccpStats", "build_index", "lccp_query", "lccp_stats",
    "preprocess", "table_get", "PartialWord", "PositionType", "compatible",
    "compute_next_change", "parse", "transit_positions", "SparseTableRMQ", "build_rmq",
    "range_min", "SolidifiedWord", "SuffixIndex", "build_lcp_array", "build_suffix_array",
    "lcp_query", "solidify",
]
