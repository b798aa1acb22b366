"""Binary serialization of an LccpIndex.

Layout, all integers little-endian uint32::

    b"LCCP"  version:u8  n  h  mu  kappa
    word bytes (n)  hole byte (1)
    NextChange[1..n]
    T[1..kappa]
    table, (n+1) x (kappa+1), row-major

The suffix index is not stored; it is rebuilt from the word on load.
"""
from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import IndexFormatError
from .lccp_index import TABLE_DTYPE, LccpIndex
from .partial_word import DEFAULT_HOLE_CHAR, _hole_byte, compute_next_change, parse, transit_positions
from .suffix_index import SuffixIndex

MAGIC = b"LCCP"
VERSION = 1
_HEADER = struct.Struct("<4sB4I")
_U32 = np.dtype("<u4")


def dumps(idx: LccpIndex, hole_char: bytes | str = DEFAULT_HOLE_CHAR) -> bytes:
    w = idx.word
    if w.n >= 2**32 - 1:
        raise ValueError("word too long for the uint32 index format")
    parts = [
        _HEADER.pack(MAGIC, VERSION, w.n, w.h, w.mu, idx.kappa),
        w.to_bytes(hole_char),
        bytes([_hole_byte(hole_char)]),
        idx.next_change[1 : w.n + 1].astype(_U32).tobytes(),
        idx.transit.astype(_U32).tobytes(),
        idx.table.astype(_U32).tobytes(),
    ]
    return b"".join(parts)


def loads(data: bytes) -> LccpIndex:
    if len(data) < _HEADER.size:
        raise IndexFormatError("truncated header")
    magic, version, n, h, mu, kappa = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise IndexFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise IndexFormatError(f"unsupported format version {version}")
    expected = _HEADER.size + n + 1 + 4 * (n + kappa + (n + 1) * (kappa + 1))
    if len(data) != expected:
        raise IndexFormatError(f"expected {expected} bytes, found {len(data)}")

    pos = _HEADER.size
    text = data[pos : pos + n]
    hole = data[pos + n]
    pos += n + 1
    w = parse(text, hole)
    if (w.n, w.h, w.mu) != (n, h, mu):
        raise IndexFormatError("header counts disagree with the stored word")

    def take(count: int) -> np.ndarray:
        nonlocal pos
        arr = np.frombuffer(data, dtype=_U32, count=count, offset=pos).astype(np.int64)
        pos += 4 * count
        return arr

    next_change = np.zeros(n + 2, dtype=np.int64)
    next_change[1 : n + 1] = take(n)
    transit = take(kappa)
    table = take((n + 1) * (kappa + 1)).reshape(n + 1, kappa + 1)

    if not np.array_equal(next_change, compute_next_change(w)):
        raise IndexFormatError("NextChange does not match the stored word")
    if not np.array_equal(transit, transit_positions(w)):
        raise IndexFormatError("transit positions do not match the stored word")
    if table[n].any() or table[:, kappa].any():
        raise IndexFormatError("boundary row/column of the table is not zero")
    # lccp(i, j) <= n + 1 - max(i, j), with equality on the diagonal
    rows = np.arange(1, n + 1)[:, None]
    bound = n + 1 - np.maximum(rows, transit[None, :])
    if (table[:n, :kappa] > bound).any():
        raise IndexFormatError("table value exceeds the word length bound")
    if not np.array_equal(table[transit - 1, np.arange(kappa)], n + 1 - transit):
        raise IndexFormatError("table diagonal is inconsistent")

    return LccpIndex(w, SuffixIndex.from_partial_word(w), next_change, transit,
                     table.astype(TABLE_DTYPE))


def save_index(idx: LccpIndex, path: str | Path, hole_char: bytes | str = DEFAULT_HOLE_CHAR) -> None:
    Path(path).write_bytes(dumps(idx, hole_char))


def load_index(path: str | Path) -> LccpIndex:
    return loads(Path(path).read_bytes())
