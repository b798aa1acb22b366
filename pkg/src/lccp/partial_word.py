"""Partial words: strings over an alphabet plus a hole symbol.

Positions are 1-based everywhere in the public API. Internally a word is a
numpy array of integer letter codes in which holes are stored as ``-1``.
"""
from __future__ import annotations

import enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InputEmpty, PositionOutOfRange

HOLE_CODE = -1
DEFAULT_HOLE_CHAR = b"?"

Symbol = Optional[int]  # None is a hole


class PositionType(enum.Enum):
    SOLID = "solid"
    HOLE = "hole"


class PartialWord:
    """An immutable partial word with its hole statistics.

    Attributes:
        codes: read-only int64 array of length n, ``HOLE_CODE`` for holes.
        n: word length.
        h: number of holes.
        mu: number of maximal blocks of consecutive holes.
        sentinel_type: type of the virtual position 0, always the opposite
            of the type of position 1.
    """

    __slots__ = ("codes", "n", "h", "mu", "sentinel_type", "_holes")

    def __init__(self, codes: Sequence[int] | np.ndarray):
        arr = np.array(codes, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise InputEmpty("a partial word needs at least one symbol")
        if (arr < HOLE_CODE).any():
            raise ValueError("letter codes must be non-negative integers")
        arr.flags.writeable = False
        holes = arr == HOLE_CODE
        holes.flags.writeable = False
        self.codes = arr
        self._holes = holes
        self.n = int(arr.size)
        self.h = int(holes.sum())
        # a block starts wherever a hole is not preceded by a hole
        self.mu = int(holes[0]) + int((holes[1:] & ~holes[:-1]).sum())
        self.sentinel_type = PositionType.SOLID if holes[0] else PositionType.HOLE

    @classmethod
    def from_symbols(cls, symbols: Iterable[Symbol]) -> "PartialWord":
        return cls([HOLE_CODE if s is None else s for s in symbols])

    @property
    def holes(self) -> np.ndarray:
        """Boolean mask of hole positions (0-based)."""
        return self._holes

    @property
    def symbols(self) -> list[Symbol]:
        return [None if c == HOLE_CODE else c for c in self.codes.tolist()]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Symbol:
        self._check(i)
        code = int(self.codes[i - 1])
        return None if code == HOLE_CODE else code

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialWord):
            return NotImplemented
        return np.array_equal(self.codes, other.codes)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PartialWord({self.render()!r})"

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise PositionOutOfRange(f"position {i} outside 1..{self.n}")

    def type(self, i: int) -> PositionType:
        """Type of position ``i``; position 0 is the sentinel."""
        if i == 0:
            return self.sentinel_type
        self._check(i)
        return PositionType.HOLE if self._holes[i - 1] else PositionType.SOLID

    def is_hole(self, i: int) -> bool:
        return self.type(i) is PositionType.HOLE

    def to_bytes(self, hole_char: bytes = DEFAULT_HOLE_CHAR) -> bytes:
        """Inverse of :func:`parse`.

        Raises ValueError if a letter code is not a byte or equals the hole byte.
        """
        hole = _hole_byte(hole_char)
        letters = self.codes[~self._holes]
        if letters.size and (letters.max() > 255 or (letters == hole).any()):
            raise ValueError("word is not representable with this hole byte")
        out = np.where(self._holes, hole, self.codes).astype(np.uint8)
        return out.tobytes()

    def render(self, hole_char: str = "?") -> str:
        """Human-readable form; non-printable letters are shown as ``<code>``."""
        parts = []
        for s in self.symbols:
            if s is None:
                parts.append(hole_char)
            elif 32 < s < 127 and chr(s) != hole_char:
                parts.append(chr(s))
            else:
                parts.append(f"<{s}>")
        return "".join(parts)


def _hole_byte(hole_char: bytes | str | int) -> int:
    if isinstance(hole_char, int):
        if not 0 <= hole_char <= 255:
            raise ValueError("hole_char must be a single byte")
        return hole_char
    if isinstance(hole_char, str):
        hole_char = hole_char.encode("latin-1")
    if len(hole_char) != 1:
        raise ValueError("hole_char must be a single byte")
    return hole_char[0]


def parse(text: bytes | str, hole_char: bytes | str | int = DEFAULT_HOLE_CHAR) -> PartialWord:
    """Parse raw bytes into a partial word.

    A single trailing ``\\n`` (optionally preceded by ``\\r``) is stripped.
    Every occurrence of ``hole_char`` is a hole, every other byte a letter
    whose code is the byte value. ``str`` input is encoded as latin-1.
    """
    if isinstance(text, str):
        text = text.encode("latin-1")
    hole = _hole_byte(hole_char)
    if text.endswith(b"\n"):
        text = text[:-1]
        if text.endswith(b"\r"):
            text = text[:-1]
    if not text:
        raise InputEmpty("input word is empty")
    raw = np.frombuffer(text, dtype=np.uint8).astype(np.int64)
    raw[raw == hole] = HOLE_CODE
    return PartialWord(raw)


def compatible(a: Symbol, b: Symbol) -> bool:
    """Compatibility of two symbols: a hole matches anything, letters match themselves."""
    return a is None or b is None or a == b


def compute_next_change(w: PartialWord) -> np.ndarray:
    """Distance from each position to the next position of the other type.

    Returns an int64 array ``nc`` of length n+2 indexed by 1-based position:
    ``nc[i]`` for 1 <= i <= n, with ``nc[0] = nc[n+1] = 0`` as padding.
    Where no later position has a different type the value is n+1-i.
    """
    n = w.n
    holes = w.holes.tolist()
    nc = [0] * (n + 2)
    nc[n] = 1
    for i in range(n - 1, 0, -1):
        nc[i] = 1 if holes[i] != holes[i - 1] else nc[i + 1] + 1
    return np.array(nc, dtype=np.int64)


def transit_positions(w: PartialWord) -> np.ndarray:
    """Sorted 1-based positions whose type differs from the previous position's.

    Position 1 is always included because the sentinel has the opposite type.
    """
    holes = w.holes
    change = np.empty(w.n, dtype=bool)
    change[0] = True
    np.not_equal(holes[1:], holes[:-1], out=change[1:])
    return np.flatnonzero(change).astype(np.int64) + 1
