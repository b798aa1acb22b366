"""Brute-force references and random word generation for testing.

Nothing here touches the suffix index or the LCCP table, so the functions
can be trusted as ground truth for them.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PositionOutOfRange
from .partial_word import HOLE_CODE, PartialWord, compatible
from .suffix_index import SolidifiedWord


def _check(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise PositionOutOfRange(f"positions ({i}, {j}) outside 1..{n}")


def naive_lccp(w: PartialWord, i: int, j: int) -> int:
    """Direct scan: count compatible symbol pairs from i and j onward."""
    _check(w.n, i, j)
    symbols = w.symbols
    k = 0
    while max(i, j) + k <= w.n and compatible(symbols[i + k - 1], symbols[j + k - 1]):
        k += 1
    return k


def naive_lcp(s: SolidifiedWord, i: int, j: int) -> int:
    _check(s.n, i, j)
    codes = s.codes.tolist()
    k = 0
    while max(i, j) + k <= s.n and codes[i + k - 1] == codes[j + k - 1]:
        k += 1
    return k


def naive_suffix_array(s: SolidifiedWord) -> list[int]:
    codes = s.codes.tolist()
    return sorted(range(1, s.n + 1), key=lambda p: codes[p - 1 :])


def naive_lcp_array(s: SolidifiedWord, suf) -> list[int]:
    """LCP array recomputed by scanning each pair of adjacent suffixes."""
    suf = [int(p) for p in suf]
    return [-1] + [naive_lcp(s, suf[r - 1], suf[r]) for r in range(1, len(suf))]


def naive_lccp_matrix(w: PartialWord) -> np.ndarray:
    """All-pairs lccp as an ``(n+1) x (n+1)`` matrix indexed 1-based.

    Uses ``L[i][j] = L[i+1][j+1] + 1`` when w_i and w_j are compatible, else 0,
    swept one row at a time from the end. Row/column 0 are unused.
    """
    n = w.n
    holes = w.holes
    codes = w.codes
    out = np.zeros((n + 2, n + 2), dtype=np.int64)
    for i in range(n, 0, -1):
        ok = holes[i - 1] | holes | (codes == codes[i - 1])
        out[i, 1 : n + 1] = np.where(ok, out[i + 1, 2 : n + 2] + 1, 0)
    return out[: n + 1, : n + 1]


@dataclass(frozen=True)
class GeneratorParams:
    n: int
    sigma: int = 2
    hole_density: float = 0.5
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.sigma < 1:
            raise ValueError("sigma must be at least 1")
        if not 0.0 <= self.hole_density <= 1.0:
            raise ValueError("hole_density must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _letter_base(sigma: int) -> int:
    # readable 'a'.. letters when they fit, raw codes 0.. otherwise
    return ord("a") if sigma <= 26 else 0


def random_partial_word(p: GeneratorParams) -> PartialWord:
    """Each position is a hole with probability ``hole_density``, else a uniform letter."""
    rng = np.random.default_rng(p.seed)
    letters = rng.integers(0, p.sigma, size=p.n) + _letter_base(p.sigma)
    holes = rng.random(p.n) < p.hole_density
    return PartialWord(np.where(holes, HOLE_CODE, letters))


def blocky_partial_word(n: int, sigma: int, mu: int, seed: int, max_block: int = 8) -> PartialWord:
    """Random word with exactly ``mu`` hole blocks (when they fit) at random places.

    Block lengths are uniform in 1..max_block; blocks are separated by at
    least one letter so they stay maximal.
    """
    rng = np.random.default_rng(seed)
    codes = rng.integers(0, sigma, size=n) + _letter_base(sigma)
    mu = min(mu, (n + 1) // 2)
    if mu:
        lengths = rng.integers(1, max_block + 1, size=mu)
        # shrink blocks until they fit with mandatory separators
        while lengths.sum() + mu - 1 > n:
            lengths = np.maximum(1, lengths // 2)
        slack = n - int(lengths.sum()) - (mu - 1)
        # distribute slack across mu+1 gaps
        cuts = np.sort(rng.integers(0, slack + 1, size=mu))
        gaps = np.diff(np.concatenate(([0], cuts, [slack])))
        pos = int(gaps[0])
        for b in range(mu):
            codes[pos : pos + lengths[b]] = HOLE_CODE
            pos += int(lengths[b]) + 1 + int(gaps[b + 1])
    return PartialWord(codes)


@dataclass(frozen=True)
class Mismatch:
    word: PartialWord
    i: int
    j: int
    expected: int
    actual: int


@dataclass
class OracleReport:
    trials: int = 0
    words_tested: int = 0
    pairs_checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def merge(self, other: "OracleReport") -> "OracleReport":
        return OracleReport(
            self.trials + other.trials,
            self.words_tested + other.words_tested,
            self.pairs_checked + other.pairs_checked,
            self.mismatches + other.mismatches,
        )


def sample_pairs(n: int, seed: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    return rng.integers(1, n + 1, size=count), rng.integers(1, n + 1, size=count)


def check_word(w: PartialWord, seed: int = 0, all_pairs_limit: int = 128) -> OracleReport:
    """Compare the index against the brute-force matrix on one word."""
    from .lccp_index import build_index

    n = w.n
    idx = build_index(w)
    expected = naive_lccp_matrix(w)
    if n <= all_pairs_limit:
        ii, jj = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
        ii, jj = ii.ravel(), jj.ravel()
    else:
        ii, jj = sample_pairs(n, seed, 10 * n)
    actual = idx.lccp_many(ii, jj)
    want = expected[ii, jj]
    bad = np.flatnonzero(actual != want)
    mismatches = [Mismatch(w, int(ii[t]), int(jj[t]), int(want[t]), int(actual[t])) for t in bad]
    return OracleReport(1, 1, int(ii.size), mismatches)


def fuzz_compare(p: GeneratorParams, trials: int, all_pairs_limit: int = 128) -> OracleReport:
    """Generate ``trials`` words from ``p`` and check every (or sampled) pair.

    Trial ``t`` uses a seed derived from ``(p.seed, t)``, so any failure can be
    regenerated on its own.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    report = OracleReport()
    for t, child in enumerate(np.random.SeedSequence([p.seed]).spawn(trials)):
        seed = int(child.generate_state(1, dtype=np.uint64)[0])
        w = random_partial_word(GeneratorParams(p.n, p.sigma, p.hole_density, seed))
        report = report.merge(check_word(w, seed, all_pairs_limit))
    report.mismatches.sort(key=lambda m: (m.word.render(), m.i, m.j))
    return report
