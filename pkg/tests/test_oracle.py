import numpy as np
import pytest
from hypothesis import given, strategies as st

from lccp import PartialWord, PositionOutOfRange, parse, solidify
from lccp.oracle import (GeneratorParams, blocky_partial_word, check_word, fuzz_compare, naive_lccp,
                         naive_lccp_matrix, naive_lcp, naive_suffix_array, random_partial_word)

from conftest import EXAMPLE

words = st.lists(st.one_of(st.none(), st.integers(0, 2)), min_size=1, max_size=30).map(
    PartialWord.from_symbols)


def test_naive_examples(example_word):
    assert naive_lccp(example_word, 2, 9) == 3
    assert naive_lccp(example_word, 3, 1) == 8
    assert naive_lccp(example_word, 13, 13) == 1
    s = solidify(example_word)
    assert naive_lcp(s, 3, 6) == 2
    assert naive_lcp(s, 1, 1) == 13
    assert naive_lcp(solidify(parse("banana")), 2, 4) == 3
    assert naive_suffix_array(solidify(parse("a"))) == [1]


def test_naive_range(example_word):
    with pytest.raises(PositionOutOfRange):
        naive_lccp(example_word, 0, 1)
    with pytest.raises(PositionOutOfRange):
        naive_lcp(solidify(example_word), 1, 14)


@given(words)
def test_matrix_agrees_with_scan(w):
    m = naive_lccp_matrix(w)
    s = solidify(w)
    for i in range(1, w.n + 1):
        for j in range(1, w.n + 1):
            assert m[i, j] == naive_lccp(w, i, j)
            assert naive_lcp(s, i, j) <= m[i, j]


def test_generator_extremes():
    w = random_partial_word(GeneratorParams(5, 1, 0.0, 11))
    assert w.h == 0 and len(set(w.symbols)) == 1
    w = random_partial_word(GeneratorParams(5, 4, 1.0, 11))
    assert w.h == 5 and w.mu == 1


def test_generator_deterministic():
    p = GeneratorParams(100, 2, 0.3, 42)
    assert random_partial_word(p) == random_partial_word(p)
    assert random_partial_word(p) != random_partial_word(GeneratorParams(100, 2, 0.3, 43))


@pytest.mark.parametrize("kwargs", [dict(n=0), dict(n=3, sigma=0), dict(n=3, hole_density=1.5), dict(n=3, seed=-1)])
def test_generator_params_validation(kwargs):
    with pytest.raises(ValueError):
        GeneratorParams(**kwargs)


@pytest.mark.parametrize("n, mu", [(100, 10), (1000, 50), (5, 3), (7, 0)])
def test_blocky_word_block_count(n, mu):
    w = blocky_partial_word(n, 4, mu, seed=5)
    assert w.n == n and w.mu == mu


def test_fuzz_compare_examples():
    r = fuzz_compare(GeneratorParams(64, 2, 0.5, 1), 100)
    assert r.ok and r.trials == r.words_tested == 100 and r.pairs_checked == 100 * 64 * 64
    r = fuzz_compare(GeneratorParams(1, 3, 0.5, 1), 1)
    assert r.ok and r.pairs_checked == 1
    assert fuzz_compare(GeneratorParams(128, 26, 0.05, 1), 50).ok


def test_fuzz_samples_large_words():
    r = fuzz_compare(GeneratorParams(300, 2, 0.2, 9), 2)
    assert r.ok and r.pairs_checked == 2 * 10 * 300


def test_fuzz_rejects_zero_trials():
    with pytest.raises(ValueError):
        fuzz_compare(GeneratorParams(4), 0)


def test_check_word_reports_mismatch(monkeypatch):
    from lccp.lccp_index import LccpIndex

    original = LccpIndex.lccp_many
    monkeypatch.setattr(LccpIndex, "lccp_many", lambda self, ii, jj: original(self, ii, jj) + (ii == 1) * (jj == 2))
    report = check_word(parse(EXAMPLE))
    assert not report.ok
    (m,) = report.mismatches
    assert (m.i, m.j, m.expected, m.actual) == (1, 2, 0, 1)
