import pytest
from hypothesis import given, strategies as st

from lccp import InputEmpty, PartialWord, PositionType, compatible, compute_next_change, parse, transit_positions

from conftest import EXAMPLE


def brute_next_change(w):
    n = w.n
    out = []
    for i in range(1, n + 1):
        k = next((k for k in range(1, n + 1 - i) if w.type(i + k) != w.type(i)), n + 1 - i)
        out.append(k)
    return out


words = st.lists(st.one_of(st.none(), st.integers(0, 3)), min_size=1, max_size=40).map(
    PartialWord.from_symbols)


def test_parse_example(example_word):
    w = example_word
    assert (w.n, w.h, w.mu) == (13, 6, 3)
    assert w.n - w.h == 7
    assert w[3] is None and w[1] == ord("a")


@pytest.mark.parametrize("text, n, h, mu, sentinel", [
    ("abc", 3, 0, 0, PositionType.HOLE),
    ("???", 3, 3, 1, PositionType.SOLID),
    ("a?a", 3, 1, 1, PositionType.HOLE),
])
def test_parse_counts(text, n, h, mu, sentinel):
    w = parse(text)
    assert (w.n, w.h, w.mu, w.sentinel_type) == (n, h, mu, sentinel)


def test_parse_strips_one_line_terminator():
    assert parse(b"ab?\r\n") == parse(b"ab?")
    assert parse(b"ab?\n\n").n == 4  # only one terminator is removed


@pytest.mark.parametrize("text", [b"", b"\n", b"\r\n"])
def test_parse_empty(text):
    with pytest.raises(InputEmpty):
        parse(text)


def test_custom_hole_char():
    w = parse(b"a*?", b"*")
    assert w.symbols == [ord("a"), None, ord("?")]


def test_compatible():
    a, b = ord("a"), ord("b")
    assert compatible(a, None) and compatible(None, a) and compatible(None, None)
    assert compatible(a, a)
    assert not compatible(a, b)


def test_next_change_examples(example_word):
    nc = compute_next_change(example_word)
    assert nc[1:14].tolist() == brute_next_change(example_word)
    assert (nc[1], nc[2], nc[3], nc[13]) == (2, 1, 2, 1)
    assert compute_next_change(parse("abc"))[1:4].tolist() == [3, 2, 1]
    assert compute_next_change(parse("a?"))[1:3].tolist() == [1, 1]


def test_transit_examples(example_word):
    assert transit_positions(example_word).tolist() == [1, 3, 5, 6, 9, 13]
    assert transit_positions(parse("abc")).tolist() == [1]
    assert transit_positions(parse("a?a")).tolist() == [1, 2, 3]


@given(words)
def test_next_change_properties(w):
    nc = compute_next_change(w)
    assert nc[1 : w.n + 1].tolist() == brute_next_change(w)
    for i in range(1, w.n + 1):
        assert 1 <= nc[i] <= w.n + 1 - i
        if i + nc[i] <= w.n:
            assert w.type(i + nc[i]) != w.type(i)


@given(words)
def test_transit_properties(w):
    t = transit_positions(w).tolist()
    assert t == [i for i in range(1, w.n + 1) if w.type(i) != w.type(i - 1)]
    assert t[0] == 1
    assert len(t) <= 2 * w.mu + 1
    assert w.mu <= w.h
    assert w.sentinel_type != w.type(1)


@given(st.binary(min_size=1, max_size=50).filter(lambda b: not b.endswith(b"\n")))
def test_parse_round_trip(data):
    assert parse(data, b"?").to_bytes(b"?") == data
