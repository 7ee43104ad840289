import pytest
from fractions import Fraction
from hypothesis import given
import hypothesis.strategies as st

from balancedq.alphabet import (
    Alphabet,
    charge_sum,
    format_word,
    from_zq,
    is_cb,
    is_cpb,
    is_pb,
    is_sb,
    parse_word,
    phi,
    polarity_sum,
    sub_alphabet,
    symbol_count,
    symbols,
    to_zq,
    validate_word,
)
from balancedq.errors import AlphabetError, WordParseError


def test_symbols_small():
    assert symbols(2) == (-1, 1)
    assert symbols(3) == (-2, 0, 2)
    assert symbols(4) == (-3, -1, 1, 3)
    assert symbols(5) == (-4, -2, 0, 2, 4)


def test_symbols_structure():
    for q in range(2, 12):
        a = symbols(q)
        assert len(a) == q
        assert a[0] == -q + 1 and a[-1] == q - 1
        assert all(b - a == 2 for a, b in zip(a, a[1:]))
        assert sum(a) == 0


def test_symbols_bad_order():
    with pytest.raises(AlphabetError):
        symbols(1)
    with pytest.raises(AlphabetError):
        symbols(0)


@given(st.integers(2, 40))
def test_zq_bijection(q):
    a = symbols(q)
    residues = to_zq(a, q)
    assert residues == tuple(q - 1 - i for i in range(q))
    assert from_zq(residues, q) == a
    assert to_zq(from_zq(tuple(range(q)), q), q) == tuple(range(q))


def test_zq_rejects_outsiders():
    with pytest.raises(AlphabetError):
        to_zq([2], 2)
    with pytest.raises(AlphabetError):
        to_zq([1], 3)
    with pytest.raises(AlphabetError):
        from_zq([5], 5)
    with pytest.raises(AlphabetError):
        from_zq([-1], 5)


def test_sub_alphabet():
    assert sub_alphabet(5, 1) == (-4, -2, 0, 2, 4)
    assert sub_alphabet(5, 2) == (-2, 0, 2, 4)
    assert sub_alphabet(5, 5) == (4,)
    assert sub_alphabet(3, 2) == (0, 2)
    with pytest.raises(AlphabetError):
        sub_alphabet(5, 0)
    with pytest.raises(AlphabetError):
        sub_alphabet(5, 6)


def test_validate_word():
    assert validate_word([4, -4, 0], 5) == (4, -4, 0)
    with pytest.raises(AlphabetError):
        validate_word([3], 5)
    with pytest.raises(AlphabetError):
        validate_word([0], 2)


def test_sums_and_counts():
    w = (4, 4, -2, 0, 0, 0, 0)
    assert charge_sum(w) == 6
    assert polarity_sum(w) == 1
    assert symbol_count(w, 0, 5) == 4
    assert symbol_count(w, 4, 5) == 2
    assert symbol_count(w, -4, 5) == 0
    with pytest.raises(AlphabetError):
        symbol_count(w, 3, 5)


def test_phi():
    assert phi(4) == 1
    assert phi(-2) == -1
    assert phi(0) == 0
    assert phi(4, mode="half") == Fraction(1, 2)
    assert phi(-4, mode="half") == Fraction(-1, 2)
    assert phi(0, mode="half") == 0
    with pytest.raises(AlphabetError):
        phi(1, mode="bogus")


def test_predicates_empty_word():
    for q in (2, 3, 4, 5):
        assert is_sb((), q)
        assert is_cb((), q)
        assert is_pb((), q)
        assert is_cpb((), q)


def test_predicates_examples():
    assert is_cb((-1, 1, -1, -1, 1, 1), 2)
    assert is_pb((4, 4, 0, -2, -2, -2, 2), 5)
    assert not is_cb((4, 4, 0, -2, -2, -2, 2), 5)
    assert is_cb((4, 4, -2, 0, -2, -2, -2), 5)
    assert not is_pb((4, 4, -2, 0, -2, -2, -2), 5)
    assert is_cpb((2, 2, 0, -4, -2, -2, 4), 5)
    assert is_sb((0, 2, 2, -2, 0, -2), 3)
    assert not is_sb((0, 0, 2, -2, 0, -2), 3)


def test_sb_needs_divisible_length():
    assert not is_sb((1, -1), 4)
    assert is_sb((1, -1), 2)


@st.composite
def word_and_q(draw):
    q = draw(st.integers(2, 8))
    n = draw(st.integers(0, 24))
    w = draw(st.lists(st.sampled_from(symbols(q)), min_size=n, max_size=n))
    return tuple(w), q


@given(word_and_q())
def test_sb_implies_all(wq):
    w, q = wq
    if is_sb(w, q):
        assert is_cpb(w, q)
    if is_cpb(w, q):
        assert is_cb(w, q) and is_pb(w, q)


@given(word_and_q())
def test_small_alphabets_cb_equals_pb(wq):
    w, q = wq
    if q <= 3:
        assert is_cb(w, q) == is_pb(w, q)


@given(word_and_q())
def test_negation_preserves_balance(wq):
    w, q = wq
    neg = tuple(-x for x in w)
    for pred in (is_sb, is_cb, is_pb, is_cpb):
        assert pred(w, q) == pred(neg, q)


def test_parse_word():
    assert parse_word("+4,+4,-2,0,0,0,0") == (4, 4, -2, 0, 0, 0, 0)
    assert parse_word(" -1 , +1 ") == (-1, 1)
    assert parse_word("") == ()
    with pytest.raises(WordParseError):
        parse_word("1,,2")
    with pytest.raises(WordParseError):
        parse_word("one")


def test_format_word():
    assert format_word((4, 4, -2, 0, 0, 0, 0)) == "+4,+4,-2,0,0,0,0"
    assert format_word(()) == ""


@given(word_and_q())
def test_wire_roundtrip(wq):
    w, q = wq
    if w:
        assert parse_word(format_word(w)) == w


def test_alphabet_class():
    a = Alphabet(5)
    assert a.symbols == (-4, -2, 0, 2, 4)
    assert a.positive == (2, 4)
    assert a.negative == (-4, -2)
    assert a.sub(2) == (-2, 0, 2, 4)
    assert 4 in a and 3 not in a
    assert len(a) == 5
