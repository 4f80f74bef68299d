import pytest
from hypothesis import given

from quatrep.errors import ArgumentError, EmptyWordError, WordSyntaxError
from quatrep.presentation import (
    Balanced, Presentation, Relator, Word, parse_presentation, parse_word, two_bridge,
    word_concat, word_inverse,
)

from conftest import words


def W(s):
    return Word(tuple(s))


@pytest.mark.parametrize("text, letters", [
    ("aba", "aba"),
    ("a a^-1 b", "b"),
    ("ba^-1b^-1a", "bABa"),
    ("bABa", "bABa"),
    ("a^3 b^-2", "aaaBB"),
    ("a^{-1}", "A"),
    ("1", ""),
    ("  ", ""),
])
def test_parse_word(text, letters):
    assert parse_word(text) == W(letters)


@pytest.mark.parametrize("bad", ["c", "a^", "a^x", "ab^{-1", "a*b", "a^-"])
def test_parse_word_rejects(bad):
    with pytest.raises(WordSyntaxError):
        parse_word(bad)


def test_syntax_error_is_a_syntax_error():
    with pytest.raises(SyntaxError):
        parse_word("q")


def test_printing_uses_caret_syntax():
    assert str(W("bABa")) == "ba^-1b^-1a"
    assert str(Word()) == "1"


@given(words)
def test_print_parse_roundtrip(w):
    assert parse_word(str(w)) == w


@given(words)
def test_words_are_freely_reduced(w):
    inv = {"a": "A", "A": "a", "b": "B", "B": "b"}
    assert all(inv[x] != y for x, y in zip(w.letters, w.letters[1:]))


@given(words, words)
def test_inverse_and_concat(u, v):
    assert word_concat(u, word_inverse(u)) == Word()
    assert word_inverse(word_concat(u, v)) == word_concat(word_inverse(v), word_inverse(u))


def test_inverse_and_concat_examples():
    assert word_inverse(W("ab")) == W("BA")
    assert word_concat(W("a"), W("A")) == Word()
    assert word_concat(W("ab"), W("Ba")) == W("aa")


def test_parse_presentation_forms():
    p = parse_presentation("aba=bab")
    assert p.is_balanced and p.lhs == W("aba") and p.rhs == W("bab")
    r = parse_presentation("abA B")
    assert not r.is_balanced and r.lhs == W("abAB")
    f = parse_presentation("aba^-1b^-1a = ba^-1b^-1ab")
    assert f.sides() == (W("abABa"), W("bABab"))


def test_parse_presentation_errors():
    with pytest.raises(EmptyWordError):
        parse_presentation("")
    with pytest.raises(EmptyWordError):
        parse_presentation(" = ")
    with pytest.raises(WordSyntaxError):
        parse_presentation("a=b=a")
    # explicit identity is allowed
    assert parse_presentation("1").lhs == Word()


def test_balanced_and_relator_denote_same_relator():
    p = Balanced("aba", "bab")
    assert p.relator == W("abaBAB")
    assert Relator(p.relator).relator == p.relator


def test_json_roundtrip():
    for p in (Balanced("aba", "bab", label="trefoil"), Relator("abAB")):
        assert Presentation.from_json(p.to_json()) == p


def test_two_bridge_trefoil():
    p = two_bridge(3, 1)
    assert (p.lhs, p.rhs) == (W("aba"), W("bab"))


def test_two_bridge_figure_eight():
    p = two_bridge(5, 3)
    v = W("bABa")
    assert p.lhs == word_concat(W("a"), v) and p.rhs == word_concat(v, W("b"))


@pytest.mark.parametrize("p", [3, 5, 7, 9, 11, 13, 15])
def test_two_bridge_relator_length(p):
    from math import gcd
    for q in range(1, p):
        if gcd(p, q) == 1:
            assert len(two_bridge(p, q).relator) == 2 * p


@pytest.mark.parametrize("p, q", [(1, 1), (4, 1), (6, 5), (9, 3), (5, 0), (5, 5), (5, 7)])
def test_two_bridge_rejects(p, q):
    with pytest.raises(ArgumentError):
        two_bridge(p, q)
