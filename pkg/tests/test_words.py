import pytest
from hypothesis import given, strategies as st

from geow.groups import Word, WordError, commutator, free_reduce, parse_relation, parse_word

letters = st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1])), max_size=30)


def naive_reduce(letters):
    stack = []
    for s, e in letters:
        if stack and stack[-1] == (s, -e):
            stack.pop()
        else:
            stack.append((s, e))
    return stack


@given(letters)
def test_reduction_matches_stack_reducer(ls):
    w = Word.from_letters(ls)
    assert w.letters() == naive_reduce(ls)


@given(letters)
def test_reduction_is_idempotent(ls):
    w = Word.from_letters(ls)
    assert Word.from_letters(w.letters()) == w
    assert free_reduce(free_reduce(w)) == free_reduce(w)


@given(letters, letters)
def test_inverse_cancels(x, y):
    w = Word.from_letters(x)
    assert not (w * w.inverse())
    v = Word.from_letters(y)
    assert (w * v).inverse() == v.inverse() * w.inverse()


def test_commutator_convention():
    a, b = parse_word("a"), parse_word("b")
    assert commutator(a, b) == parse_word("a b a^-1 b^-1")
    assert parse_word("[a, b]") == commutator(a, b)


def test_relation_and_params():
    assert parse_relation("a = b") == parse_word("a b^-1")
    assert parse_relation("[c^-1, b]^m = d", {"m": 2}) == parse_word("[c^-1, b] [c^-1, b] d^-1")
    assert parse_word("a^-3") == Word.letter("a", -3)
    assert str(parse_word("a a b^-1")) == "a^2 b^-1"


def test_exponent_sums_and_power():
    w = parse_word("[a, b] c^2")
    assert w.exponent_sums() == {"a": 0, "b": 0, "c": 2}
    assert parse_word("(a b)^2") == parse_word("a b a b")
    assert parse_word("(a b)^0") == Word()


@pytest.mark.parametrize("bad", ["a^", "[a, b", "a ^ x", "(a b"])
def test_malformed_words(bad):
    with pytest.raises(WordError):
        parse_word(bad)


def test_unbound_parameter():
    with pytest.raises(WordError):
        parse_word("a^m")
