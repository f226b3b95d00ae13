import pytest
from _helpers import artin_words
from hypothesis import given

from garside_burau.burau import rho
from garside_burau.words import (
    BraidSyntaxError,
    IndexOutOfRangeError,
    band_to_artin,
    commutator,
    exponent_sum,
    from_artin,
    invert,
    parse,
)


def test_parse_mixed_tokens():
    w = parse("s1 s2^-1 a1,3 d^2 D^-1", 4)
    assert [str(t) for t in w] == ["s1", "s2^-1", "a1,3", "d^2", "D^-1"]
    assert str(parse(str(w), 4)) == str(w)


@pytest.mark.parametrize("text, err", [
    ("s4", IndexOutOfRangeError),
    ("s0", IndexOutOfRangeError),
    ("a2,2", IndexOutOfRangeError),
    ("s1 x3", BraidSyntaxError),
    ("s1^0", BraidSyntaxError),
])
def test_parse_rejects(text, err):
    with pytest.raises(err):
        parse(text, 4)


def test_syntax_error_reports_position():
    with pytest.raises(BraidSyntaxError) as info:
        parse("s1 s2 ?", 4)
    assert info.value.position == 6


def test_exponent_sum_weights():
    assert exponent_sum(parse("s1 s2^-3 a1,4", 4)) == -1
    assert exponent_sum(parse("d", 5)) == 4
    assert exponent_sum(parse("D^-1", 5)) == -10


@pytest.mark.parametrize("i, j, letters", [
    (1, 3, [-1, 2, 1]),
    (2, 4, [-2, 3, 2]),
    (1, 2, [1]),
])
def test_band_to_artin(i, j, letters):
    assert band_to_artin(i, j, 4) == from_artin(4, letters)


def test_band_indices_are_unordered():
    assert band_to_artin(3, 1, 4) == band_to_artin(1, 3, 4)


def test_commutator_convention():
    a, b = parse("s1", 3), parse("s2", 3)
    assert str(commutator(a, b)) == "s1^-1 s2^-1 s1 s2"


@given(artin_words())
def test_inverse_is_involution(w):
    assert invert(invert(w)) == w
    assert exponent_sum(invert(w)) == -exponent_sum(w)


@given(artin_words(max_len=12))
def test_word_times_inverse_is_trivial(w):
    assert rho(w * invert(w)).is_identity()
