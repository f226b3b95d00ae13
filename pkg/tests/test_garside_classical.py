import itertools
import random

import pytest
from _helpers import artin_words, random_word
from hypothesis import given

from garside_burau.burau import rho
from garside_burau.garside_classical import (
    NotSimpleError,
    all_simples,
    big_delta,
    left_weighted_c,
    meet_c,
    normal_form_c,
    simple_from_letters,
    tau_c,
)
from garside_burau.words import parse


def _is_prefix(s, t) -> bool:
    """Brute force: some simple ``x`` has ``s x = t`` as simple elements."""
    for x in all_simples(s.n):
        try:
            if simple_from_letters(s.n, s.artin_letters() + x.artin_letters()) == t:
                return True
        except NotSimpleError:
            pass
    return False


def test_simple_counts_and_delta():
    assert len(all_simples(4)) == 24
    assert big_delta(4).length == 6
    assert simple_from_letters(4, [1, 2, 1, 3, 2, 1]) == big_delta(4)


def test_double_crossing_is_rejected():
    with pytest.raises(NotSimpleError):
        simple_from_letters(3, [1, 1])


def test_meet_example():
    a = simple_from_letters(4, [1, 2])
    b = simple_from_letters(4, [1, 3])
    assert meet_c(a, b) == simple_from_letters(4, [1])


def test_meet_against_prefix_order_b3():
    simples = all_simples(3)
    for a, b in itertools.product(simples, repeat=2):
        common = [s for s in simples if _is_prefix(s, a) and _is_prefix(s, b)]
        assert meet_c(a, b) == max(common, key=lambda s: s.length)


def test_starting_and_finishing_sets():
    s = simple_from_letters(4, [2, 1, 3])
    assert s.starting_set() == {2}
    assert s.finishing_set() == {1, 3}
    assert left_weighted_c(s, simple_from_letters(4, [1, 3]))
    assert not left_weighted_c(s, simple_from_letters(4, [2]))


def test_tau_flips_indices():
    for i in range(1, 5):
        assert tau_c(simple_from_letters(5, [i])) == simple_from_letters(5, [5 - i])
    for s in all_simples(4):
        assert tau_c(tau_c(s)) == s


def test_negative_generator():
    nf = normal_form_c(parse("s1^-1", 3))
    assert nf.p == -1 and [str(s) for s in nf.factors] == ["s1 s2"]
    assert rho(nf.to_word()) == rho(parse("s1^-1", 3))


@given(artin_words(max_len=25))
def test_normal_form_preserves_matrix(w):
    nf = normal_form_c(w)
    assert rho(nf.to_word()) == rho(w)


@given(artin_words(max_len=25))
def test_normal_form_is_idempotent_and_weighted(w):
    nf = normal_form_c(w)
    assert normal_form_c(nf.to_word()) == nf
    assert all(not s.is_identity() and not s.is_delta() for s in nf.factors)
    assert all(left_weighted_c(a, b) for a, b in zip(nf.factors, nf.factors[1:]))


def test_equal_braids_share_normal_form():
    rng = random.Random(7)
    for _ in range(100):
        w = random_word(rng, 4, 12)
        # insert a relation s1 s2 s1 = s2 s1 s2 and a cancelling pair
        u = parse(f"{w} s1 s2 s1 s3 s3^-1", 4)
        v = parse(f"{w} s2 s1 s2", 4)
        assert normal_form_c(u) == normal_form_c(v)
