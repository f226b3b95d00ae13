import random

import pytest
from _helpers import artin_words, mat, random_word
from hypothesis import given

from garside_burau.burau import expected_det, rho, rho_sigma, rho_sigma_inv
from garside_burau.laurent import BurauMatrix, mat_det
from garside_burau.words import concat, exponent_sum, invert, parse


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_braid_relations(n):
    for i in range(1, n):
        assert rho_sigma(n, i) @ rho_sigma_inv(n, i) == BurauMatrix.identity(n)
    for i in range(1, n - 1):
        a, b = rho_sigma(n, i), rho_sigma(n, i + 1)
        assert a @ b @ a == b @ a @ b
    for i in range(1, n):
        for j in range(i + 2, n):
            assert rho_sigma(n, i) @ rho_sigma(n, j) == rho_sigma(n, j) @ rho_sigma(n, i)


def test_b3_generators():
    assert rho_sigma(3, 1) == mat(3, [["-q", "0"], ["1", "1"]])
    assert rho_sigma(3, 2) == mat(3, [["1", "q"], ["0", "-q"]])


@given(artin_words(max_len=12), artin_words(max_len=12))
def test_homomorphism(a, b):
    if a.n == b.n:
        assert rho(concat(a, b)) == rho(a) @ rho(b)


@given(artin_words(max_len=15))
def test_inverse_word_gives_inverse_matrix(w):
    assert rho(w) @ rho(invert(w)) == BurauMatrix.identity(w.n)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_full_twist_squared_is_scalar(n):
    sq = rho(parse("D^2", n))
    assert sq.homothety_ratio() is not None
    assert sq.homothety_ratio().max_deg == n


@pytest.mark.parametrize("n", [3, 4, 5])
def test_band_and_delta_tokens_match_artin_words(n):
    assert rho(parse("d", n)) == rho(parse(" ".join(f"s{i}" for i in range(n - 1, 0, -1)), n))
    assert rho(parse(f"a1,{n}", n)) == rho(parse(
        " ".join([f"s{i}^-1" for i in range(1, n - 1)] + [f"s{n - 1}"]
                 + [f"s{i}" for i in range(n - 2, 0, -1)]), n))


def test_det_is_signed_monomial():
    rng = random.Random(4)
    for n in (3, 4, 5, 6):
        for _ in range(50):
            w = random_word(rng, n, 15)
            assert mat_det(rho(w)) == expected_det(n, exponent_sum(w))
