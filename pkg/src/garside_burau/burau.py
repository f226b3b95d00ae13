"""The reduced Burau representation ``rho_n: B_n -> GL(n-1, Z[q, q^-1])``.

Braids act on the right and ``rho(xy) = rho(x) rho(y)``.  In the standard
fork basis ``rho(s_i)`` is the identity except in column ``i``, which holds
``q`` in row ``i-1``, ``-q`` in row ``i`` and ``1`` in row ``i+1`` (rows that
exist).  For ``n = 4``::

    rho(s1) = [[-q, 0, 0], [1, 1, 0], [0, 0, 1]]
    rho(s2) = [[1, q, 0], [0, -q, 0], [0, 1, 1]]
    rho(s3) = [[1, 0, 0], [0, 1, q], [0, 0, -q]]

``det rho(x) = (-q)^e(x)`` where ``e`` is the exponent sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .laurent import ONE, Q, BurauMatrix, LaurentPoly, _SAFE, _max_abs, _trim
from .words import ARTIN, BAND, BIG_DELTA, SMALL_DELTA, BraidWord, Token, token_artin_letters
from .words import big_delta_letters, small_delta_letters


@dataclass(frozen=True)
class RhoConvention:
    action: str = "right"
    multiplication: str = "rho(xy) = rho(x) rho(y)"
    basis: str = "standard forks F_1..F_{n-1}"


CONVENTION = RhoConvention()


def _check(n: int, i: int) -> None:
    if n < 2 or not 1 <= i <= n - 1:
        raise ValueError(f"s{i} is not a generator of B_{n}")


@lru_cache(maxsize=None)
def rho_sigma(n: int, i: int) -> BurauMatrix:
    _check(n, i)
    m = n - 1
    rows: list[list[LaurentPoly]] = [[ONE if r == c else LaurentPoly() for c in range(m)] for r in range(m)]
    c = i - 1
    rows[c][c] = -Q
    if c - 1 >= 0:
        rows[c - 1][c] = Q
    if c + 1 < m:
        rows[c + 1][c] = ONE
    return BurauMatrix.from_entries(n, rows)


@lru_cache(maxsize=None)
def rho_sigma_inv(n: int, i: int) -> BurauMatrix:
    _check(n, i)
    m = n - 1
    qinv = LaurentPoly(-1, (1,))
    rows: list[list[LaurentPoly]] = [[ONE if r == c else LaurentPoly() for c in range(m)] for r in range(m)]
    c = i - 1
    rows[c][c] = -qinv
    if c - 1 >= 0:
        rows[c - 1][c] = ONE
    if c + 1 < m:
        rows[c + 1][c] = qinv
    return BurauMatrix.from_entries(n, rows)


def _apply_letter(lo: int, cube: np.ndarray, letter: int) -> tuple[int, np.ndarray]:
    """Right multiply ``q^lo * cube`` by ``rho(s_|letter|)^sign``: only one column changes."""
    m, _, d = cube.shape
    if d == 0:
        return lo, cube
    if cube.dtype != object and _max_abs(cube) >= _SAFE // 4:
        cube = cube.astype(object)
    c = abs(letter) - 1
    # padded copy with one spare degree slot on each side; padded lowest exponent is lo - 1
    pad = np.zeros((m, m, d + 2), dtype=cube.dtype)
    pad[:, :, 1:d + 1] = cube
    col = pad[:, c, :]
    new = np.zeros_like(col)
    if letter > 0:
        # q*col_{c-1} - q*col_c + col_{c+1}
        new[:, 1:] -= col[:, :-1]
        if c - 1 >= 0:
            new[:, 1:] += pad[:, c - 1, :-1]
        if c + 1 < m:
            new += pad[:, c + 1, :]
    else:
        # col_{c-1} - q^-1 col_c + q^-1 col_{c+1}
        new[:, :-1] -= col[:, 1:]
        if c - 1 >= 0:
            new += pad[:, c - 1, :]
        if c + 1 < m:
            new[:, :-1] += pad[:, c + 1, 1:]
    pad[:, c, :] = new
    return _trim(lo - 1, pad)


def apply_artin(mat: BurauMatrix, letters: Iterable[int]) -> BurauMatrix:
    """``mat * rho(s_{l1}^{+-1} s_{l2}^{+-1} ...)`` for signed Artin indices."""
    lo, cube = mat.lo, mat.coeffs
    n = mat.n
    for letter in letters:
        _check(n, abs(letter))
        lo, cube = _apply_letter(lo, cube, letter)
    return BurauMatrix(n, lo, cube)


def rho_artin(n: int, letters: Iterable[int]) -> BurauMatrix:
    return apply_artin(BurauMatrix.identity(n), letters)


@lru_cache(maxsize=None)
def rho_small_delta(n: int) -> BurauMatrix:
    return rho_artin(n, small_delta_letters(n))


@lru_cache(maxsize=None)
def rho_small_delta_inv(n: int) -> BurauMatrix:
    return rho_artin(n, [-i for i in reversed(small_delta_letters(n))])


@lru_cache(maxsize=None)
def rho_big_delta(n: int) -> BurauMatrix:
    return rho_artin(n, big_delta_letters(n))


@lru_cache(maxsize=None)
def rho_big_delta_inv(n: int) -> BurauMatrix:
    return rho_artin(n, [-i for i in reversed(big_delta_letters(n))])


def _matrix_power(base: BurauMatrix, k: int) -> BurauMatrix:
    result = BurauMatrix.identity(base.n)
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


@lru_cache(maxsize=256)
def rho_delta_power(n: int, p: int) -> BurauMatrix:
    """``rho(delta^p)`` by binary exponentiation."""
    base = rho_small_delta(n) if p >= 0 else rho_small_delta_inv(n)
    return _matrix_power(base, abs(p))


@lru_cache(maxsize=256)
def rho_big_delta_power(n: int, p: int) -> BurauMatrix:
    base = rho_big_delta(n) if p >= 0 else rho_big_delta_inv(n)
    return _matrix_power(base, abs(p))


def rho_token(tok: Token, n: int) -> BurauMatrix:
    if tok.kind == SMALL_DELTA:
        return rho_delta_power(n, tok.power)
    if tok.kind == BIG_DELTA:
        return rho_big_delta_power(n, tok.power)
    return rho_artin(n, token_artin_letters(tok, n))


def rho(w: BraidWord) -> BurauMatrix:
    n = w.n
    out = BurauMatrix.identity(n)
    for tok in w.letters:
        if tok.kind in (ARTIN, BAND):
            out = apply_artin(out, token_artin_letters(tok, n))
        else:
            out = out @ rho_token(tok, n)
    return out


def is_identity(mat: BurauMatrix) -> bool:
    return mat.is_identity()


def is_homothety(mat: BurauMatrix) -> LaurentPoly | None:
    return mat.homothety_ratio()


def expected_det(n: int, e: int) -> LaurentPoly:
    """``(-q)^e``; the determinant of any braid with exponent sum ``e``."""
    return LaurentPoly(e, ((-1) ** (e % 2),))
