"""Braid words over Artin generators, band generators and the two Garside elements.

A word is a sequence of tokens; each token carries a symbolic power which is
only expanded by consumers.  Text syntax (whitespace separated tokens)::

    s2        Artin generator sigma_2
    s1^-3     sigma_1 to the power -3
    a1,3      band generator a_{1,3} (a3,1 is the same letter)
    D  d      the half twist Delta and the rotation delta

Conventions: ``a_{i,j} = (s_{j-2}...s_i)^-1 s_{j-1} (s_{j-2}...s_i)`` for
``i < j``, ``delta = s_{n-1}...s_1`` and
``Delta = (s_1...s_{n-1})(s_1...s_{n-2})...(s_1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

ARTIN = "artin"
BAND = "band"
BIG_DELTA = "D"
SMALL_DELTA = "d"

_TOKEN_RE = re.compile(r"(?:s(\d+)|a(\d+),(\d+)|(D)|(d))(?:\^([+-]?\d+))?\Z")


class BraidWordError(ValueError):
    """Base class for malformed braid input."""


class BraidSyntaxError(BraidWordError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexOutOfRangeError(BraidWordError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str
    indices: tuple[int, ...] = ()
    power: int = 1

    @classmethod
    def artin(cls, i: int, power: int = 1) -> Token:
        return cls(ARTIN, (i,), power)

    @classmethod
    def band(cls, i: int, j: int, power: int = 1) -> Token:
        if i == j:
            raise IndexOutOfRangeError(f"band generator needs distinct punctures, got a{i},{j}")
        return cls(BAND, (min(i, j), max(i, j)), power)

    @classmethod
    def big_delta(cls, power: int = 1) -> Token:
        return cls(BIG_DELTA, (), power)

    @classmethod
    def small_delta(cls, power: int = 1) -> Token:
        return cls(SMALL_DELTA, (), power)

    def with_power(self, power: int) -> Token:
        return Token(self.kind, self.indices, power)

    def check(self, n: int) -> None:
        if self.power == 0:
            raise BraidWordError("zero power")
        if self.kind == ARTIN:
            (i,) = self.indices
            if not 1 <= i <= n - 1:
                raise IndexOutOfRangeError(f"s{i} is not a generator of B_{n}")
        elif self.kind == BAND:
            i, j = self.indices
            if not (1 <= i < j <= n):
                raise IndexOutOfRangeError(f"a{i},{j} is not a generator of B_{n}")
        elif self.kind not in (BIG_DELTA, SMALL_DELTA):
            raise BraidWordError(f"unknown token kind {self.kind!r}")

    def render(self) -> str:
        if self.kind == ARTIN:
            base = f"s{self.indices[0]}"
        elif self.kind == BAND:
            base = "a{},{}".format(*self.indices)
        else:
            base = self.kind
        return base if self.power == 1 else f"{base}^{self.power}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class BraidWord:
    """A word in ``B_n``; the empty word is the identity braid."""

    n: int
    letters: tuple[Token, ...] = ()

    def __post_init__(self):
        if self.n < 2:
            raise BraidWordError(f"strand count must be at least 2, got {self.n}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for tok in self.letters:
            tok.check(self.n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        return " ".join(tok.render() for tok in self.letters)

    def inverse(self) -> BraidWord:
        return invert(self)

    def artin_letters(self) -> list[int]:
        """Fully expanded Artin word as signed indices (``-i`` for ``s_i^-1``)."""
        return artin_letters(self)


def parse(text: str, n: int) -> BraidWord:
    letters = []
    for m in re.finditer(r"\S+", text):
        tm = _TOKEN_RE.match(m.group())
        if tm is None:
            raise BraidSyntaxError(f"cannot parse token {m.group()!r}", m.start())
        s, bi, bj, big, small, power = tm.groups()
        power = int(power) if power is not None else 1
        if power == 0:
            raise BraidSyntaxError("power must be nonzero", m.start())
        if s is not None:
            tok = Token.artin(int(s), power)
        elif bi is not None:
            if int(bi) == int(bj):
                raise IndexOutOfRangeError(f"a{bi},{bj} at position {m.start()} joins a puncture to itself", m.start())
            tok = Token.band(int(bi), int(bj), power)
        elif big is not None:
            tok = Token.big_delta(power)
        else:
            tok = Token.small_delta(power)
        try:
            tok.check(n)
        except IndexOutOfRangeError as exc:
            raise IndexOutOfRangeError(f"{exc} (position {m.start()})", m.start()) from None
        letters.append(tok)
    return BraidWord(n, tuple(letters))


def word(n: int, letters: Iterable[Token]) -> BraidWord:
    return BraidWord(n, tuple(letters))


def from_artin(n: int, letters: Iterable[int]) -> BraidWord:
    """Build a word from signed Artin indices, e.g. ``[1, -2]`` for ``s1 s2^-1``."""
    return BraidWord(n, tuple(Token.artin(abs(i), 1 if i > 0 else -1) for i in letters))


def concat(*words: BraidWord) -> BraidWord:
    ns = {w.n for w in words}
    if len(ns) != 1:
        raise BraidWordError(f"cannot concatenate words on different strand counts {sorted(ns)}")
    return BraidWord(ns.pop(), tuple(tok for w in words for tok in w.letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, tuple(tok.with_power(-tok.power) for tok in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    if k >= 0:
        return BraidWord(w.n, w.letters * k)
    return BraidWord(w.n, invert(w).letters * -k)


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """``[a, b] = a^-1 b^-1 a b``."""
    return concat(invert(a), invert(b), a, b)


def atom_weight(tok: Token, n: int) -> int:
    if tok.kind in (ARTIN, BAND):
        return 1
    if tok.kind == SMALL_DELTA:
        return n - 1
    return n * (n - 1) // 2


def exponent_sum(w: BraidWord) -> int:
    return sum(tok.power * atom_weight(tok, w.n) for tok in w.letters)


def band_to_artin(i: int, j: int, n: int) -> BraidWord:
    if i > j:
        i, j = j, i
    if not (1 <= i < j <= n):
        raise IndexOutOfRangeError(f"a{i},{j} is not a generator of B_{n}")
    return from_artin(n, _band_letters(i, j, 1))


def _band_letters(i: int, j: int, k: int) -> list[int]:
    # conj^-1 s_{j-1}^k conj, with conj = s_{j-2} ... s_i
    conj = list(range(j - 2, i - 1, -1))
    mid = [j - 1 if k > 0 else 1 - j] * abs(k)
    return [-c for c in reversed(conj)] + mid + conj


def small_delta_letters(n: int) -> list[int]:
    return list(range(n - 1, 0, -1))


def big_delta_letters(n: int) -> list[int]:
    return [i for top in range(n - 1, 0, -1) for i in range(1, top + 1)]


def _inverse_letters(letters: list[int]) -> list[int]:
    return [-i for i in reversed(letters)]


def token_artin_letters(tok: Token, n: int) -> list[int]:
    if tok.kind == ARTIN:
        i = tok.indices[0]
        return [i if tok.power > 0 else -i] * abs(tok.power)
    if tok.kind == BAND:
        return _band_letters(*tok.indices, tok.power)
    base = small_delta_letters(n) if tok.kind == SMALL_DELTA else big_delta_letters(n)
    if tok.power < 0:
        base = _inverse_letters(base)
    return base * abs(tok.power)


def artin_letters(w: BraidWord) -> list[int]:
    out: list[int] = []
    for tok in w.letters:
        out.extend(token_artin_letters(tok, w.n))
    return out
