"""Classical Garside structure of ``B_n``: positive permutation braids and ``Delta``.

A simple element is stored as the permutation it induces on strand positions:
``image[i-1]`` is where the strand starting at position ``i`` ends.  Reading
``s1 s2`` in ``B_3`` gives the image ``(3, 1, 2)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import _perm
from ._garside import GarsideStructure
from .words import BIG_DELTA, SMALL_DELTA, BraidWord, Token, from_artin, token_artin_letters


class NotSimpleError(ValueError):
    def __init__(self, strands: tuple[int, int]):
        super().__init__(f"strands {strands[0]} and {strands[1]} cross twice")
        self.strands = strands


@dataclass(frozen=True)
class PermSimple:
    image: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.image)

    @property
    def length(self) -> int:
        """Number of crossings, i.e. Artin letters of any positive word for it."""
        return _perm.inversions(self.image)

    def is_identity(self) -> bool:
        return self.image == _perm.identity(self.n)

    def is_delta(self) -> bool:
        return self.image == tuple(range(self.n, 0, -1))

    def starting_set(self) -> frozenset[int]:
        a = self.image
        return frozenset(i for i in range(1, self.n) if a[i - 1] > a[i])

    def finishing_set(self) -> frozenset[int]:
        inv = _perm.inverse(self.image)
        return frozenset(i for i in range(1, self.n) if inv[i - 1] > inv[i])

    def artin_letters(self) -> list[int]:
        letters = []
        a = self.image
        n = self.n
        while True:
            descents = [i for i in range(1, n) if a[i - 1] > a[i]]
            if not descents:
                return letters
            i = descents[0]
            letters.append(i)
            a = _perm.compose(_perm.transposition(n, i, i + 1), a)

    def to_word(self) -> BraidWord:
        return from_artin(self.n, self.artin_letters())

    def __str__(self) -> str:
        return " ".join(f"s{i}" for i in self.artin_letters()) or "1"


def identity(n: int) -> PermSimple:
    return PermSimple(_perm.identity(n))


def big_delta(n: int) -> PermSimple:
    if n < 2:
        raise ValueError("need at least two strands")
    return PermSimple(tuple(range(n, 0, -1)))


def artin_simple(n: int, i: int) -> PermSimple:
    return PermSimple(_perm.transposition(n, i, i + 1))


def simple_from_letters(n: int, letters: Iterable[int]) -> PermSimple:
    """Simple element of a positive Artin word; raises :class:`NotSimpleError` on a double crossing."""
    at = list(range(1, n + 1))  # at[pos-1] = strand currently at pos
    crossed = set()
    for i in letters:
        if not 1 <= i <= n - 1:
            raise ValueError(f"s{i} is not a positive generator of B_{n}")
        a, b = at[i - 1], at[i]
        pair = (min(a, b), max(a, b))
        if pair in crossed:
            raise NotSimpleError(pair)
        crossed.add(pair)
        at[i - 1], at[i] = b, a
    image = [0] * n
    for pos, strand in enumerate(at, 1):
        image[strand - 1] = pos
    return PermSimple(tuple(image))


def simple_from_word(w: BraidWord) -> PermSimple:
    letters = w.artin_letters()
    if any(i < 0 for i in letters):
        raise ValueError(f"{w} is not a positive word")
    return simple_from_letters(w.n, letters)


def simple_to_word(s: PermSimple) -> BraidWord:
    return s.to_word()


def starting_set(s: PermSimple) -> frozenset[int]:
    return s.starting_set()


def finishing_set(s: PermSimple) -> frozenset[int]:
    return s.finishing_set()


def left_weighted_c(s: PermSimple, t: PermSimple) -> bool:
    return t.starting_set() <= s.finishing_set()


def tau_c(s: PermSimple) -> PermSimple:
    """``Delta^-1 s Delta``; sends ``s_i`` to ``s_{n-i}``."""
    n = s.n
    return PermSimple(tuple(n + 1 - s.image[n - i] for i in range(1, n + 1)))


def meet_c(s: PermSimple, t: PermSimple) -> PermSimple:
    """Greatest common left divisor, peeling common starting generators."""
    n = s.n
    a, b = s.image, t.image
    out = _perm.identity(n)
    while True:
        common = [i for i in range(1, n) if a[i - 1] > a[i] and b[i - 1] > b[i]]
        if not common:
            return PermSimple(out)
        g = _perm.transposition(n, common[0], common[0] + 1)
        out = _perm.compose(out, g)
        a = _perm.compose(g, a)
        b = _perm.compose(g, b)


@lru_cache(maxsize=None)
def all_simples(n: int) -> tuple[PermSimple, ...]:
    return tuple(PermSimple(p) for p in itertools.permutations(range(1, n + 1)))


class ClassicalStructure(GarsideStructure[PermSimple]):
    def __init__(self, n: int):
        self.n = n
        self._id = identity(n)
        self._delta = big_delta(n)
        self._small_delta = simple_from_letters(n, range(n - 1, 0, -1))

    def identity(self) -> PermSimple:
        return self._id

    def garside(self) -> PermSimple:
        return self._delta

    def meet(self, a: PermSimple, b: PermSimple) -> PermSimple:
        return meet_c(a, b)

    def mul(self, a: PermSimple, b: PermSimple) -> PermSimple:
        return PermSimple(_perm.compose(a.image, b.image))

    def left_div(self, a: PermSimple, b: PermSimple) -> PermSimple:
        return PermSimple(_perm.compose(_perm.inverse(a.image), b.image))

    def left_complement(self, a: PermSimple) -> PermSimple:
        return self.left_div(a, self._delta)

    def right_complement(self, a: PermSimple) -> PermSimple:
        return PermSimple(_perm.compose(self._delta.image, _perm.inverse(a.image)))

    def tau(self, a: PermSimple, k: int = 1) -> PermSimple:
        return tau_c(a) if k % 2 else a

    def expand(self, w: BraidWord):
        for tok in w.letters:
            if tok.kind == BIG_DELTA:
                yield "garside", tok.power
            elif tok.kind == SMALL_DELTA:
                kind = "simple" if tok.power > 0 else "inverse"
                for _ in range(abs(tok.power)):
                    yield kind, self._small_delta
            else:
                for i in token_artin_letters(tok, self.n):
                    yield ("simple" if i > 0 else "inverse"), artin_simple(self.n, abs(i))


@lru_cache(maxsize=None)
def structure(n: int) -> ClassicalStructure:
    return ClassicalStructure(n)


@dataclass(frozen=True)
class ClassicalNF:
    """``Delta^p s_1 ... s_r``."""

    n: int
    p: int
    factors: tuple[PermSimple, ...]

    @property
    def sup(self) -> int:
        return self.p + len(self.factors)

    @property
    def inf(self) -> int:
        return self.p

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def garside_length(self) -> int:
        return max(self.sup, 0) - min(self.inf, 0)

    def is_trivial(self) -> bool:
        return self.p == 0 and not self.factors

    def to_word(self) -> BraidWord:
        letters = [Token.big_delta(self.p)] if self.p else []
        for s in self.factors:
            letters.extend(Token.artin(i) for i in s.artin_letters())
        return BraidWord(self.n, tuple(letters))

    def to_json(self) -> dict:
        return {"kind": "classical", "n": self.n, "p": self.p,
                "factors": [str(s) for s in self.factors],
                "sup": self.sup, "inf": self.inf, "len": self.canonical_length}


def normal_form_c(w: BraidWord) -> ClassicalNF:
    st = structure(w.n)
    p, factors = st.normal_form_steps(st.expand(w))
    return ClassicalNF(w.n, p, tuple(factors))


def sup_c(w: BraidWord) -> int:
    return normal_form_c(w).sup


def inf_c(w: BraidWord) -> int:
    return normal_form_c(w).inf


def len_c(w: BraidWord) -> int:
    return normal_form_c(w).canonical_length


def garside_len_c(w: BraidWord) -> int:
    return normal_form_c(w).garside_length


def random_normal_form_c(n: int, r: int, rng, p: int = 0, avoid: Iterable[PermSimple] = ()) -> ClassicalNF:
    """Random left-weighted chain of ``r`` proper simples, skipping those in ``avoid``."""
    banned = set(avoid)
    proper = [s for s in all_simples(n) if not s.is_identity() and not s.is_delta() and s not in banned]
    factors: list[PermSimple] = []
    for _ in range(r):
        pool = proper if not factors else [s for s in proper if left_weighted_c(factors[-1], s)]
        factors.append(rng.choice(pool))
    return ClassicalNF(n, p, tuple(factors))
