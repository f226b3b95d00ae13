"""Dual (Birman-Ko-Lee) Garside structure of ``B_n``.

Punctures ``1..n`` sit clockwise on a circle.  A dual simple element is a
non-crossing partition of the punctures; a block ``b_1 < ... < b_r`` is the
polygon acting as the cycle ``b_1 -> b_2 -> ... -> b_r -> b_1`` on punctures
and as a braid equals ``a_{b_{r-1},b_r} ... a_{b_2,b_3} a_{b_1,b_2}``.  The
whole circle is ``delta = s_{n-1} ... s_1``.

``(a, b)`` denotes the closed clockwise arc ``{a, a+1, ..., b}`` (mod ``n``).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from . import _perm
from ._garside import GarsideStructure
from .words import ARTIN, BAND, SMALL_DELTA, BraidWord, Token, token_artin_letters


class NotDualSimpleError(ValueError):
    pass


def _crossing(b1: Sequence[int], b2: Sequence[int]) -> bool:
    s2 = set(b2)
    for a, c in itertools.combinations(sorted(b1), 2):
        inside = any(a < x < c for x in s2)
        outside = any(x < a or x > c for x in s2)
        if inside and outside:
            return True
    return False


@dataclass(frozen=True)
class DualSimple:
    """A dual simple element, keyed by the permutation it induces on punctures."""

    perm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c) for c in _perm.cycles(self.perm))

    @cached_property
    def polygons(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    @property
    def length(self) -> int:
        """Number of band generators in any positive word for it."""
        return self.n - len(self.blocks)

    def is_identity(self) -> bool:
        return not self.polygons

    def is_delta(self) -> bool:
        return len(self.blocks) == 1

    @cached_property
    def _block_of(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def divides(self, other: DualSimple) -> bool:
        """``self`` left (equivalently right) divides ``other`` among simples: block refinement."""
        where = other._block_of
        return all(len({where[x] for x in b}) == 1 for b in self.polygons)

    def atoms(self) -> list[tuple[int, int]]:
        out = []
        for poly in self.polygons:
            out.extend((poly[k], poly[k + 1]) for k in range(len(poly) - 2, -1, -1))
        return out

    def atom_strings(self) -> list[str]:
        return [f"a{i},{j}" for i, j in self.atoms()]

    def to_word(self) -> BraidWord:
        return BraidWord(self.n, tuple(Token.band(i, j) for i, j in self.atoms()))

    def __str__(self) -> str:
        return "".join(f"({' '.join(map(str, p))})" for p in self.polygons) or "1"


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> DualSimple:
    img = list(range(1, n + 1))
    seen: set[int] = set()
    polys = []
    for b in blocks:
        b = sorted(set(b))
        if seen & set(b) or any(not 1 <= x <= n for x in b):
            raise NotDualSimpleError(f"blocks {blocks!r} do not form a partition of 1..{n}")
        seen |= set(b)
        if len(b) > 1:
            polys.append(b)
            for k, x in enumerate(b):
                img[x - 1] = b[(k + 1) % len(b)]
    for p1, p2 in itertools.combinations(polys, 2):
        if _crossing(p1, p2):
            raise NotDualSimpleError(f"polygons {p1} and {p2} cross")
    return DualSimple(tuple(img))


def from_perm(perm: Sequence[int]) -> DualSimple:
    """Inverse of the polygon embedding; rejects permutations that are not dual simple."""
    perm = tuple(perm)
    cyc = _perm.cycles(perm)
    for c in cyc:
        if c != sorted(c):
            raise NotDualSimpleError(f"cycle {c} does not run clockwise")
    return from_blocks(len(perm), cyc)


def identity_d(n: int) -> DualSimple:
    return DualSimple(_perm.identity(n))


def small_delta(n: int) -> DualSimple:
    if n < 2:
        raise ValueError("need at least two strands")
    return DualSimple(tuple(list(range(2, n + 1)) + [1]))


def atom(n: int, i: int, j: int) -> DualSimple:
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"a{i},{j} is not a band generator of B_{n}")
    return DualSimple(_perm.transposition(n, i, j))


def simple_from_atoms(n: int, atoms: Iterable[tuple[int, int]]) -> DualSimple:
    """Product of band generators, which must be a dual simple element."""
    perm = _perm.identity(n)
    count = 0
    for i, j in atoms:
        perm = _perm.compose(perm, atom(n, i, j).perm)
        count += 1
    d = from_perm(perm)
    if d.length != count:
        raise NotDualSimpleError(f"product of {count} atoms has only length {d.length}")
    return d


def simple_from_word(w: BraidWord) -> DualSimple:
    atoms = []
    for tok in w.letters:
        if tok.power < 0 or tok.kind not in (ARTIN, BAND):
            raise NotDualSimpleError(f"{tok} is not a positive band letter")
        pair = (tok.indices[0], tok.indices[0] + 1) if tok.kind == ARTIN else tok.indices
        atoms.extend([pair] * tok.power)
    return simple_from_atoms(w.n, atoms)


def polygons(d: DualSimple) -> list[tuple[int, ...]]:
    return list(d.polygons)


def _in_arc(n: int, a: int, b: int, x: int) -> bool:
    return (x - a) % n <= (b - a) % n


def obstructs(n: int, kl: tuple[int, int], ij: tuple[int, int], ordered: bool = False) -> bool:
    """``a_{k,l} |- a_{i,j}``: some ordering has ``k in (j, i-1)`` and ``l in (i, j-1)``.

    With ``ordered=True`` only the pairs as given are tried; the relation is
    then not symmetric.
    """
    kls = (kl,) if ordered else (kl, kl[::-1])
    ijs = (ij,) if ordered else (ij, ij[::-1])
    for k, l in kls:
        for i, j in ijs:
            if _in_arc(n, j, i - 1, k) and _in_arc(n, i, j - 1, l):
                return True
    return False


def _obstructs_polygon(n: int, p: Sequence[int], q: Sequence[int]) -> bool:
    """Every vertex pair of ``q`` is obstructed by some vertex pair of ``p``."""
    pairs = list(itertools.combinations(p, 2))
    return all(any(obstructs(n, kl, ij) for kl in pairs)
               for ij in itertools.combinations(q, 2))


@lru_cache(maxsize=None)
def left_weighted_d(d: DualSimple, e: DualSimple) -> bool:
    """Polygon criterion for ``(d, e)`` to be left-weighted."""
    n = d.n
    pairs = [kl for p in d.polygons for kl in itertools.combinations(p, 2)]
    return all(any(obstructs(n, kl, ij) for kl in pairs)
               for q in e.polygons for ij in itertools.combinations(q, 2))


@lru_cache(maxsize=None)
def simply_nested_pair(d: DualSimple, e: DualSimple) -> bool:
    """Each polygon of ``e`` is obstructed, pair by pair, by exactly one polygon of ``d``."""
    n = d.n
    for q in e.polygons:
        owners = sum(1 for p in d.polygons if _obstructs_polygon(n, p, q))
        if owners != 1:
            return False
    return True


def meet_d(d: DualSimple, e: DualSimple) -> DualSimple:
    where = e._block_of
    blocks = []
    for b in d.blocks:
        groups: dict[int, list[int]] = {}
        for x in b:
            groups.setdefault(where[x], []).append(x)
        blocks.extend(groups.values())
    return from_blocks(d.n, blocks)


def join_d(d: DualSimple, e: DualSimple) -> DualSimple:
    n = d.n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in d.blocks + e.blocks:
        for x in b[1:]:
            parent[find(x)] = find(b[0])
    while True:
        groups: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            groups.setdefault(find(x), []).append(x)
        blocks = [b for b in groups.values() if len(b) > 1]
        clash = next(((b1, b2) for b1, b2 in itertools.combinations(blocks, 2) if _crossing(b1, b2)), None)
        if clash is None:
            return from_blocks(n, groups.values())
        parent[find(clash[1][0])] = find(clash[0][0])


def complement_d(s: DualSimple, d: DualSimple) -> DualSimple:
    """``s^-1 d`` for ``s`` dividing ``d``."""
    if not s.divides(d):
        raise NotDualSimpleError(f"{s} does not divide {d}")
    return from_perm(_perm.compose(_perm.inverse(s.perm), d.perm))


def tau_d(d: DualSimple, k: int = 1) -> DualSimple:
    """``delta^-k d delta^k``: rotate every block ``k`` notches clockwise."""
    n = d.n
    k %= n
    if not k:
        return d
    img = [0] * n
    for i, x in enumerate(d.perm, 1):
        img[(i + k - 1) % n] = (x + k - 1) % n + 1
    return DualSimple(tuple(img))


def _noncrossing_partitions(elems: tuple[int, ...]):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for size in range(len(rest) + 1):
        for others in itertools.combinations(range(len(rest)), size):
            block = [first] + [rest[k] for k in others]
            # elements strictly between consecutive block members, and after the last one
            cuts = list(others) + [len(rest)]
            segments = []
            prev = -1
            for c in cuts:
                segments.append(rest[prev + 1:c])
                prev = c
            for parts in itertools.product(*(list(_noncrossing_partitions(seg)) for seg in segments)):
                yield [block] + [b for part in parts for b in part]


@lru_cache(maxsize=None)
def enumerate_dual_simples(n: int) -> tuple[DualSimple, ...]:
    if n > 8:
        raise ValueError("enumeration is limited to n <= 8")
    out = [from_blocks(n, blocks) for blocks in _noncrossing_partitions(tuple(range(1, n + 1)))]
    return tuple(sorted(out, key=lambda d: (d.length, d.blocks)))


@lru_cache(maxsize=None)
def proper_simples(n: int) -> tuple[DualSimple, ...]:
    return tuple(d for d in enumerate_dual_simples(n) if not d.is_identity() and not d.is_delta())


class DualStructure(GarsideStructure[DualSimple]):
    def __init__(self, n: int):
        self.n = n
        self._id = identity_d(n)
        self._delta = small_delta(n)

    def identity(self) -> DualSimple:
        return self._id

    def garside(self) -> DualSimple:
        return self._delta

    def meet(self, a: DualSimple, b: DualSimple) -> DualSimple:
        return meet_d(a, b)

    def mul(self, a: DualSimple, b: DualSimple) -> DualSimple:
        return from_perm(_perm.compose(a.perm, b.perm))

    def left_div(self, a: DualSimple, b: DualSimple) -> DualSimple:
        return from_perm(_perm.compose(_perm.inverse(a.perm), b.perm))

    @lru_cache(maxsize=None)
    def left_complement(self, a: DualSimple) -> DualSimple:
        return self.left_div(a, self._delta)

    @lru_cache(maxsize=None)
    def right_complement(self, a: DualSimple) -> DualSimple:
        return from_perm(_perm.compose(self._delta.perm, _perm.inverse(a.perm)))

    def tau(self, a: DualSimple, k: int = 1) -> DualSimple:
        return tau_d(a, k)

    def expand(self, w: BraidWord):
        n = self.n
        for tok in w.letters:
            if tok.kind == SMALL_DELTA:
                yield "garside", tok.power
            elif tok.kind == BAND:
                kind = "simple" if tok.power > 0 else "inverse"
                a = atom(n, *tok.indices)
                for _ in range(abs(tok.power)):
                    yield kind, a
            else:
                for i in token_artin_letters(tok, n):
                    yield ("simple" if i > 0 else "inverse"), atom(n, abs(i), abs(i) + 1)


@lru_cache(maxsize=None)
def structure(n: int) -> DualStructure:
    return DualStructure(n)


@dataclass(frozen=True)
class DualNF:
    """``delta^p d_1 ... d_r``."""

    n: int
    p: int
    factors: tuple[DualSimple, ...]

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

    @property
    def simply_nested(self) -> bool:
        return is_simply_nested(self)

    def prefix(self, r: int) -> DualNF:
        return DualNF(self.n, self.p, self.factors[:r])

    def to_word(self) -> BraidWord:
        letters = [Token.small_delta(self.p)] if self.p else []
        for d in self.factors:
            letters.extend(d.to_word().letters)
        return BraidWord(self.n, tuple(letters))

    def to_json(self) -> dict:
        return {"kind": "dual", "n": self.n, "p": self.p,
                "factors": [d.atom_strings() for d in self.factors],
                "sup": self.sup, "inf": self.inf, "len": self.canonical_length,
                "simply_nested": self.simply_nested}


def normal_form_d(w: BraidWord) -> DualNF:
    st = structure(w.n)
    p, factors = st.normal_form_steps(st.expand(w))
    return DualNF(w.n, p, tuple(factors))


def normal_form_from_factors(n: int, p: int, factors: Sequence[DualSimple]) -> DualNF:
    q, out = structure(n).normalize_sequence(p, factors)
    return DualNF(n, q, tuple(out))


def sup_d(w: BraidWord) -> int:
    return normal_form_d(w).sup


def inf_d(w: BraidWord) -> int:
    return normal_form_d(w).inf


def len_d(w: BraidWord) -> int:
    return normal_form_d(w).canonical_length


def garside_len_d(w: BraidWord) -> int:
    return normal_form_d(w).garside_length


def is_simply_nested(nf: DualNF) -> bool:
    return all(simply_nested_pair(a, b) for a, b in zip(nf.factors, nf.factors[1:]))


@lru_cache(maxsize=None)
def simply_nested_successors(d: DualSimple) -> tuple[DualSimple, ...]:
    return tuple(e for e in proper_simples(d.n)
                 if left_weighted_d(d, e) and simply_nested_pair(d, e))


def random_simply_nested_nf(n: int, r: int, rng: random.Random, p: int | None = None) -> DualNF:
    """Uniform-choice walk through simply-nested successors, backtracking on dead ends."""
    if p is None:
        p = rng.randint(-3, 3)
    firsts = list(proper_simples(n))
    if r == 0:
        return DualNF(n, p, ())
    if not firsts:
        raise ValueError(f"B_{n} has no proper dual simple elements")

    def extend(prefix: list[DualSimple]) -> list[DualSimple] | None:
        if len(prefix) == r:
            return prefix
        pool = list(simply_nested_successors(prefix[-1])) if prefix else list(firsts)
        rng.shuffle(pool)
        for d in pool:
            found = extend(prefix + [d])
            if found is not None:
                return found
        return None

    factors = extend([])
    if factors is None:
        raise ValueError(f"no simply-nested normal form of length {r} in B_{n}")
    return DualNF(n, p, tuple(factors))


def random_simply_nested(n: int, r: int, seed: int | None = None, p: int | None = None) -> BraidWord:
    return random_simply_nested_nf(n, r, random.Random(seed), p).to_word()
