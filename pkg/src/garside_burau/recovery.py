"""Reading the dual normal form of a simply-nested braid off its Burau matrix.

The last factor ``d_r`` is located one band generator at a time from the
column and entry degrees, then ``rho(d_r)^-1`` is peeled off and the search
recurses.  Every reconstruction is checked against the input before it is
returned, so a wrong answer is impossible; inputs that do not come from a
simply-nested braid are rejected with :class:`NotSimplyNestedEvidence`.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from functools import lru_cache

from .burau import apply_artin, rho, rho_delta_power
from .garside_dual import (
    DualNF,
    DualSimple,
    atom,
    left_weighted_d,
    proper_simples,
    simply_nested_pair,
)
from .laurent import BurauMatrix
from .words import Token, token_artin_letters


class NotSimplyNestedEvidence(ValueError):
    """The matrix is not the Burau image of a simply-nested braid."""


@dataclass(frozen=True)
class PrefixLetter:
    i0: int
    p: int
    row: int
    candidates: tuple[int, ...]

    @property
    def atom(self) -> tuple[int, int]:
        return (self.i0, self.p)


@dataclass(frozen=True)
class RecoveryStep:
    max_deg: int
    i0: int
    row: int
    candidates: tuple[int, ...]
    letter: tuple[int, int]
    factor: DualSimple

    def to_json(self) -> dict:
        return {"max_deg": self.max_deg, "i0": self.i0, "row": self.row,
                "candidates": list(self.candidates), "letter": f"a{self.letter[0]},{self.letter[1]}",
                "factor": self.factor.atom_strings()}


@dataclass
class RecoveryTrace:
    """Steps from the last factor backwards, then the remaining power of ``delta``."""

    n: int
    steps: list[RecoveryStep] = field(default_factory=list)
    terminal_power: int = 0

    def replay(self) -> BurauMatrix:
        out = rho_delta_power(self.n, self.terminal_power)
        for step in reversed(self.steps):
            out = out @ _rho_simple(step.factor)
        return out

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "terminal_power": self.terminal_power}


@lru_cache(maxsize=None)
def _simple_letters(d: DualSimple) -> tuple[int, ...]:
    return tuple(i for a in d.atoms() for i in token_artin_letters(Token.band(*a), d.n))


@lru_cache(maxsize=None)
def _rho_simple(d: DualSimple) -> BurauMatrix:
    return apply_artin(BurauMatrix.identity(d.n), _simple_letters(d))


@lru_cache(maxsize=None)
def _rho_simple_inv(d: DualSimple) -> BurauMatrix:
    return apply_artin(BurauMatrix.identity(d.n), [-i for i in reversed(_simple_letters(d))])


@lru_cache(maxsize=None)
def _atom_inv_letters(n: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(token_artin_letters(Token.band(i, j, -1), n))


def _monomial_degree(mat: BurauMatrix) -> int:
    """``e`` with ``det mat = (-q)^e``; anything else cannot be a braid image."""
    det = mat.det()
    if len(det.coeffs) != 1 or det.coeffs[0] != (-1) ** (det.lo % 2):
        raise NotSimplyNestedEvidence(f"determinant {det} is not of the form (-q)^e")
    return det.lo


def delta_power_from_matrix(mat: BurauMatrix) -> int | None:
    """``p`` when ``mat == rho(delta)^p``, else ``None``."""
    try:
        e = _monomial_degree(mat)
    except NotSimplyNestedEvidence:
        return None
    return _delta_power(mat, e)


def _delta_power(mat: BurauMatrix, e: int) -> int | None:
    n = mat.n
    if e % (n - 1):
        return None
    p = e // (n - 1)
    return p if mat == rho_delta_power(n, p) else None


def sup_from_matrix(mat: BurauMatrix) -> int:
    """Maximal degree; equals ``sup`` of the dual normal form for simply-nested braids."""
    return int(mat.max_deg)


def inf_from_matrix(mat: BurauMatrix) -> int:
    """Minimal degree; equals ``inf`` of the dual normal form for 3-braids."""
    return int(mat.min_deg)


def _letter_candidates(mat: BurauMatrix) -> tuple[int, int, tuple[int, ...], int | None]:
    """``(i0, row, candidates, accepted)``; ``accepted`` is ``None`` when every candidate fails."""
    n, m = mat.n, mat.n - 1
    top = mat.max_deg
    if top == -math.inf:
        raise NotSimplyNestedEvidence("zero matrix")
    i0 = next(c for c in range(1, m + 1) if mat.col_max(c) == top)
    j = next(r for r in range(1, m + 1) if mat.entry_max_deg(r - 1, i0 - 1) == top)

    def deg(col: int, a: BurauMatrix = mat) -> float:
        return a.entry_max_deg(j - 1, col - 1) if col <= m else -math.inf

    cands = tuple(p for p in range(i0 + 1, n + 1) if deg(p - 1) == top and deg(p) != top)
    for p in cands:
        if p == n:
            # no column n to test: the last remaining candidate is accepted
            return i0, j, cands, p
        reduced = apply_artin(mat, _atom_inv_letters(n, i0, p))
        if deg(p, reduced) < top:
            return i0, j, cands, p
    return i0, j, cands, None


def find_prefix_letter(mat: BurauMatrix) -> PrefixLetter:
    """A band generator ``a_{i0,p}`` expected to divide the last factor of the dual normal form."""
    if mat.n < 3 or delta_power_from_matrix(mat) is not None:
        raise NotSimplyNestedEvidence("matrix is a power of delta: no last factor to find")
    i0, j, cands, p = _letter_candidates(mat)
    if p is None:
        raise NotSimplyNestedEvidence(f"no candidate passes the degree drop (row {j}, column {i0})")
    return PrefixLetter(i0, p, j, cands)


@lru_cache(maxsize=None)
def _factor_candidates(n: int, i0: int, ps: tuple[int, ...], spans: frozenset[int]) -> tuple[DualSimple, ...]:
    """Proper simples with least vertex ``i0``, divisible by some ``a_{i0,p}``, whose chords
    span every column ``k`` in ``spans`` (some polygon has vertices on both sides of ``k``).

    Ordered by the position of ``p`` in ``ps``, then by increasing length: multiples of the
    true last factor also pass the degree test, so the smallest passing candidate comes first."""
    out = []
    for d in proper_simples(n):
        if min(v for poly in d.polygons for v in poly) != i0:
            continue
        ranks = [k for k, p in enumerate(ps) if atom(n, i0, p).divides(d)]
        if not ranks:
            continue
        if not all(any(min(poly) <= k < max(poly) for poly in d.polygons) for k in spans):
            continue
        out.append((ranks[0], d.length, d))
    out.sort(key=lambda t: t[:2])
    return tuple(d for _, _, d in out)


def _feasible(n: int, s: int, e: int) -> bool:
    # delta^p d_1...d_r with r = s - p >= 0 and r <= e - (n-1)p <= (n-2)r
    lo = e - (n - 2) * s
    hi = min(s, (e - s) // (n - 2))
    return lo <= hi


def dual_nf_from_matrix(mat: BurauMatrix, n: int | None = None) -> tuple[DualNF, RecoveryTrace]:
    """Dual normal form of the simply-nested braid (any braid for ``n = 3``) with Burau matrix ``mat``."""
    n = n or mat.n
    if n != mat.n:
        raise ValueError(f"matrix is for B_{mat.n}, not B_{n}")
    e = _monomial_degree(mat)
    p = _delta_power(mat, e)
    if p is not None:
        return DualNF(n, p, ()), RecoveryTrace(n, [], p)
    if n < 3:
        raise NotSimplyNestedEvidence("2-braid matrix that is not a power of delta")

    steps: list[RecoveryStep] = []
    dead: set[tuple[BurauMatrix, DualSimple | None]] = set()

    def search(cur: BurauMatrix, e: int, after: DualSimple | None) -> int | None:
        p = _delta_power(cur, e)
        if p is not None:
            return p
        s = cur.max_deg
        if s == -math.inf or not _feasible(n, int(s), e):
            return None
        key = (cur, after)
        if key in dead:
            return None
        i0, j, cands, accepted = _letter_candidates(cur)
        ps = ((accepted,) if accepted else ()) + tuple(p for p in cands if p != accepted)
        spans = frozenset(k for k in range(1, n) if cur.col_max(k) == s)
        for d in _factor_candidates(n, i0, ps, spans):
            if after is not None and not (left_weighted_d(d, after) and simply_nested_pair(d, after)):
                continue
            nxt = cur @ _rho_simple_inv(d)
            if nxt.max_deg != s - 1:
                continue
            letter = next((i0, p) for p in ps if atom(n, i0, p).divides(d))
            steps.append(RecoveryStep(int(s), i0, j, cands, letter, d))
            found = search(nxt, e - d.length, d)
            if found is not None:
                return found
            steps.pop()
        dead.add(key)
        return None

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * int(mat.max_deg - mat.min_deg) + 200))
    try:
        p = search(mat, e, None)
    finally:
        sys.setrecursionlimit(limit)
    if p is None:
        raise NotSimplyNestedEvidence("no simply-nested normal form has this Burau matrix")
    nf = DualNF(n, p, tuple(s.factor for s in reversed(steps)))
    trace = RecoveryTrace(n, steps, p)
    if trace.replay() != mat or rho(nf.to_word()) != mat:
        raise AssertionError("reconstruction does not reproduce the input matrix")
    return nf, trace
