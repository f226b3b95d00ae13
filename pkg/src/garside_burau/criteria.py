"""Non-vanishing and degree-bound checks for the reduced Burau representation.

Each check returns a :class:`Verdict` carrying the evidence that triggered
it, so a caller can see why a braid was (or was not) certified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .burau import rho
from .garside_classical import ClassicalNF, normal_form_c, simple_from_letters
from .garside_dual import (
    DualNF,
    DualSimple,
    left_weighted_d,
    normal_form_d,
    proper_simples,
    simple_from_atoms,
    simply_nested_pair,
)
from .words import BraidWord

NONVANISHING = "nonvanishing_guaranteed"
INCONCLUSIVE = "inconclusive"


class WrongStrandCountError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    applicable: bool
    conclusion: str
    witness: dict = field(default_factory=dict)

    @property
    def guaranteed(self) -> bool:
        return self.conclusion == NONVANISHING

    def to_json(self) -> dict:
        return {"applicable": self.applicable, "conclusion": self.conclusion, "witness": self.witness}


def _require_b4(w: BraidWord) -> None:
    if w.n != 4:
        raise WrongStrandCountError(f"this check is for 4-braids, got n={w.n}")


def _trivial(nf) -> Verdict:
    return Verdict(False, INCONCLUSIVE, {"reason": "trivial braid"})


@lru_cache(maxsize=None)
def _s2s1s3():
    return simple_from_letters(4, [2, 1, 3])


def classical_criterion_b4(w: BraidWord) -> Verdict:
    """Certified unless the classical normal form has a factor ``s2 s1 s3``."""
    _require_b4(w)
    nf = normal_form_c(w)
    if nf.is_trivial():
        return _trivial(nf)
    bad = [k for k, s in enumerate(nf.factors) if s == _s2s1s3()]
    base = {"p": nf.p, "factors": [str(s) for s in nf.factors]}
    if bad:
        return Verdict(True, INCONCLUSIVE, base | {"offending_factor": bad[0]})
    return Verdict(True, NONVANISHING, base)


# -- row-degree profile of 4-braids with infimum zero

_CASES = {
    frozenset({1}): ("row1",),
    frozenset({2}): ("row2",),
    frozenset({3}): ("row3",),
    frozenset({1, 2}): ("row1", "row2"),
    frozenset({2, 3}): ("row2", "row3"),
    frozenset({1, 3}): ("row1_weak", "row3"),
}


@dataclass(frozen=True)
class RowDegreeProfile:
    starting_set: frozenset[int]
    row_max: tuple[int, int, int]
    disjuncts: dict[str, bool]
    case_holds: bool
    sup_c: int
    max_deg: int
    sup_bound_holds: bool

    @property
    def holds(self) -> bool:
        return self.case_holds and self.sup_bound_holds

    def to_json(self) -> dict:
        return {"starting_set": sorted(self.starting_set), "row_max": list(self.row_max),
                "disjuncts": self.disjuncts, "case_holds": self.case_holds,
                "sup_c": self.sup_c, "max_deg": self.max_deg,
                "sup_bound_holds": self.sup_bound_holds, "holds": self.holds}


def row_degree_profile(w: BraidWord, nf: ClassicalNF | None = None) -> RowDegreeProfile:
    """Row maxima of ``rho_4(w)`` against the case split on ``S(s_1)``."""
    _require_b4(w)
    nf = nf or normal_form_c(w)
    if nf.p != 0:
        raise PreconditionError(f"infimum is {nf.p}, not 0")
    if nf.canonical_length < 2:
        raise PreconditionError(f"canonical length {nf.canonical_length} < 2")
    if _s2s1s3() in nf.factors:
        raise PreconditionError("normal form has a factor s2 s1 s3")
    mat = rho(w)
    m1, m2, m3 = (int(mat.row_max(i)) for i in (1, 2, 3))
    tests = {
        "row1": m1 > m2 and m1 > m3 + 1,
        "row2": m2 >= m1 and m2 > m3,
        "row3": m3 >= m1 and m3 >= m2,
        "row1_weak": m1 > m2 and m1 > m3,
    }
    s = nf.factors[0].starting_set()
    names = _CASES[s]
    disjuncts = {k: tests[k] for k in names}
    top = int(mat.max_deg)
    return RowDegreeProfile(
        starting_set=s,
        row_max=(m1, m2, m3),
        disjuncts=disjuncts,
        case_holds=any(disjuncts.values()),
        sup_c=nf.sup,
        max_deg=top,
        sup_bound_holds=nf.sup <= top <= 3 * nf.sup,
    )



# name kept for the published interface
lemma31_profile = row_degree_profile

# -- dual criteria

_FORBIDDEN_B4 = [
    ([(1, 2), (3, 4)], [(2, 4)]),
    ([(1, 2), (3, 4)], [(3, 4), (2, 3)]),
    ([(1, 2), (3, 4)], [(1, 2), (1, 4)]),
    ([(2, 3), (1, 4)], [(1, 3)]),
    ([(2, 3), (1, 4)], [(1, 3), (2, 3)]),
    ([(2, 3), (1, 4)], [(1, 3), (1, 4)]),
]


@lru_cache(maxsize=None)
def forbidden_pairs_b4() -> tuple[tuple[DualSimple, DualSimple], ...]:
    """The six left-weighted pairs of ``B_4`` that are not simply nested."""
    return tuple((simple_from_atoms(4, a), simple_from_atoms(4, b)) for a, b in _FORBIDDEN_B4)


def non_simply_nested_pairs(n: int) -> list[tuple[DualSimple, DualSimple]]:
    """Exhaustive scan: left-weighted pairs of proper simples that are not simply nested."""
    ps = proper_simples(n)
    return [(a, b) for a in ps for b in ps if left_weighted_d(a, b) and not simply_nested_pair(a, b)]


def dual_criterion_b4(w: BraidWord) -> Verdict:
    """Certified when no adjacent pair of the dual normal form is one of the six forbidden pairs."""
    _require_b4(w)
    nf = normal_form_d(w)
    if nf.is_trivial():
        return _trivial(nf)
    forbidden = set(forbidden_pairs_b4())
    heads = {a for a, _ in forbidden}
    bad_pairs = [k for k, pair in enumerate(zip(nf.factors, nf.factors[1:])) if pair in forbidden]
    bad_factors = [k for k, d in enumerate(nf.factors) if d in heads]
    base = {"p": nf.p, "factors": [d.atom_strings() for d in nf.factors],
            "forbidden_factor_free": not bad_factors}
    if bad_pairs:
        return Verdict(True, INCONCLUSIVE, base | {"offending_pair": bad_pairs[0]})
    return Verdict(True, NONVANISHING, base)


@dataclass(frozen=True)
class DegreeBoundReport:
    max_deg: int
    sup_d: int
    simply_nested: bool

    @property
    def bound_holds(self) -> bool:
        return self.max_deg <= self.sup_d

    @property
    def equality(self) -> bool:
        return self.max_deg == self.sup_d

    def to_json(self) -> dict:
        return {"max_deg": self.max_deg, "sup_d": self.sup_d, "simply_nested": self.simply_nested,
                "bound_holds": self.bound_holds, "equality": self.equality}


def degree_bound_report(w: BraidWord, nf: DualNF | None = None) -> DegreeBoundReport:
    nf = nf or normal_form_d(w)
    return DegreeBoundReport(int(rho(w).max_deg), nf.sup, nf.simply_nested)


def kernel_exclusion(w: BraidWord, nf: DualNF | None = None) -> Verdict:
    """Look for the longest simply-nested prefix outweighing the exponent sum of the rest."""
    nf = nf or normal_form_d(w)
    if nf.is_trivial():
        return _trivial(nf)
    n, r, fs = nf.n, nf.canonical_length, nf.factors
    # prefixes of length <= sn_upto are simply nested
    sn_upto = r
    for k in range(r - 1):
        if not simply_nested_pair(fs[k], fs[k + 1]):
            sn_upto = k + 1
            break
    tail = [0] * (r + 1)
    for k in range(r - 1, -1, -1):
        tail[k] = tail[k + 1] + fs[k].length
    base = {"p": nf.p, "r": r, "simply_nested_prefix": sn_upto}
    for rp in range(sn_upto, -1, -1):
        if rp > tail[rp]:
            return Verdict(True, NONVANISHING, base | {
                "r_prime": rp, "tail_exponent_sum": tail[rp],
                "fraction_condition": rp * (n - 1) > (n - 2) * r,
            })
    return Verdict(True, INCONCLUSIVE, base)
