"""Named braids with known answers, stored as literals and replayed on demand.

``x`` in ``B_6`` and ``y`` in ``B_5`` are commutators in the kernel of the
Burau representation.  ``x_prime`` and ``y_prime`` are dual normal forms of
conjugates of them; the conjugators are unknown, so those fixtures check the
printed words on their own terms (normal, exponent sum zero, trivial matrix)
rather than conjugacy to ``x`` and ``y``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from .burau import rho
from .garside_classical import normal_form_c
from .garside_dual import DualNF, DualSimple, normal_form_d, normal_form_from_factors, simple_from_atoms
from .garside_dual import left_weighted_d, simply_nested_pair
from .words import BraidWord, commutator, concat, exponent_sum, invert, parse


@dataclass(frozen=True)
class Fixture:
    name: str
    n: int
    word: BraidWord
    expected: dict = field(default_factory=dict)


@dataclass(frozen=True)
class FixtureResult:
    name: str
    passed: bool
    detail: dict

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


_FACTOR_RE = re.compile(r"\(([^()]*)\)(?:\^(\d+))?")
_DELTA_RE = re.compile(r"^\s*d\^(-?\d+)")
_ATOM_RE = re.compile(r"a(\d+),(\d+)")


def parse_dual_nf(text: str, n: int) -> DualNF:
    """Read ``d^p (a1,2 a3,4)(a2,4)^2 ...`` without normalizing it."""
    m = _DELTA_RE.match(text)
    p = int(m.group(1)) if m else 0
    factors: list[DualSimple] = []
    for body, reps in _FACTOR_RE.findall(text):
        atoms = [(int(i), int(j)) for i, j in _ATOM_RE.findall(body)]
        factors.extend([simple_from_atoms(n, atoms)] * int(reps or 1))
    return DualNF(n, p, tuple(factors))


def _w(n: int, text: str) -> BraidWord:
    return parse(text, n)


# classical example in B_4 whose first factor is s2 s1 s3
EXAMPLE_WORD = "s2 s1 s3 s1 s3 s2 s1 s1 s2 s1 s3 s1 s3 s1 s2 s2"
EXAMPLE_FACTORS = ["s2 s1 s3", "s1 s3 s2 s1", "s1 s2 s1 s3", "s1 s3", "s1 s2", "s2"]
EXAMPLE_DEGREES = [[5, 8, 7], [6, 7, 7], [5, 7, 2]]

V1 = "s1 s2^-1 s5^-1 s4"
V2 = "s1^-2 s2 s5^2 s4^-1"
W1 = "s3^-1 s2 s1^2 s2 s4^3 s3 s2"
W2 = "s4^-1 s3 s2 s1^-2 s2 s1^2 s2^2 s1 s4^5"

X_PRIME = (
    "d^-6 (a1,6 a4,5)(a1,6 a2,5)(a1,6 a4,6 a2,3)(a1,5 a4,5 a2,3)(a3,6 a4,5)(a1,6 a2,5 a4,5)"
    "(a1,6 a3,5)(a1,6 a5,6 a2,4)(a1,3 a5,6)(a2,4 a5,6)(a1,3 a5,6 a4,5)(a2,6 a4,5)(a1,3)"
)
Y_PRIME = (
    "d^-23 (a2,5 a4,5)(a1,5 a3,5)(a1,4 a3,4)(a2,5)(a1,5 a2,3)(a1,5 a3,4)^2(a1,3)(a2,5 a3,4)"
    "(a1,4 a3,4)(a1,2 a1,4)(a1,2 a3,5)(a1,2 a1,5 a3,4)(a1,5)(a1,2)(a2,3)(a3,4)"
    "(a2,4)(a1,3 a4,5)(a1,2 a4,5)(a2,3 a4,5)(a1,3 a4,5)(a1,2 a3,5 a4,5)(a2,5 a3,5)"
    "(a1,3 a1,4)(a1,2 a1,4)(a1,2 a1,3 a4,5)(a1,2 a4,5)(a2,3 a4,5)^2(a2,5)(a1,4 a2,3)"
    "(a2,5 a3,5)(a1,5 a3,5)(a1,5 a2,4)(a1,5 a4,5 a2,3)(a1,5 a3,5 a2,3)^4(a2,4)(a1,3 a4,5)"
    "(a1,2 a4,5)(a2,3 a4,5)(a1,3 a4,5)(a1,2 a4,5 a3,4)"
)

NESTED_WORD = "a3,4 a2,4"
NESTED_INVERSE_NF = "d^-2 (a1,2 a3,4)(a1,2 a1,4)"


def kernel_x() -> BraidWord:
    v1, v2 = _w(6, V1), _w(6, V2)
    s3 = _w(6, "s3")
    return commutator(concat(invert(v2), v1, s3, invert(v1), v2), s3)


def kernel_y() -> BraidWord:
    w1, w2 = _w(5, W1), _w(5, W2)
    s4 = _w(5, "s4")
    long = _w(5, "s4 s3 s2 s1 s1 s2 s3 s4")
    return commutator(concat(invert(w1), s4, w1), concat(invert(w2), long, w2))


def x_prime() -> DualNF:
    return parse_dual_nf(X_PRIME, 6)


def y_prime() -> DualNF:
    return parse_dual_nf(Y_PRIME, 5)


def fixtures() -> list[Fixture]:
    return [
        Fixture("example_b4", 4, _w(4, EXAMPLE_WORD),
                {"p": 0, "factors": EXAMPLE_FACTORS, "degree_matrix": EXAMPLE_DEGREES}),
        Fixture("kernel_x_b6", 6, kernel_x(), {"identity": True, "exponent_sum": 0}),
        Fixture("kernel_y_b5", 5, kernel_y(), {"identity": True, "exponent_sum": 0}),
        Fixture("x_prime_b6", 6, x_prime().to_word(),
                {"p": -6, "len": 13, "identity": True, "non_simply_nested_pair": True}),
        Fixture("y_prime_b5", 5, y_prime().to_word(), {"p": -23, "len": 46, "identity": True}),
        Fixture("simply_nested_b4", 4, _w(4, NESTED_WORD),
                {"factors": [["a3,4"], ["a2,4"]], "inverse": NESTED_INVERSE_NF}),
    ]


def _check_example(fx: Fixture) -> dict:
    nf = normal_form_c(fx.word)
    degrees = rho(fx.word).degree_matrix()
    return {"p": nf.p == fx.expected["p"],
            "factors": [str(s) for s in nf.factors] == fx.expected["factors"],
            "degree_matrix": degrees == fx.expected["degree_matrix"]}


def _check_kernel(fx: Fixture) -> dict:
    return {"identity": rho(fx.word).is_identity(),
            "exponent_sum": exponent_sum(fx.word) == fx.expected["exponent_sum"]}


def _check_printed_nf(fx: Fixture, nf: DualNF) -> dict:
    pairs = list(zip(nf.factors, nf.factors[1:]))
    out = {
        "p": nf.p == fx.expected["p"],
        "len": nf.canonical_length == fx.expected["len"],
        "left_weighted": all(left_weighted_d(a, b) for a, b in pairs),
        "fixed_point": normal_form_from_factors(nf.n, nf.p, nf.factors) == nf,
        "exponent_sum": exponent_sum(fx.word) == 0,
        "identity": rho(fx.word).is_identity(),
    }
    if fx.expected.get("non_simply_nested_pair"):
        out["non_simply_nested_pair"] = any(not simply_nested_pair(a, b) for a, b in pairs)
    return out


def _check_nested(fx: Fixture) -> dict:
    nf = normal_form_d(fx.word)
    inv = normal_form_d(invert(fx.word))
    want = parse_dual_nf(fx.expected["inverse"], 4)
    return {"fixed_point": nf.p == 0 and [d.atom_strings() for d in nf.factors] == fx.expected["factors"]
            and normal_form_d(nf.to_word()) == nf,
            "simply_nested": nf.simply_nested,
            "inverse": inv == want}


_CHECKS: dict[str, Callable[[Fixture], dict]] = {
    "example_b4": _check_example,
    "kernel_x_b6": _check_kernel,
    "kernel_y_b5": _check_kernel,
    "x_prime_b6": lambda fx: _check_printed_nf(fx, x_prime()),
    "y_prime_b5": lambda fx: _check_printed_nf(fx, y_prime()),
    "simply_nested_b4": _check_nested,
}


def run_fixture(fx: Fixture) -> FixtureResult:
    detail = _CHECKS[fx.name](fx)
    return FixtureResult(fx.name, all(detail.values()), detail)


def run_fixtures() -> list[FixtureResult]:
    return [run_fixture(fx) for fx in fixtures()]
