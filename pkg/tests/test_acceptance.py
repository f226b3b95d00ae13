"""Acceptance checks, one test per criterion.

Each test prints a single PASS/FAIL line (also collected in the terminal
summary) before asserting, so a failing criterion is still reported.
"""

from __future__ import annotations

import itertools
import random
import time

import pytest
from _helpers import mat, poly, random_word, report

from garside_burau.burau import expected_det, rho, rho_sigma
from garside_burau.criteria import forbidden_pairs_b4, non_simply_nested_pairs, row_degree_profile
from garside_burau.fixtures import EXAMPLE_DEGREES, EXAMPLE_FACTORS, EXAMPLE_WORD, kernel_x, kernel_y
from garside_burau.fixtures import parse_dual_nf, x_prime, y_prime
from garside_burau.garside_classical import (
    NotSimpleError,
    all_simples,
    meet_c,
    normal_form_c,
    random_normal_form_c,
    simple_from_letters,
)
from garside_burau.garside_dual import (
    NotDualSimpleError,
    complement_d,
    enumerate_dual_simples,
    join_d,
    left_weighted_d,
    meet_d,
    normal_form_d,
    normal_form_from_factors,
    random_simply_nested_nf,
    simple_from_atoms,
    simply_nested_pair,
    small_delta,
)
from garside_burau.laurent import BurauMatrix, LaurentPoly, mat_det
from garside_burau.recovery import dual_nf_from_matrix
from garside_burau.words import exponent_sum, invert, parse

# ---------------------------------------------------------------- 1


def _block_form(n: int, i: int) -> BurauMatrix:
    """``I_{i-2} + B + I_{n-i-2}`` built on a padded identity and cropped at the edges."""
    size = n + 1
    pad = [["1" if r == c else "0" for c in range(size)] for r in range(size)]
    block = [["1", "q", "0"], ["0", "-q", "0"], ["0", "1", "1"]]
    for r in range(3):
        for c in range(3):
            pad[i - 1 + r][i - 1 + c] = block[r][c]
    return mat(n, [row[1:n] for row in pad[1:n]])


def test_generator_matrices():
    shown = {
        1: [["-q", "0", "0"], ["1", "1", "0"], ["0", "0", "1"]],
        2: [["1", "q", "0"], ["0", "-q", "0"], ["0", "1", "1"]],
        3: [["1", "0", "0"], ["0", "1", "q"], ["0", "0", "-q"]],
    }
    t0 = time.perf_counter()
    ok4 = all(rho_sigma(4, i) == mat(4, rows) for i, rows in shown.items())
    ok_blocks = all(rho_sigma(n, i) == _block_form(n, i) for n in (3, 4, 5, 6) for i in range(1, n))
    ms = 1000 * (time.perf_counter() - t0)
    passed = ok4 and ok_blocks
    report(1, passed, f"B4 displays {ok4}, block forms n=3..6 {ok_blocks}, {ms:.1f} ms")
    assert passed


# ---------------------------------------------------------------- 2

PRODUCTS = {
    "s2 s1 s3": [["0", "q", "q^2"], ["-q", "-q", "-q^2"], ["1", "1", "0"]],
    "s1 s3": [["-q", "0", "0"], ["1", "1", "q"], ["0", "0", "-q"]],
    "s1 s3 s2": [["-q", "-q^2", "0"], ["1", "q", "q"], ["0", "-q", "-q"]],
    "s1 s3 s2 s1": [["0", "-q^2", "0"], ["0", "q", "q"], ["-q", "-q", "-q"]],
    "s1 s3 s2 s3": [["-q", "-q^2", "-q^3"], ["1", "q", "0"], ["0", "-q", "0"]],
    "s1 s3 s2 s1 s3": [["0", "-q^2", "-q^3"], ["0", "q", "0"], ["-q", "-q", "0"]],
    "D": [["0", "0", "-q^3"], ["0", "-q^2", "0"], ["-q", "0", "0"]],
    "D s2 s1 s3 s2": [["-q^3", "0", "0"], ["q^3", "q^4", "q^4"], ["0", "0", "-q^3"]],
    "s2 s1 s3 s2": [["0", "0", "q^2"], ["-q", "-q^2", "-q^2"], ["1", "0", "0"]],
    "D s2": [["0", "-q^3", "-q^3"], ["0", "q^3", "0"], ["-q", "-q^2", "0"]],
}


def test_explicit_products():
    bad = [w for w, rows in PRODUCTS.items() if rho(parse(w, 4)) != mat(4, rows)]
    homothety = rho(parse("D^2", 4)) == BurauMatrix.scalar(4, poly("q^4"))
    passed = not bad and homothety
    report(2, passed, f"{len(PRODUCTS) - len(bad)}/{len(PRODUCTS)} products exact, Delta^2 = q^4 I: {homothety}")
    assert passed, bad


# ---------------------------------------------------------------- 3


def test_classical_example():
    w = parse(EXAMPLE_WORD, 4)
    nf = normal_form_c(w)
    factors = [str(s) for s in nf.factors]
    degrees = rho(w).degree_matrix()
    passed = nf.p == 0 and factors == EXAMPLE_FACTORS and degrees == EXAMPLE_DEGREES
    report(3, passed, f"p={nf.p}, factors {factors}, degrees {degrees}")
    assert passed


# ---------------------------------------------------------------- 4


def test_row_degree_profile():
    rng = random.Random(31)
    banned = simple_from_letters(4, [2, 1, 3])
    t0 = time.perf_counter()
    samples, violations = 1000, []
    for _ in range(samples):
        nf = random_normal_form_c(4, rng.randint(2, 12), rng, p=0, avoid=(banned,))
        w = nf.to_word()
        assert normal_form_c(w) == nf
        prof = row_degree_profile(w)
        if not prof.holds:
            violations.append((str(w), prof.to_json()))
    elapsed = time.perf_counter() - t0
    passed = not violations and elapsed < 30
    report(4, passed, f"{samples} braids, {len(violations)} violations, {elapsed:.1f} s (< 30 s)")
    assert passed, violations[:3]


# ---------------------------------------------------------------- 5


def test_dual_fixtures():
    w = parse("a3,4 a2,4", 4)
    nf = normal_form_d(w)
    fixed = ([d.atom_strings() for d in nf.factors] == [["a3,4"], ["a2,4"]] and nf.p == 0
             and normal_form_d(nf.to_word()) == nf)
    inv = normal_form_d(invert(w)) == parse_dual_nf("d^-2 (a1,2 a3,4)(a1,2 a1,4)", 4)
    passed = fixed and inv
    report(5, passed, f"fixed point {fixed}, inverse normal form {inv}")
    assert passed


# ---------------------------------------------------------------- 6


def test_forbidden_pairs_complete():
    found = set(non_simply_nested_pairs(4))
    printed = set(forbidden_pairs_b4())
    total = len(enumerate_dual_simples(4)) ** 2
    passed = found == printed and len(printed) == 6
    report(6, passed, f"scanned {total} ordered pairs, found {len(found)}, printed list matches: {found == printed}")
    assert passed


# ---------------------------------------------------------------- 7


def test_degree_bound_random_words():
    rng = random.Random(53)
    samples, violations = 10_000, []
    for _ in range(samples):
        n = rng.randint(3, 6)
        w = random_word(rng, n, rng.randint(0, 40))
        if rho(w).max_deg > normal_form_d(w).sup:
            violations.append(str(w))
    passed = not violations
    report(7, passed, f"{samples} words n=3..6, {len(violations)} violations")
    assert passed, violations[:3]


# ---------------------------------------------------------------- 8


def test_degree_equality_simply_nested():
    rng = random.Random(521)
    per_n, violations = 1000, []
    for n in (3, 4, 5, 6):
        for _ in range(per_n):
            nf = random_simply_nested_nf(n, rng.randint(0, 10), rng)
            w = nf.to_word()
            if normal_form_d(w) != nf or rho(w).max_deg != nf.sup:
                violations.append((n, str(w)))
    passed = not violations
    report(8, passed, f"{per_n} simply-nested braids per n=3..6, {len(violations)} violations")
    assert passed, violations[:3]


# ---------------------------------------------------------------- 9


def test_recovery_round_trip():
    rng = random.Random(9)
    t0 = time.perf_counter()
    per_n, failures = 1000, []
    for n in (3, 4, 5, 6):
        for _ in range(per_n):
            nf = random_simply_nested_nf(n, rng.randint(0, 8), rng)
            try:
                got, _ = dual_nf_from_matrix(rho(nf.to_word()))
            except ValueError as exc:
                got = exc
            if got != nf:
                failures.append((n, str(nf.to_word()), str(got)))
    degree_misses = 0
    for _ in range(per_n):
        w = random_word(rng, 3, rng.randint(0, 30))
        m = rho(w)
        want = normal_form_d(w)
        got, _ = dual_nf_from_matrix(m)
        if got != want:
            failures.append((3, str(w), str(got)))
        if m.max_deg != want.sup or (not want.is_trivial() and m.min_deg != want.inf):
            degree_misses += 1
    elapsed = time.perf_counter() - t0
    passed = not failures and not degree_misses and elapsed < 300
    report(9, passed, f"{4 * per_n} simply-nested + {per_n} arbitrary 3-braids, {len(failures)} mismatches, "
                      f"{degree_misses} sup/inf misses, {elapsed:.1f} s (< 300 s)")
    assert passed, failures[:3]


# ---------------------------------------------------------------- 10


def test_kernel_fixtures():
    x, y = kernel_x(), kernel_y()
    kernel = rho(x).is_identity() and rho(y).is_identity() and exponent_sum(x) == exponent_sum(y) == 0
    checks = []
    for nf, p, r in ((x_prime(), -6, 13), (y_prime(), -23, 46)):
        w = nf.to_word()
        checks.append(nf.p == p and nf.canonical_length == r
                      and normal_form_from_factors(nf.n, nf.p, nf.factors) == nf
                      and normal_form_d(w) == nf
                      and rho(w).is_identity() and exponent_sum(w) == 0)
    xp = x_prime().factors
    not_nested = any(not simply_nested_pair(a, b) for a, b in zip(xp, xp[1:]))
    passed = kernel and all(checks) and not_nested
    report(10, passed, f"x, y in kernel {kernel}; x' {checks[0]}, y' {checks[1]}; "
                       f"x' has a non-simply-nested pair {not_nested}")
    assert passed


# ---------------------------------------------------------------- 11


def _classical_divisors(n: int) -> dict:
    """``s`` divides ``t`` iff ``s`` followed by some simple is again simple and equals ``t``."""
    simples = all_simples(n)
    divs = {t: set() for t in simples}
    for s, x in itertools.product(simples, repeat=2):
        try:
            t = simple_from_letters(n, s.artin_letters() + x.artin_letters())
        except NotSimpleError:
            continue
        divs[t].add(s)
    return divs


def _dual_divisors(n: int) -> dict:
    simples = enumerate_dual_simples(n)
    divs = {t: set() for t in simples}
    for s, x in itertools.product(simples, repeat=2):
        try:
            t = simple_from_atoms(n, s.atoms() + x.atoms())
        except NotDualSimpleError:
            continue
        divs[t].add(s)
    return divs


def _brute_meet(divs: dict, a, b):
    common = divs[a] & divs[b]
    return max(common, key=lambda s: s.length)


def _brute_join(divs: dict, a, b):
    multiples = [t for t, ds in divs.items() if a in ds and b in ds]
    return min(multiples, key=lambda t: t.length)


def _pairs(items, sample: int | None, rng: random.Random):
    pairs = list(itertools.product(items, repeat=2))
    return pairs if sample is None else rng.sample(pairs, min(sample, len(pairs)))


@pytest.mark.slow
def test_lattice_oracles():
    rng = random.Random(11)
    wrong: list[str] = []
    counted = {"lw": 0, "meet_c": 0, "meet_d": 0, "join_d": 0}
    for n in (3, 4):
        delta = small_delta(n)
        simples = enumerate_dual_simples(n)
        for a, b in itertools.product(simples, repeat=2):
            counted["lw"] += 1
            lattice = meet_d(complement_d(a, delta), b).is_identity()
            if left_weighted_d(a, b) != lattice:
                wrong.append(f"lw {a} {b}")
    for n, sample in ((3, None), (4, None), (5, 1500)):
        divs = _classical_divisors(n)
        for a, b in _pairs(all_simples(n), sample, rng):
            counted["meet_c"] += 1
            if meet_c(a, b) != _brute_meet(divs, a, b):
                wrong.append(f"meet_c {a} {b}")
        divs = _dual_divisors(n)
        for a, b in _pairs(enumerate_dual_simples(n), sample, rng):
            counted["meet_d"] += 1
            counted["join_d"] += 1
            if meet_d(a, b) != _brute_meet(divs, a, b):
                wrong.append(f"meet_d {a} {b}")
            if join_d(a, b) != _brute_join(divs, a, b):
                wrong.append(f"join_d {a} {b}")
    passed = not wrong
    report(11, passed, f"pairs checked {counted}, {len(wrong)} disagreements")
    assert passed, wrong[:5]


# ---------------------------------------------------------------- 12


def test_determinant_law():
    rng = random.Random(12)
    per_n, violations = 1000, []
    for n in (3, 4, 5, 6):
        for _ in range(per_n):
            w = random_word(rng, n, rng.randint(0, 40))
            e = exponent_sum(w)
            det = mat_det(rho(w))
            if det != expected_det(n, e) or det != LaurentPoly.monomial((-1) ** (e % 2), e):
                violations.append(str(w))
    passed = not violations
    report(12, passed, f"{per_n} words per n=3..6, det = (-q)^e with {len(violations)} violations")
    assert passed, violations[:3]
