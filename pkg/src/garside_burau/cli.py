"""Command-line front end: ``garside-burau {nf,burau,check,recover,random,fixtures}``.

Output is one JSON object per line on stdout; errors go to stderr as JSON.
When the positional input is omitted, inputs are read one per line from
standard input and answered in order.

Exit status: 0 on success, 1 when ``--strict`` and a check is inconclusive
(or a fixture fails), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterable

from . import criteria
from .burau import rho
from .fixtures import fixtures, run_fixtures
from .garside_classical import normal_form_c
from .garside_dual import normal_form_d, random_simply_nested_nf
from .laurent import BurauMatrix
from .recovery import NotSimplyNestedEvidence, dual_nf_from_matrix, inf_from_matrix
from .words import BraidWord, BraidWordError, exponent_sum, from_artin, parse

SEED_ENV = "GARSIDE_BURAU_SEED"

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def _deg(x: float) -> int | None:
    return None if math.isinf(x) else int(x)


def _word(args: argparse.Namespace, text: str) -> BraidWord:
    if args.n is None:
        raise InputError("the strand count -n is required")
    return parse(text, args.n)


# -- handlers: (args, text) -> JSON-able dict

def handle_nf(args: argparse.Namespace, text: str) -> dict:
    w = _word(args, text)
    nf = normal_form_c(w) if args.classical else normal_form_d(w)
    return nf.to_json() | {"garside_length": nf.garside_length, "word": str(nf.to_word())}


def handle_burau(args: argparse.Namespace, text: str) -> dict:
    w = _word(args, text)
    mat = rho(w)
    m = mat.dim
    return mat.to_json() | {
        "min_deg": _deg(mat.min_deg),
        "max_deg": _deg(mat.max_deg),
        "row_max": [_deg(mat.row_max(i)) for i in range(1, m + 1)],
        "col_max": [_deg(mat.col_max(j)) for j in range(1, m + 1)],
        "det": mat.det().to_json(),
        "exponent_sum": exponent_sum(w),
    }


_CRITERIA: dict[str, Callable] = {
    "classical-b4": criteria.classical_criterion_b4,
    "dual-b4": criteria.dual_criterion_b4,
    "kernel-exclusion": criteria.kernel_exclusion,
    "degree-bound": criteria.degree_bound_report,
}


def handle_check(args: argparse.Namespace, text: str) -> dict:
    w = _word(args, text)
    try:
        result = _CRITERIA[args.criterion](w)
    except criteria.WrongStrandCountError as exc:
        raise InputError(str(exc)) from exc
    return {"criterion": args.criterion} | result.to_json()


def handle_recover(args: argparse.Namespace, text: str) -> dict:
    if args.via_burau:
        mat = rho(_word(args, text))
    else:
        try:
            mat = BurauMatrix.from_json(json.loads(text))
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"not a Burau matrix JSON object: {exc}") from exc
    try:
        nf, trace = dual_nf_from_matrix(mat)
    except NotSimplyNestedEvidence as exc:
        return {"recovered": False, "reason": str(exc)}
    out = {"recovered": True} | nf.to_json() | {"min_deg": _deg(inf_from_matrix(mat))}
    if args.trace:
        out["trace"] = trace.to_json()
    return out


def handle_random(args: argparse.Namespace, text: str) -> dict:
    if args.n is None or args.n < 2:
        raise InputError("the strand count -n (at least 2) is required")
    seed = args.seed
    if seed is None and os.environ.get(SEED_ENV):
        seed = int(os.environ[SEED_ENV])
    # one stream per output line, reproducible from the seed
    rng = random.Random(None if seed is None else f"{seed}/{text or 0}")
    if args.simply_nested:
        if args.n < 3:
            raise InputError("simply-nested generation needs n >= 3")
        w = random_simply_nested_nf(args.n, args.length, rng).to_word()
    else:
        w = from_artin(args.n, [rng.choice((-1, 1)) * rng.randint(1, args.n - 1) for _ in range(args.length)])
    return {"n": args.n, "word": str(w), "seed": seed}


# -- pretty renderers

def _pretty(command: str, out: dict) -> str:
    if command == "nf":
        base = "D" if out["kind"] == "classical" else "d"
        body = "".join(f"({f if isinstance(f, str) else ' '.join(f)})" for f in out["factors"])
        return f"{base}^{out['p']} {body}".rstrip()
    if command == "burau":
        degs = [[_deg(BurauMatrix.from_json(out).entry_max_deg(i, j)) for j in range(len(out["entries"]))]
                for i in range(len(out["entries"]))]
        rows = "\n".join("  " + " ".join(f"{'-' if d is None else d:>4}" for d in row) for row in degs)
        return f"max degrees (M={out['max_deg']}, m={out['min_deg']}, e={out['exponent_sum']}):\n{rows}"
    if command == "check":
        return f"{out.get('criterion')}: {out.get('conclusion', '')} {json.dumps(out.get('witness', out))}"
    if command == "recover":
        return json.dumps({k: out[k] for k in ("recovered", "p", "factors", "reason") if k in out})
    if command == "random":
        return out["word"]
    return json.dumps(out)


def _emit(command: str, out: dict, pretty: bool) -> None:
    print(_pretty(command, out) if pretty else json.dumps(out), flush=True)


_HANDLERS = {
    "nf": handle_nf,
    "burau": handle_burau,
    "check": handle_check,
    "recover": handle_recover,
    "random": handle_random,
}


def _safe(handler: Callable, args: argparse.Namespace, text: str) -> tuple[bool, dict | tuple[str, str, int | None]]:
    try:
        return True, handler(args, text)
    except (BraidWordError, InputError, ValueError) as exc:
        return False, (type(exc).__name__, str(exc), getattr(exc, "position", None))


def _inputs(args: argparse.Namespace) -> Iterable[str]:
    if getattr(args, "input", None) is not None:
        return [args.input]
    return [line.strip() for line in sys.stdin if line.strip()]


def _run(command: str, args: argparse.Namespace) -> int:
    handler = _HANDLERS[command]
    if command == "random":
        texts: Iterable[str] = [str(k) for k in range(args.count)]
    else:
        texts = list(_inputs(args))
    work = partial(_safe, handler, args)
    if args.jobs > 1 and command != "random":
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(work, texts, chunksize=8))
    else:
        results = map(work, texts)
    status = EXIT_OK
    for k, (ok, out) in enumerate(results):
        if not ok:
            name, message, position = out
            payload = {"error": name, "message": message}
            if position is not None:
                payload["position"] = position
            if len(texts) > 1:
                payload["line"] = k + 1
            print(json.dumps(payload), file=sys.stderr, flush=True)
            status = EXIT_INPUT
            continue
        _emit(command, out, args.pretty)
        if (args.strict and status == EXIT_OK and out.get("conclusion") == criteria.INCONCLUSIVE):
            status = EXIT_INCONCLUSIVE
        if args.strict and status == EXIT_OK and out.get("recovered") is False:
            status = EXIT_INCONCLUSIVE
    return status


def _run_fixtures(args: argparse.Namespace) -> int:
    if not args.run:
        for fx in fixtures():
            _emit("fixtures", {"name": fx.name, "n": fx.n, "word": str(fx.word), "expected": fx.expected}, False)
        return EXIT_OK
    results = run_fixtures()
    for res in results:
        if args.pretty:
            print(f"{'PASS' if res.passed else 'FAIL'} {res.name}")
        else:
            _emit("fixtures", res.to_json(), False)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="garside-burau", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, help="number of strands")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--strict", action="store_true", help="exit 1 on inconclusive results")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch input")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="Garside normal form of a braid word")
    p.add_argument("input", nargs="?", help="braid word, e.g. 's1 s2^-1 a1,3 d^2'")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--classical", action="store_true")
    kind.add_argument("--dual", action="store_true", help="default")

    p = sub.add_parser("burau", parents=[common], help="reduced Burau matrix")
    p.add_argument("input", nargs="?")

    p = sub.add_parser("check", parents=[common], help="non-vanishing and degree checks")
    p.add_argument("input", nargs="?")
    p.add_argument("--criterion", choices=sorted(_CRITERIA), default="kernel-exclusion")

    p = sub.add_parser("recover", parents=[common], help="dual normal form from a Burau matrix")
    p.add_argument("input", nargs="?", help="matrix JSON, or a braid word with --via-burau")
    p.add_argument("--via-burau", action="store_true", help="input is a word; recover from its matrix")
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("random", parents=[common], help="random braid word")
    p.add_argument("--length", type=int, default=10, help="letters, or factors with --simply-nested")
    p.add_argument("--seed", type=int, default=None, help=f"defaults to ${SEED_ENV} when set")
    p.add_argument("--simply-nested", action="store_true")
    p.add_argument("--count", type=int, default=1)

    p = sub.add_parser("fixtures", parents=[common], help="list or replay the built-in fixtures")
    p.add_argument("--run", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "fixtures":
        return _run_fixtures(args)
    return _run(args.command, args)


if __name__ == "__main__":
    sys.exit(main())
