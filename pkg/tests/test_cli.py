import io
import json

import pytest

from garside_burau.burau import rho
from garside_burau.cli import main
from garside_burau.words import parse


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_nf_dual_and_classical(capsys):
    code, out, _ = run(capsys, ["nf", "-n", "4", "a3,4 a2,4"])
    assert code == 0
    data = json.loads(out)
    assert data["p"] == 0 and data["factors"] == [["a3,4"], ["a2,4"]]
    code, out, _ = run(capsys, ["nf", "-n", "3", "--classical", "--pretty", "s1^-1"])
    assert out.strip() == "D^-1 (s1 s2)"


def test_burau_reports_degrees(capsys):
    code, out, _ = run(capsys, ["burau", "-n", "4", "D"])
    data = json.loads(out)
    assert code == 0
    assert (data["max_deg"], data["min_deg"], data["exponent_sum"]) == (3, 1, 6)
    assert data["row_max"] == [3, 2, 1]


def test_check_and_strict_exit(capsys):
    code, out, _ = run(capsys, ["check", "-n", "4", "--criterion", "dual-b4", "a3,4 a2,4"])
    assert code == 0 and json.loads(out)["conclusion"] == "nonvanishing_guaranteed"
    code, _, _ = run(capsys, ["check", "-n", "4", "--strict", "--criterion", "classical-b4", "s2 s1 s3 s1"])
    assert code == 1


def test_wrong_strand_count_is_input_error(capsys):
    code, _, err = run(capsys, ["check", "-n", "5", "--criterion", "classical-b4", "s1"])
    assert code == 2 and json.loads(err)["error"] == "InputError"


def test_syntax_error_has_position(capsys):
    code, _, err = run(capsys, ["nf", "-n", "4", "s1 s9"])
    assert code == 2
    assert json.loads(err)["position"] == 3


def test_recover_from_matrix_json(capsys):
    m = rho(parse("a3,4 a2,4", 4))
    code, out, _ = run(capsys, ["recover", "--trace", json.dumps(m.to_json())])
    data = json.loads(out)
    assert code == 0 and data["recovered"] and data["factors"] == [["a3,4"], ["a2,4"]]
    assert len(data["trace"]["steps"]) == 2


def test_batch_from_stdin_keeps_order(capsys, monkeypatch):
    code, out, err = run(capsys, ["nf", "-n", "3", "--jobs", "2"], stdin="s1\ns2 s2\nbad\ns1 s2\n",
                         monkeypatch=monkeypatch)
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 2 and len(lines) == 3
    assert json.loads(err)["line"] == 3


def test_random_is_reproducible(capsys, monkeypatch):
    _, a, _ = run(capsys, ["random", "-n", "5", "--seed", "4", "--count", "3"])
    monkeypatch.setenv("GARSIDE_BURAU_SEED", "4")
    _, b, _ = run(capsys, ["random", "-n", "5", "--count", "3"])
    assert a == b and len(a.splitlines()) == 3


def test_random_simply_nested(capsys):
    _, out, _ = run(capsys, ["random", "-n", "4", "--seed", "1", "--simply-nested", "--length", "5"])
    w = json.loads(out)["word"]
    code, out, _ = run(capsys, ["recover", "-n", "4", "--via-burau", w])
    assert json.loads(out)["recovered"]


@pytest.mark.slow
def test_fixtures_run(capsys):
    code, out, _ = run(capsys, ["fixtures", "--run", "--pretty"])
    assert code == 0
    assert out.count("PASS") == 6
