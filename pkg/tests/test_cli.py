# tests/test_cli.py
import json

import pytest

from cli import main
from config.config import SAMPLE_PROGRAM_DIR
from helpers import BINCHAIN_TRS, PREL, TERMINATING


@pytest.mark.parametrize(
    "name, parameters, t_kind",
    [("binchain_trs.trs", (2, 1, 0), "s"), ("binchain_lp.trs", (1, 0, 1), "x")],
)
def test_detect_samples(name, parameters, t_kind, capsys):
    path = str(SAMPLE_PROGRAM_DIR / name)
    assert main(["detect", path]) == 0
    assert "1/1 verified" in capsys.readouterr().out

    assert main(["detect", path, "--json"]) == 0
    (cert,) = json.loads(capsys.readouterr().out)["certificates"]
    assert (cert["n1"], cert["n2"], cert["n3"]) == parameters
    assert cert["t"] == t_kind
    assert cert["verified_trs"] is True
    assert cert["verified_lp"] is True


def test_detect_without_pairs(program_file, capsys):
    assert main(["detect", str(program_file(TERMINATING))]) == 1
    assert "no recurrent pair found" in capsys.readouterr().out


def test_detect_json(program_file, capsys):
    assert main(["detect", str(program_file(BINCHAIN_TRS)), "--mode", "lp", "--json", "--steps", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["modes"] == ["lp"]
    (cert,) = payload["certificates"]
    assert cert["verified_lp"] is True
    assert cert["verified_trs"] is None
    assert len(cert["witness"]) == 3


def test_detect_reports_partial_verification(program_file, capsys):
    path = program_file(BINCHAIN_TRS)
    assert main(["detect", str(path), "--mode", "trs", "--max-term-size", "50"]) == 0
    assert "partial verification: size bound 50" in capsys.readouterr().out


def test_size_bound_before_the_first_segment_is_not_a_verification(program_file, capsys):
    assert main(["detect", str(program_file(BINCHAIN_TRS)), "--max-term-size", "1"]) == 1
    out = capsys.readouterr().out
    assert "0/1 verified" in out
    assert "NOT CHECKED" in out
    assert "partial verification" not in out


@pytest.mark.parametrize(
    "text",
    ["(VAR x)\n", "(VAR x)\nf(x) -> f(x,x)\n"],
)
def test_bad_programs_exit_with_input_error(program_file, text, capsys):
    assert main(["detect", str(program_file(text))]) == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_missing_file(tmp_path, capsys):
    assert main(["detect", str(tmp_path / "missing.trs")]) == 2
    assert "error: " in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["detect"],
        ["detect", "x.trs", "--mode", "prolog"],
        ["detect", "x.trs", "--steps", "-1"],
        ["witness", "x.trs"],
        ["witness", "x.trs", "--pair", "0"],
        ["rewrite", "x.trs", "--term", "f(0)"],
    ],
)
def test_bad_arguments(argv, capsys):
    assert main(argv) == 2


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "detect" in capsys.readouterr().out


def test_witness(program_file, capsys):
    path = str(program_file(BINCHAIN_TRS))
    assert main(["witness", path, "--pair", "0,1", "--steps", "4"]) == 0
    out = capsys.readouterr().out
    assert "pair 0,1 [trs] verified" in out
    assert "pair 0,1 [lp] verified" in out
    assert main(["witness", path, "--pair", "1,0"]) == 1


def test_rewrite(program_file, capsys):
    path = str(program_file(PREL))
    assert main(["rewrite", path, "--term", "f(g(x,x))", "--rule", "1", "--mode", "lp"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "f(g(x,x))"
    assert "~> f(0)" in out
    assert "[rule 1: f(g(x,0)) -> f(x)]" in out

    # instantiation leaves the term alone
    assert main(["rewrite", path, "--term", "f(g(x,x))", "--rule", "1", "--mode", "trs"]) == 1
    assert "irreducible at the root" in capsys.readouterr().out

    assert main(["rewrite", path, "--term", "s(0)", "--mode", "lp"]) == 1


def test_rewrite_input_errors(program_file, capsys):
    path = str(program_file(PREL))
    assert main(["rewrite", path, "--term", "f(g(x,x))", "--rule", "7", "--mode", "lp"]) == 2
    assert "out of range" in capsys.readouterr().err
    assert main(["rewrite", path, "--term", "f(x,x)", "--mode", "lp"]) == 2
    assert "arity" in capsys.readouterr().err
