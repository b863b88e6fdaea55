# tests/test_loader.py
import pytest

from config.config import SAMPLE_PROGRAM_DIR
from data.loader import (
    ParseError,
    ProgramFile,
    format_program,
    format_term,
    load_program,
    parse_program,
    parse_term,
)
from engine.ars import Mode
from helpers import BINCHAIN_TRS, S_CTX, X, Y, ZERO, random_term, s
from terms.core import Rule, Variable, app, tower


def test_parse_binchain_program():
    pf = parse_program(BINCHAIN_TRS)
    assert pf.variables == ("x", "y")
    assert pf.rules == (
        Rule(app("f", X, s(Y)), app("f", s(X, 2), Y)),
        Rule(app("f", X, ZERO), app("f", s(ZERO), X)),
    )
    assert pf.lines == (2, 3)
    assert pf.mode is None
    assert pf.arities == {"f": 2, "s": 1, "0": 0}


def test_parse_small_programs():
    (rule,) = parse_program("(VAR x)\nf(x) -> s(x)").rules
    assert rule == Rule(app("f", X), app("s", X))
    (loop,) = parse_program("(VAR)\n0 -> 0").rules
    assert loop == Rule(ZERO, ZERO)
    assert loop.is_ground


def test_comments_blank_lines_and_mode_header():
    text = "# header comment\n\n(VAR x y)\n(MODE LP)\nf(x,0) -> f(x,s(x))   # r2\n"
    pf = parse_program(text)
    assert pf.mode is Mode.LP
    assert pf.lines == (5,)


def test_undeclared_identifiers_are_constants():
    (rule,) = parse_program("f(x) -> x").rules
    assert rule.lhs == app("f", app("x"))
    assert rule.is_ground


def test_parse_term():
    assert parse_term("f(s(0),0)") == app("f", s(ZERO), ZERO)
    assert parse_term("x", ["x"]) == Variable("x")
    assert parse_term("f(g(x,x))", ["x"]) == app("f", app("g", X, X))
    assert parse_term("  f( s(0) , 0 )  ") == app("f", s(ZERO), ZERO)


def test_deep_terms_parse_without_recursion():
    depth = 50_000
    text = "s(" * depth + "0" + ")" * depth
    assert parse_term(text) == tower(S_CTX, depth, ZERO)


@pytest.mark.parametrize(
    "text, line, column, fragment",
    [
        ("(VAR x)\nf(x) -> f(x,x)", 2, 9, "arity"),
        ("(VAR x)\nf([]) -> x", 2, 3, "hole"),
        ("(VAR x)\nf(□) -> x", 2, 3, "hole"),
        ("(VAR x)\nf(x -> x", 2, 4, "unbalanced"),
        ("(VAR x)\nf(x)) -> x", 2, 5, "unbalanced"),
        ("(VAR x)\nf(x) x", 2, 1, "->"),
        ("(VAR x)\nf(x) -> x -> x", 2, 11, "->"),
        ("(VAR x)\n -> x", 2, 2, "missing side"),
        ("(VAR x)\nx(0) -> 0", 2, 1, "cannot take arguments"),
        ("f(x) -> x\n(VAR x)", 2, 1, "precede"),
        ("(MODE fast)\nf(0) -> 0", 1, 2, "MODE"),
        ("(VAR x)\nf(x) -> x;", 2, 10, "unexpected character"),
    ],
)
def test_parse_errors_carry_positions(text, line, column, fragment):
    with pytest.raises(ParseError) as caught:
        parse_program(text, source="bad.trs")
    error = caught.value
    assert (error.line, error.column) == (line, column)
    assert fragment in error.message
    assert str(error).startswith(f"bad.trs: line {line}, column {column}")


@pytest.mark.parametrize("text", ["", "# only a comment\n", "(VAR x y)\n"])
def test_empty_rule_sets_are_rejected(text):
    with pytest.raises(ParseError, match="no rules"):
        parse_program(text)


def test_format_term_prints_holes_as_brackets():
    assert format_term(app("k", S_CTX, ZERO)) == "k(s([]),0)"


def test_format_parse_format_is_a_fixed_point(rng):
    for _ in range(100):
        rules = [Rule(random_term(rng, 3), random_term(rng, 3)) for _ in range(rng.randint(1, 4))]
        pf = ProgramFile.from_rules(rules, mode=rng.choice([None, Mode.TRS, Mode.LP]))
        text = format_program(pf)
        reparsed = parse_program(text)
        assert reparsed.rules == pf.rules
        assert format_program(reparsed) == text


def test_sample_programs_load():
    names = sorted(p.name for p in SAMPLE_PROGRAM_DIR.glob("*.trs"))
    assert names == ["binchain_lp.trs", "binchain_trs.trs", "prel.trs", "terminating.trs"]
    for path in SAMPLE_PROGRAM_DIR.glob("*.trs"):
        pf = load_program(path)
        assert pf.source == str(path)
        assert pf.rules
    assert all(load_program(path).mode is None for path in SAMPLE_PROGRAM_DIR.glob("*.trs"))


def test_missing_file_raises_os_error(tmp_path):
    with pytest.raises(OSError):
        load_program(tmp_path / "nope.trs")
