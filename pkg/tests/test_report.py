# tests/test_report.py
import json

import pytest

from data.loader import parse_program
from data.report import (
    build_report,
    certificates_frame,
    format_compact,
    heights_frame,
    report_to_dict,
    report_to_json,
    resolve_modes,
    rewrite_frame,
    witness_frame,
)
from engine.ars import Mode, rewrite_sequence
from helpers import BINCHAIN_LP, X, ZERO, s
from terms.core import HOLE, app


def test_resolve_modes(binchain_trs):
    lp_file = parse_program("(MODE lp)\n" + BINCHAIN_LP)
    assert resolve_modes(None, binchain_trs) == (Mode.TRS, Mode.LP)
    assert resolve_modes(None, lp_file) == (Mode.LP,)
    assert resolve_modes("both", lp_file) == (Mode.TRS, Mode.LP)
    assert resolve_modes("trs", lp_file) == (Mode.TRS,)
    with pytest.raises(ValueError):
        resolve_modes("prolog", binchain_trs)


def test_build_report_verifies_both_modes(binchain_lp):
    report = build_report(binchain_lp, (Mode.TRS, Mode.LP), steps=6)
    (cert,) = report.certificates
    assert cert.verified_in(Mode.TRS) is True
    assert cert.verified_in(Mode.LP) is True
    assert cert.verified
    assert not cert.truncated
    assert report.verified == [cert]
    assert cert.primary is cert.witnesses[Mode.TRS]


def test_single_mode_leaves_the_other_unset(binchain_trs):
    (cert,) = build_report(binchain_trs, (Mode.LP,), steps=3).certificates
    assert cert.verified_in(Mode.TRS) is None
    assert cert.verified_in(Mode.LP) is True


def test_pair_selection(binchain_trs):
    assert len(build_report(binchain_trs, steps=2, pair_key=(0, 1)).certificates) == 1
    assert build_report(binchain_trs, steps=2, pair_key=(1, 0)).certificates == []


def test_report_without_pairs(terminating):
    report = build_report(terminating, steps=4)
    assert report.certificates == []
    assert report.verified == []
    assert certificates_frame(report).empty


def test_json_document(binchain_lp):
    report = build_report(binchain_lp, (Mode.TRS, Mode.LP), steps=4)
    payload = json.loads(report_to_json(report))
    assert payload["modes"] == ["trs", "lp"]
    assert payload["steps"] == 4
    assert "timing" in payload
    (cert,) = payload["certificates"]
    assert (cert["r1_index"], cert["r2_index"]) == (0, 1)
    assert cert["f"] == "f"
    assert cert["c"] == "s([])"
    assert cert["s"] == "0"
    assert cert["t"] == "x"
    assert (cert["n1"], cert["n2"], cert["n3"]) == (1, 0, 1)
    assert cert["verified_trs"] is True
    assert cert["verified_lp"] is True
    assert cert["truncated"] is False
    assert cert["growth"] == "strict"
    assert cert["notes"] == []
    assert cert["witness"][0] == {"n": 0, "pi": 0, "pi_prime": 1, "term": "f(0,s(0))"}
    assert [w["pi_prime"] for w in cert["witness"]] == [1, 2, 4, 8]


def test_json_is_deterministic_without_timing(binchain_trs):
    first = report_to_json(build_report(binchain_trs, steps=5), include_timing=False)
    second = report_to_json(build_report(binchain_trs, steps=5), include_timing=False)
    assert first == second
    assert "timing" not in json.loads(first)


def test_truncated_entries_omit_the_term(binchain_trs):
    report = build_report(binchain_trs, (Mode.TRS,), steps=8, max_term_size=50)
    (cert,) = report_to_dict(report)["certificates"]
    assert cert["truncated"] is True
    assert cert["verified_trs"] is True
    assert cert["verified_lp"] is None
    assert "term" in cert["witness"][4]
    assert "term" not in cert["witness"][5]
    assert cert["witness"][7]["pi_prime"] == 127


def test_format_compact():
    assert format_compact(s(ZERO, 3)) == "s^3(0)"
    assert format_compact(s(ZERO)) == "s(0)"
    assert format_compact(app("f", s(X, 2), ZERO)) == "f(s^2(x),0)"
    assert format_compact(app("k", s(HOLE), s(s(app("g", s(ZERO)))))) == "k(s([]),s^2(g(s(0))))"


def test_frames(binchain_trs):
    report = build_report(binchain_trs, (Mode.TRS, Mode.LP), steps=4)
    table = certificates_frame(report)
    assert list(table.columns) == [
        "Pair", "r1", "r2", "f", "c", "s", "t", "n1", "n2", "n3", "Growth", "TRS", "LP", "Notes",
    ]
    row = table.iloc[0]
    assert row["Pair"] == "0,1"
    assert row["r1"] == "f(x,s(y)) -> f(s(s(x)),y)"
    assert row["Growth"] == "monotone"

    witness = report.certificates[0].primary
    rows = witness_frame(witness)
    assert len(rows) == 4
    assert rows["a_n"].tolist()[:2] == ["f(s(0),0)", "f(s(0),s(0))"]
    assert rows["Verified"].tolist() == [True] * 4

    heights = heights_frame(witness)
    assert len(heights) == 8
    assert heights[heights["Tower"].str.startswith("Π′")]["Height"].tolist() == [0.0, 1.0, 3.0, 7.0]


def test_rewrite_frame(prel):
    traces = rewrite_sequence(Mode.LP, prel.rules, app("f", app("g", X, X)), steps=1, rule_index=1)
    frame = rewrite_frame(traces)
    assert frame.to_dict("records") == [{"Step": 1, "Rule": 1, "Term": "f(0)"}]
