# data/report.py
import json
import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import pandas as pd

from analysis.chain import ChainWitness, verify_prefix
from analysis.recurrence import Growth, RecurrentPair, detect, growth
from config.config import DEFAULT_STEPS, MAX_TERM_SIZE
from data.loader import ProgramFile, format_rule, format_term
from engine.ars import Mode
from terms.core import FreshSupply, Term, Variable, is_hole

_LOGGER = logging.getLogger(__name__)


@dataclass
class CertificateReport:
    pair: RecurrentPair
    growth: Growth
    witnesses: dict = field(default_factory=dict)

    def verified_in(self, mode: Mode) -> Optional[bool]:
        witness = self.witnesses.get(mode)
        return None if witness is None else witness.verified

    @property
    def verified(self) -> bool:
        """Every requested mode verified its whole attempted prefix."""
        return bool(self.witnesses) and all(w.verified for w in self.witnesses.values())

    @property
    def truncated(self) -> bool:
        return any(w.truncated for w in self.witnesses.values())

    @property
    def primary(self) -> Optional[ChainWitness]:
        return next(iter(self.witnesses.values()), None)


@dataclass
class Report:
    program: ProgramFile
    modes: tuple
    steps: int
    max_term_size: int
    certificates: list = field(default_factory=list)
    timing: float = 0.0

    @property
    def verified(self) -> list:
        return [c for c in self.certificates if c.verified]


def resolve_modes(flag: Optional[str], pf: ProgramFile) -> tuple:
    """--mode trs|lp|both; without a flag the file's MODE hint, else both."""
    if flag is None:
        return (pf.mode,) if pf.mode is not None else (Mode.TRS, Mode.LP)
    if flag == "both":
        return (Mode.TRS, Mode.LP)
    return (Mode(flag),)


def build_report(
    pf: ProgramFile,
    modes: tuple = (Mode.TRS, Mode.LP),
    steps: int = DEFAULT_STEPS,
    max_term_size: int = MAX_TERM_SIZE,
    pair_key: Optional[tuple] = None,
) -> Report:
    """
    Detect recurrent pairs and verify a chain prefix of each, in every
    requested mode. `pair_key` = (r1_index, r2_index) keeps only that pair.
    """
    started = time.perf_counter()
    report = Report(pf, tuple(modes), steps, max_term_size)
    for pair in detect(pf.rules):
        if pair_key is not None and pair.key != tuple(pair_key):
            continue
        cert = CertificateReport(pair, growth(pair))
        for offset, mode in enumerate(report.modes):
            supply = FreshSupply().fork(offset, len(report.modes))
            cert.witnesses[mode] = verify_prefix(pair, steps, mode, max_term_size, supply)
        report.certificates.append(cert)
    report.timing = time.perf_counter() - started
    _LOGGER.info(
        "%d certificate(s), %d verified, in %.3fs",
        len(report.certificates), len(report.verified), report.timing,
    )
    return report


# ---------------- DISPLAY ----------------
def format_compact(t: Term) -> str:
    """Like format_term, with unary towers abbreviated: s(s(s(0))) -> s^3(0)."""
    parts = []
    stack = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif isinstance(item, Variable):
            parts.append(item.name)
        elif is_hole(item):
            parts.append("[]")
        elif not item.args:
            parts.append(item.symbol)
        elif len(item.args) == 1:
            height, inner = 1, item.args[0]
            while getattr(inner, "symbol", None) == item.symbol and len(inner.args) == 1:
                height, inner = height + 1, inner.args[0]
            parts.append(f"{item.symbol}^{height}(" if height > 1 else f"{item.symbol}(")
            stack.append(")")
            stack.append(inner)
        else:
            parts.append(item.symbol + "(")
            stack.append(")")
            for index in range(len(item.args) - 1, -1, -1):
                stack.append(item.args[index])
                if index:
                    stack.append(",")
    return "".join(parts)


def certificates_frame(report: Report) -> pd.DataFrame:
    rows = []
    for cert in report.certificates:
        pair = cert.pair
        rows.append({
            "Pair": f"{pair.r1_index},{pair.r2_index}",
            "r1": format_rule(pair.r1),
            "r2": format_rule(pair.r2),
            "f": pair.f,
            "c": format_term(pair.c),
            "s": format_term(pair.s),
            "t": pair.t_kind.value,
            "n1": pair.n1,
            "n2": pair.n2,
            "n3": pair.n3,
            "Growth": cert.growth.value,
            "TRS": cert.verified_in(Mode.TRS),
            "LP": cert.verified_in(Mode.LP),
            "Notes": ", ".join(pair.notes),
        })
    columns = ["Pair", "r1", "r2", "f", "c", "s", "t", "n1", "n2", "n3", "Growth", "TRS", "LP", "Notes"]
    return pd.DataFrame(rows, columns=columns)


def witness_frame(witness: ChainWitness) -> pd.DataFrame:
    rows = []
    for entry in witness.entries:
        rows.append({
            "n": entry.n,
            "Π": str(entry.pi),
            "Π′": str(entry.pi_prime),
            "a_n": format_compact(entry.term) if entry.term is not None else "",
            "after r1": format_compact(entry.pivot) if entry.pivot is not None else "",
            "Verified": entry.verified if entry.attempted else None,
        })
    return pd.DataFrame(rows, columns=["n", "Π", "Π′", "a_n", "after r1", "Verified"])


def heights_frame(witness: ChainWitness) -> pd.DataFrame:
    """Long format (n, tower, height) for charting; heights as floats for plotting."""
    rows = []
    for entry in witness.entries:
        rows.append({"n": entry.n, "Tower": "Π (first argument)", "Height": float(entry.pi)})
        rows.append({"n": entry.n, "Tower": "Π′ (second argument)", "Height": float(entry.pi_prime)})
    return pd.DataFrame(rows, columns=["n", "Tower", "Height"])


def rewrite_frame(traces: list) -> pd.DataFrame:
    rows = [
        {"Step": trace.depth, "Rule": trace.rule_index, "Term": format_compact(trace.result)}
        for trace in traces
    ]
    return pd.DataFrame(rows, columns=["Step", "Rule", "Term"])


# ---------------- JSON ----------------
def report_to_dict(report: Report, include_timing: bool = True) -> dict:
    certificates = []
    for cert in report.certificates:
        pair = cert.pair
        witness = []
        primary = cert.primary
        for entry in primary.entries if primary is not None else []:
            item = {"n": entry.n, "pi": entry.pi, "pi_prime": entry.pi_prime}
            if entry.term is not None:
                item["term"] = format_term(entry.term)
            witness.append(item)
        certificates.append({
            "r1_index": pair.r1_index,
            "r2_index": pair.r2_index,
            "f": pair.f,
            "c": format_term(pair.c),
            "s": format_term(pair.s),
            "t": pair.t_kind.value,
            "n1": pair.n1,
            "n2": pair.n2,
            "n3": pair.n3,
            "verified_trs": cert.verified_in(Mode.TRS),
            "verified_lp": cert.verified_in(Mode.LP),
            "truncated": cert.truncated,
            "growth": cert.growth.value,
            "notes": list(pair.notes),
            "witness": witness,
        })
    payload = {
        "source": report.program.source,
        "modes": [mode.value for mode in report.modes],
        "steps": report.steps,
        "max_term_size": report.max_term_size,
        "certificates": certificates,
    }
    if include_timing:
        payload["timing"] = round(report.timing, 6)
    return payload


def report_to_json(report: Report, include_timing: bool = True) -> str:
    return json.dumps(report_to_dict(report, include_timing), indent=2, ensure_ascii=False)
