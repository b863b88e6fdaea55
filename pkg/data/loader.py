# data/loader.py
"""
Concrete syntax for programs and terms.

    # comment
    (VAR x y)            optional, declares the variables
    (MODE lp)            optional mode hint: trs or lp
    f(x,s(y)) -> f(s(s(x)),y)

One rule per line. Identifiers are [A-Za-z0-9_']+; declared names are
variables, everything else is a function symbol whose arity is fixed by its
first occurrence. Constants are written without parentheses. The hole is
not part of the input language.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from engine.ars import Mode
from terms.core import HOLE_SYMBOL, Application, Rule, Term, Variable, format_plain, subterms

_LOGGER = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(?P<arrow>->)|(?P<ident>[A-Za-z0-9_']+)|(?P<punct>[(),]))")


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str, source: Optional[str] = None):
        self.line = line
        self.column = column
        self.message = message
        self.source = source
        where = f"{source}: " if source else ""
        super().__init__(f"{where}line {line}, column {column}: {message}")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


@dataclass
class ProgramFile:
    variables: tuple = ()
    rules: tuple = ()
    lines: tuple = ()
    mode: Optional[Mode] = None
    arities: dict = field(default_factory=dict)
    source: Optional[str] = None

    @property
    def program(self) -> tuple:
        return self.rules

    @classmethod
    def from_rules(cls, rules: Iterable[Rule], mode: Optional[Mode] = None) -> "ProgramFile":
        rules = tuple(rules)
        seen = {}
        arities = {}
        for rule in rules:
            seen.update(dict.fromkeys(rule.variables))
            for side in (rule.lhs, rule.rhs):
                for node in subterms(side):
                    if isinstance(node, Application):
                        arities.setdefault(node.symbol, len(node.args))
        return cls(
            variables=tuple(v.name for v in seen),
            rules=rules,
            lines=tuple(range(1, len(rules) + 1)),
            mode=mode,
            arities=arities,
        )


# ---------------- TOKENS ----------------
def _tokenize(text: str, line: int, source: Optional[str]) -> list:
    for marker in (HOLE_SYMBOL, "[]"):
        at = text.find(marker)
        if at >= 0:
            raise ParseError(line, at + 1, "the hole symbol is reserved and cannot appear in programs", source)
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            column = pos + len(stripped[pos:]) - len(stripped[pos:].lstrip()) + 1
            raise ParseError(line, column, f"unexpected character {stripped[column - 1]!r}", source)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens


# ---------------- TERMS ----------------
class _TermReader:
    def __init__(self, tokens, line, variables, arities, source):
        self.tokens = tokens
        self.pos = 0
        self.line = line
        self.variables = variables
        self.arities = arities
        self.source = source

    def error(self, column: int, message: str) -> ParseError:
        return ParseError(self.line, column, message, self.source)

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def end_column(self) -> int:
        if not self.tokens:
            return 1
        last = self.tokens[-1]
        return last.column + len(last.text)

    def build(self, token: _Token, args: list) -> Term:
        name = token.text
        expected = self.arities.get(name)
        if expected is not None and expected != len(args):
            raise self.error(token.column, f"symbol {name} used with arity {len(args)}, earlier with arity {expected}")
        self.arities[name] = len(args)
        return Application(name, args)

    def term(self) -> Term:
        frames = []
        while True:
            token = self.peek()
            if token is None:
                raise self.error(self.end_column(), "unexpected end of line, expected a term")
            if token.kind != "ident":
                raise self.error(token.column, f"expected an identifier, found {token.text!r}")
            self.pos += 1
            following = self.peek()
            if following is not None and following.text == "(":
                if token.text in self.variables:
                    raise self.error(token.column, f"variable {token.text} cannot take arguments")
                self.pos += 1
                frames.append((token, []))
                continue
            node = Variable(token.text) if token.text in self.variables else self.build(token, [])
            while True:
                if not frames:
                    return node
                head, args = frames[-1]
                args.append(node)
                token = self.peek()
                if token is None:
                    raise self.error(self.end_column(), f"unbalanced parentheses: {head.text}( is never closed")
                if token.text == ",":
                    self.pos += 1
                    break
                if token.text == ")":
                    self.pos += 1
                    frames.pop()
                    node = self.build(head, args)
                    continue
                raise self.error(token.column, f"expected ',' or ')', found {token.text!r}")

    def expect_end(self):
        token = self.peek()
        if token is None:
            return
        if token.text == ")":
            raise self.error(token.column, "unbalanced parentheses: unexpected ')'")
        raise self.error(token.column, f"unexpected {token.text!r} after the term")


def parse_term(
    text: str,
    variables: Iterable[str] = (),
    arities: Optional[dict] = None,
    line: int = 1,
    source: Optional[str] = None,
) -> Term:
    reader = _TermReader(_tokenize(text, line, source), line, frozenset(variables), dict(arities or {}), source)
    term = reader.term()
    reader.expect_end()
    return term


# ---------------- PROGRAMS ----------------
def _header(tokens: list, line: int, source: Optional[str]):
    """(KEYWORD arg ...) header lines; returns (keyword, args) or None."""
    if len(tokens) < 2 or tokens[0].text != "(" or tokens[1].text not in ("VAR", "MODE"):
        return None
    if tokens[-1].text != ")":
        raise ParseError(line, tokens[-1].column, "unbalanced parentheses: header is never closed", source)
    args = tokens[2:-1]
    for token in args:
        if token.kind != "ident":
            raise ParseError(line, token.column, f"unexpected {token.text!r} in header", source)
    return tokens[1].text, [t.text for t in args]


def parse_program(text: str, source: Optional[str] = None) -> ProgramFile:
    declared = []
    rules = []
    lines = []
    mode = None
    arities = {}
    last_line = 1
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        content = raw.split("#", 1)[0]
        tokens = _tokenize(content, number, source)
        if not tokens:
            continue
        header = _header(tokens, number, source)
        if header is not None:
            keyword, args = header
            if rules:
                raise ParseError(number, 1, f"({keyword} ...) must precede the rules", source)
            if keyword == "VAR":
                for name in args:
                    if name in arities:
                        raise ParseError(number, 1, f"{name} is already used as a function symbol", source)
                    if name not in declared:
                        declared.append(name)
            else:
                if len(args) != 1 or args[0].lower() not in ("trs", "lp"):
                    raise ParseError(number, tokens[1].column, "MODE takes exactly one of: trs, lp", source)
                mode = Mode(args[0].lower())
            continue
        arrows = [t for t in tokens if t.kind == "arrow"]
        if len(arrows) != 1:
            column = arrows[1].column if len(arrows) > 1 else 1
            raise ParseError(number, column, "a rule needs exactly one '->'", source)
        split = tokens.index(arrows[0])
        sides = []
        for part in (tokens[:split], tokens[split + 1:]):
            reader = _TermReader(part, number, frozenset(declared), arities, source)
            if not part:
                raise reader.error(arrows[0].column, "missing side of the rule")
            sides.append(reader.term())
            reader.expect_end()
        rules.append(Rule(*sides))
        lines.append(number)
    if not rules:
        raise ParseError(last_line, 1, "program has no rules", source)
    _LOGGER.debug("parsed %d rules over %d variables from %s", len(rules), len(declared), source or "<text>")
    return ProgramFile(tuple(declared), tuple(rules), tuple(lines), mode, arities, source)


def load_program(path) -> ProgramFile:
    path = Path(path)
    return parse_program(path.read_text(encoding="utf-8"), source=str(path))


# ---------------- FORMATTING ----------------
def format_term(t: Term) -> str:
    """Canonical text; holes print as []."""
    return format_plain(t, hole="[]")


def format_rule(rule: Rule) -> str:
    return f"{format_term(rule.lhs)} -> {format_term(rule.rhs)}"


def format_program(pf: ProgramFile) -> str:
    lines = []
    if pf.variables:
        lines.append("(VAR " + " ".join(pf.variables) + ")")
    if pf.mode is not None:
        lines.append(f"(MODE {pf.mode.value})")
    lines.extend(format_rule(rule) for rule in pf.rules)
    return "\n".join(lines) + "\n"

