# analysis/recurrence.py
"""
Syntactic detection of recurrent pairs.

A recurrent pair (r1, r2) over a binary symbol f, a ground context c and a
ground term s has the shape

    r1 = ( f(x, c[y]),  f(c^n1[x], y) )                 x ≠ y
    r2 = ( f(x, s),     f(c^n2[t], c^n3[x]) )           t ∈ {x, s}

Each rule is matched on its own, modulo renaming; c and s must be
syntactically identical across the two rules.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from terms.core import (
    HOLE,
    Application,
    Rule,
    Term,
    Variable,
    app,
    is_context,
    is_hole,
    rebuild,
    tower,
    variables,
)
from terms.unification import variant_of

_LOGGER = logging.getLogger(__name__)


class TKind(str, Enum):
    IS_X = "x"
    IS_S = "s"


class Growth(str, Enum):
    STRICT = "strict"
    MONOTONE = "monotone"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class R1Match:
    x: Variable
    y: Variable
    c: Term
    n1: int


@dataclass(frozen=True)
class R2Match:
    x: Variable
    s: Term
    t_kind: TKind
    n2: int
    n3: int


@dataclass(frozen=True)
class RecurrentPair:
    r1: Rule
    r2: Rule
    f: str
    c: Term
    s: Term
    t_kind: TKind
    n1: int
    n2: int
    n3: int
    r1_index: int = 0
    r2_index: int = 0
    notes: tuple = field(default=())

    @property
    def key(self) -> tuple:
        return (self.r1_index, self.r2_index)

    @property
    def parameters(self) -> tuple:
        return (self.n1, self.n2, self.n3)

    def template_rules(self) -> tuple:
        x, y = Variable("x"), Variable("y")
        return (
            build_r1(self.f, self.c, self.n1, x, y),
            build_r2(self.f, self.c, self.s, self.t_kind, self.n2, self.n3, x),
        )


# ---------------- TEMPLATES ----------------
def build_r1(f: str, c: Term, n1: int, x: Variable, y: Variable) -> Rule:
    return Rule(app(f, x, tower(c, 1, y)), app(f, tower(c, n1, x), y))


def build_r2(f: str, c: Term, s: Term, t_kind: TKind, n2: int, n3: int, x: Variable) -> Rule:
    t = x if t_kind is TKind.IS_X else s
    return Rule(app(f, x, s), app(f, tower(c, n2, t), tower(c, n3, x)))


# ---------------- DECOMPOSITION ----------------
def abstract_context(t: Term, y: Variable) -> Optional[Term]:
    """t with every occurrence of y replaced by □, when Var(t) = {y}."""
    if variables(t) != (y,):
        return None
    return rebuild(t, lambda node: node if node.ground else HOLE if node == y else None)


def _unplug(c: Term, u: Term) -> Optional[Term]:
    """w with c[w] = u, every hole of c covering the same w; or None."""
    filler = None
    stack = [(c, u)]
    while stack:
        pattern, subject = stack.pop()
        if is_hole(pattern):
            if filler is None:
                filler = subject
            elif filler != subject:
                return None
            continue
        if not pattern.holes:
            if pattern != subject:
                return None
            continue
        if (
            not isinstance(subject, Application)
            or subject.symbol != pattern.symbol
            or len(subject.args) != len(pattern.args)
        ):
            return None
        stack.extend(zip(pattern.args, subject.args))
    return filler


def peel(c: Term, u: Term) -> list:
    """
    Every (n, w) with u = cⁿ[w], ordered by descending n; (0, u) is always
    last.
    """
    if is_hole(c):
        raise ValueError("cannot peel the empty context □")
    if not is_context(c):
        raise ValueError(f"{c} is not a context")
    splits = [(0, u)]
    current = u
    while True:
        inner = _unplug(c, current)
        if inner is None:
            break
        splits.append((splits[-1][0] + 1, inner))
        current = inner
    splits.reverse()
    return splits


def _binary(t: Term) -> bool:
    return isinstance(t, Application) and len(t.args) == 2


# ---------------- TEMPLATE MATCHING ----------------
def match_r1(rule: Rule) -> list:
    lhs, rhs = rule.lhs, rule.rhs
    if not (_binary(lhs) and _binary(rhs)) or lhs.symbol != rhs.symbol:
        return []
    x, y = lhs.args[0], rhs.args[1]
    if not isinstance(x, Variable) or not isinstance(y, Variable) or x == y:
        return []
    c = abstract_context(lhs.args[1], y)
    if c is None or is_hole(c):
        return []
    return [R1Match(x, y, c, n1) for n1, residual in peel(c, rhs.args[0]) if residual == x]


def match_r2(rule: Rule, c: Term) -> list:
    lhs, rhs = rule.lhs, rule.rhs
    if not (_binary(lhs) and _binary(rhs)) or lhs.symbol != rhs.symbol:
        return []
    x, s = lhs.args
    if not isinstance(x, Variable) or not s.ground or s.holes:
        return []
    matches = []
    for n3, inner in peel(c, rhs.args[1]):
        if inner != x:
            continue
        for n2, residual in peel(c, rhs.args[0]):
            if residual == x:
                matches.append(R2Match(x, s, TKind.IS_X, n2, n3))
            elif residual == s:
                matches.append(R2Match(x, s, TKind.IS_S, n2, n3))
    return matches


def reconstructs(pair: RecurrentPair) -> bool:
    """Rebuilding both rules from the pair's parameters gives the program's rules modulo renaming."""
    t1, t2 = pair.template_rules()
    return variant_of(pair.r1, t1) is not None and variant_of(pair.r2, t2) is not None


def detect(program: Sequence[Rule]) -> list:
    """
    All recurrent pairs of a program, scanning P² (diagonal included) in
    program order, with every parameterization each pair admits.
    """
    pairs = []
    for i, r1 in enumerate(program):
        for m1 in match_r1(r1):
            f = r1.lhs.symbol
            for j, r2 in enumerate(program):
                if not isinstance(r2.lhs, Application) or r2.lhs.symbol != f:
                    continue
                for m2 in match_r2(r2, m1.c):
                    notes = ("n1=0",) if m1.n1 == 0 else ()
                    pair = RecurrentPair(
                        r1, r2, f, m1.c, m2.s, m2.t_kind, m1.n1, m2.n2, m2.n3,
                        r1_index=i, r2_index=j, notes=notes,
                    )
                    if not reconstructs(pair):
                        _LOGGER.warning("discarding pair (%d, %d): template reconstruction failed", i, j)
                        continue
                    _LOGGER.debug(
                        "recurrent pair (%d, %d): c=%s s=%s t=%s n=%s",
                        i, j, pair.c, pair.s, pair.t_kind.value, pair.parameters,
                    )
                    pairs.append(pair)
    return pairs


def growth(pair: RecurrentPair) -> Growth:
    """How the second tower of the witness terms evolves along the chain."""
    if pair.n1 >= 1 and pair.n2 + pair.n3 >= 1:
        if pair.n3 >= 1 or pair.t_kind is TKind.IS_X:
            return Growth.STRICT
        return Growth.MONOTONE
    return Growth.UNKNOWN
