# engine/ars.py
"""
Root rewriting with a single rule, in the two flavours of an abstract
reduction system over terms:

- TRS (→ᵣ): the term must be an instance of the left-hand side.
- LP  (⤳ᵣ): the term is unified with a variant of the rule renamed apart
  from it, and the unifier is applied to the right-hand side.

Rewriting happens at the root only.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

from terms.core import EMPTY, FreshSupply, Rule, Substitution, Term, apply, fresh_variant, variables
from terms.unification import canonical, match_term, mgu, variant_of, variant_terms

_LOGGER = logging.getLogger(__name__)


class Mode(str, Enum):
    TRS = "trs"
    LP = "lp"

    @property
    def arrow(self) -> str:
        return "->" if self is Mode.TRS else "~>"


@dataclass(frozen=True)
class StepTrace:
    start: Term
    rule_index: Optional[int]
    substitution: Substitution
    result: Term
    mode: Mode
    depth: int = 0
    # the rule as fired: the program rule for TRS, its renamed-apart variant for LP
    applied: Optional[Rule] = None

    def replay(self, program: Sequence[Rule]) -> bool:
        """True when applying the recorded substitution reproduces `result`."""
        if self.rule_index is None:
            return self.start == self.result
        rule = program[self.rule_index]
        applied = self.applied or rule
        theta = self.substitution
        if self.mode is Mode.TRS:
            return applied == rule and apply(rule.lhs, theta) == self.start and apply(rule.rhs, theta) == self.result
        return (
            variant_of(applied, rule) is not None
            and apply(applied.lhs, theta) == apply(self.start, theta)
            and apply(applied.rhs, theta) == self.result
        )


@dataclass
class ExploreResult:
    traces: list = field(default_factory=list)
    exhausted: bool = False

    @property
    def terms(self) -> list:
        return [trace.result for trace in self.traces]


# ---------------- SINGLE STEPS ----------------
def _fire(mode: Mode, rule: Rule, t: Term, supply: Optional[FreshSupply]):
    """(result, substitution, rule as fired) for one root step, or None."""
    if mode is Mode.TRS:
        theta = match_term(rule.lhs, t)
        if theta is None:
            return None
        return apply(rule.rhs, theta), theta, rule
    supply = supply or FreshSupply()
    renamed = fresh_variant(rule, variables(t), supply)
    outcome = mgu(t, renamed.lhs)
    if not outcome:
        return None
    return apply(renamed.rhs, outcome.theta), outcome.theta, renamed


def trs_step(rule: Rule, t: Term) -> Optional[Term]:
    fired = _fire(Mode.TRS, rule, t, None)
    return None if fired is None else fired[0]


def lp_step(rule: Rule, t: Term, supply: Optional[FreshSupply] = None) -> Optional[Term]:
    fired = _fire(Mode.LP, rule, t, supply)
    return None if fired is None else fired[0]


def step(mode: Mode, rule: Rule, t: Term, supply: Optional[FreshSupply] = None) -> Optional[Term]:
    if mode is Mode.TRS:
        return trs_step(rule, t)
    return lp_step(rule, t, supply)


def step_seq(mode: Mode, rules: Sequence[Rule], t: Term, supply: Optional[FreshSupply] = None) -> Optional[Term]:
    """⇒_ω for ω = (r₁, …, rₙ), applied left to right."""
    if not rules:
        raise ValueError("rule sequence must be non-empty")
    supply = supply or FreshSupply()
    current = t
    for rule in rules:
        current = step(mode, rule, current, supply)
        if current is None:
            return None
    return current


def iterate_rule(mode: Mode, rule: Rule, t: Term, n: int, supply: Optional[FreshSupply] = None) -> Optional[Term]:
    """⇒ⁿ_r, with ⇒⁰ the identity."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    supply = supply or FreshSupply()
    current = t
    for _ in range(n):
        current = step(mode, rule, current, supply)
        if current is None:
            return None
    return current


def iterate_seq(mode: Mode, rules: Sequence[Rule], t: Term, n: int, supply: Optional[FreshSupply] = None) -> Optional[Term]:
    """⇒ⁿ_ω."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    supply = supply or FreshSupply()
    current = t
    for _ in range(n):
        current = step_seq(mode, rules, current, supply)
        if current is None:
            return None
    return current


# ---------------- PROPERTIES ----------------
def check_stability(rule: Rule, theta: Substitution, mode: Mode, supply: Optional[FreshSupply] = None) -> bool:
    """
    uθ ⇒ᵣ vθ. Exact for TRS; modulo renaming for LP, where it is only
    guaranteed when Var(v) ⊆ Var(u).
    """
    start, expected = apply(rule.lhs, theta), apply(rule.rhs, theta)
    result = step(mode, rule, start, supply)
    if result is None:
        return False
    if mode is Mode.TRS:
        return result == expected
    return variant_terms(result, expected)


def check_binary_chain(
    mode: Mode,
    first: Sequence[Rule],
    second: Sequence[Rule],
    terms: Sequence[Term],
    counts: Sequence[int],
    supply: Optional[FreshSupply] = None,
) -> list:
    """
    Per-segment verdicts for a prefix of a (ω₁, ω₂)-binary chain:
    segment n holds when terms[n] (⇒^{counts[n]}_{ω₁} ∘ ⇒_{ω₂}) terms[n+1].
    """
    if len(counts) != len(terms) - 1:
        raise ValueError("need exactly one repetition count per segment")
    supply = supply or FreshSupply()
    verdicts = []
    for n, count in enumerate(counts):
        pivot = iterate_seq(mode, first, terms[n], count, supply)
        reached = None if pivot is None else step_seq(mode, second, pivot, supply)
        ok = reached is not None and (reached == terms[n + 1] or (mode is Mode.LP and variant_terms(reached, terms[n + 1])))
        verdicts.append(ok)
    return verdicts


# ---------------- PROGRAM-LEVEL ----------------
def successors(mode: Mode, program: Sequence[Rule], t: Term, supply: Optional[FreshSupply] = None, depth: int = 0) -> list:
    """One StepTrace per applicable rule, in program order."""
    supply = supply or FreshSupply()
    traces = []
    for index, rule in enumerate(program):
        fired = _fire(mode, rule, t, supply)
        if fired is not None:
            traces.append(StepTrace(t, index, fired[1], fired[0], mode, depth, fired[2]))
    return traces


def explore(
    mode: Mode,
    program: Sequence[Rule],
    t: Term,
    max_steps: int,
    supply: Optional[FreshSupply] = None,
) -> ExploreResult:
    """
    Breadth-first enumeration of root reductions from t. At most `max_steps`
    successor traces are recorded. A reduction to a term already reached
    (modulo renaming) is neither recorded nor expanded again. The first
    trace is the start term itself.
    """
    supply = supply or FreshSupply()
    result = ExploreResult([StepTrace(t, None, EMPTY, t, mode, 0)])
    seen = {canonical(t)}
    frontier = deque([(t, 0)])
    budget = max_steps
    while frontier:
        current, depth = frontier.popleft()
        for trace in successors(mode, program, current, supply, depth + 1):
            key = canonical(trace.result)
            if key in seen:
                continue
            if budget <= 0:
                result.exhausted = True
                _LOGGER.debug("explore budget of %d steps exhausted at depth %d", max_steps, depth)
                return result
            budget -= 1
            seen.add(key)
            result.traces.append(trace)
            frontier.append((trace.result, depth + 1))
    return result


def rewrite_sequence(
    mode: Mode,
    program: Sequence[Rule],
    t: Term,
    steps: int,
    rule_index: Optional[int] = None,
    supply: Optional[FreshSupply] = None,
) -> list:
    """
    Up to `steps` consecutive root steps from t: with the given rule, or with
    the first applicable rule in program order. Stops early at a normal form.
    """
    if rule_index is not None and not 0 <= rule_index < len(program):
        raise ValueError(f"rule index {rule_index} out of range (program has {len(program)} rules)")
    supply = supply or FreshSupply()
    candidates = [rule_index] if rule_index is not None else range(len(program))
    traces = []
    current = t
    for depth in range(1, steps + 1):
        for index in candidates:
            fired = _fire(mode, program[index], current, supply)
            if fired is not None:
                traces.append(StepTrace(current, index, fired[1], fired[0], mode, depth, fired[2]))
                current = fired[0]
                break
        else:
            break
    return traces
