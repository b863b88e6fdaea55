# terms/unification.py
"""
Matching, most general unification and variant checks.

mgu works on a FIFO list of equations (decompose / eliminate / clash /
occurs). Every elimination is applied eagerly to the remaining equations and
to the solved bindings, so the answer is in solved form, idempotent, and the
same problem always yields the same substitution.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Union

from terms.core import (
    Application,
    Renaming,
    Rule,
    Substitution,
    Term,
    Variable,
    apply,
    rebuild,
    variables,
)


class FailureReason(str, Enum):
    CLASH = "clash"
    OCCURS_CHECK = "occurs-check"


@dataclass(frozen=True)
class Success:
    theta: Substitution

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Failure:
    reason: FailureReason
    left: Term
    right: Term

    def __bool__(self):
        return False

    def __str__(self):
        if self.reason is FailureReason.OCCURS_CHECK:
            return f"{self.left} occurs in {self.right}"
        return f"cannot unify {self.left} with {self.right}"


UnifyOutcome = Union[Success, Failure]


# ---------------- MATCHING ----------------
def _match_pairs(pairs: Iterable[tuple]) -> Optional[dict]:
    """Raw bindings (identity bindings kept) solving pattern·θ = subject for every pair."""
    bindings = {}
    stack = list(pairs)
    stack.reverse()
    while stack:
        pattern, subject = stack.pop()
        if isinstance(pattern, Variable):
            bound = bindings.get(pattern)
            if bound is None:
                bindings[pattern] = subject
            elif bound != subject:
                return None
            continue
        if pattern.ground:
            if pattern != subject:
                return None
            continue
        if (
            not isinstance(subject, Application)
            or subject.symbol != pattern.symbol
            or len(subject.args) != len(pattern.args)
        ):
            return None
        stack.extend(reversed(list(zip(pattern.args, subject.args))))
    return bindings


def match_term(pattern: Term, subject: Term) -> Optional[Substitution]:
    """θ with pattern·θ = subject and Dom(θ) ⊆ Var(pattern), or None."""
    bindings = _match_pairs([(pattern, subject)])
    return None if bindings is None else Substitution(bindings)


def is_instance(subject: Term, pattern: Term) -> bool:
    return match_term(pattern, subject) is not None


# ---------------- UNIFICATION ----------------
def occurs(var: Variable, t: Term) -> bool:
    if t.ground:
        return False
    return var in variables(t)


def unify_all(equations: Iterable[tuple]) -> UnifyOutcome:
    solved = {}
    pending = deque(equations)
    while pending:
        lhs, rhs = pending.popleft()
        if lhs == rhs:
            continue
        if isinstance(lhs, Application) and isinstance(rhs, Application):
            if lhs.symbol != rhs.symbol or len(lhs.args) != len(rhs.args):
                return Failure(FailureReason.CLASH, lhs, rhs)
            pending.extend(zip(lhs.args, rhs.args))
            continue
        if not isinstance(lhs, Variable):
            lhs, rhs = rhs, lhs
        if occurs(lhs, rhs):
            return Failure(FailureReason.OCCURS_CHECK, lhs, rhs)
        binding = {lhs: rhs}
        pending = deque((apply(a, binding), apply(b, binding)) for a, b in pending)
        for var in solved:
            solved[var] = apply(solved[var], binding)
        solved[lhs] = rhs
    return Success(Substitution(solved))


def mgu(s: Term, t: Term) -> UnifyOutcome:
    return unify_all([(s, t)])


# ---------------- VARIANTS ----------------
def variant_of(rule: Rule, other: Rule) -> Optional[Renaming]:
    """
    γ with rule = other·γ on both sides, as a permutation of the variables it
    touches; None when rule is not a variant of other.
    """
    bindings = _match_pairs([(other.lhs, rule.lhs), (other.rhs, rule.rhs)])
    if bindings is None:
        return None
    images = list(bindings.values())
    if not all(isinstance(v, Variable) for v in images) or len(set(images)) != len(images):
        return None
    domain = set(bindings)
    # images outside the domain map back onto the domain variables left uncovered
    spare_images = sorted(set(images) - domain)
    uncovered = sorted(domain - set(images))
    permutation = dict(bindings)
    permutation.update(zip(spare_images, uncovered))
    return Renaming(permutation)


def canonical(t: Term) -> Term:
    """t with its variables renamed _0, _1, ... in first-occurrence order."""
    names = {var: Variable(f"_{k}") for k, var in enumerate(variables(t))}
    if not names:
        return t
    return rebuild(t, lambda node: node if node.ground else names.get(node) if isinstance(node, Variable) else None)


def variant_terms(a: Term, b: Term) -> bool:
    """Equality modulo renaming."""
    if a.size != b.size:
        return False
    return canonical(a) == canonical(b)
