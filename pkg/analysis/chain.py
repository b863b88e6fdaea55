# analysis/chain.py
"""
Tower heights along the binary chain of a recurrent pair, the witness terms
built from them, and executable checks of the chain by actual rewriting.

Heights follow the mutual recursion (all evaluated at i, default n1):

    Π₀ = n2                 Π′₀ = n3
    Πₙ₊₁ = Δₙ + n2          Π′ₙ₊₁ = Δ′ₙ + n3
    Δₙ = 0 (t = s), Δ′ₙ (t = x)
    Δ′ₙ = i·Π′ₙ + Πₙ

and the chain is aₙ (⇒^{Π′ₙ}_{r1} ∘ ⇒_{r2}) aₙ₊₁ with aₙ = f(c^{Πₙ}[s], c^{Π′ₙ}[s]).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from analysis.recurrence import RecurrentPair, TKind
from config.config import MAX_TERM_SIZE
from engine.ars import Mode, iterate_rule, step
from terms.core import FreshSupply, Term, app, tower, tower_size

_LOGGER = logging.getLogger(__name__)


class SizeGuardError(ValueError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"term would have more than {limit} nodes")
        self.size = size
        self.limit = limit


class ChainMismatchError(AssertionError):
    """Rewriting did not reach the term the recurrent pair predicts."""


@dataclass(frozen=True)
class PiPair:
    n: int
    pi: int
    pi_prime: int


@dataclass(frozen=True)
class WitnessEntry:
    n: int
    pi: int
    pi_prime: int
    term: Optional[Term] = None
    pivot: Optional[Term] = None
    attempted: bool = False
    verified: bool = False

    @property
    def r1_steps(self) -> int:
        return self.pi_prime


@dataclass
class ChainWitness:
    pair: RecurrentPair
    mode: Mode
    requested: int
    entries: list = field(default_factory=list)
    truncated: bool = False

    @property
    def attempted(self) -> list:
        return [e for e in self.entries if e.attempted]

    @property
    def verified(self) -> bool:
        """Every attempted segment verified, and at least one was attempted unless none was requested."""
        attempted = self.attempted
        if self.requested and not attempted:
            return False
        return all(e.verified for e in attempted)

    @property
    def largest_verified(self) -> int:
        """Largest n whose segment aₙ → aₙ₊₁ verified, with every earlier one; -1 if none."""
        last = -1
        for entry in self.entries:
            if not entry.verified:
                break
            last = entry.n
        return last


# ---------------- POLYNOMIALS ----------------
def pi_series(pair: RecurrentPair, n: int, i: Optional[int] = None) -> list:
    """[PiPair(0), ..., PiPair(n)], computed bottom-up."""
    if n < 0:
        raise ValueError("chain index must be non-negative")
    i = pair.n1 if i is None else i
    pi, pi_prime = pair.n2, pair.n3
    series = [PiPair(0, pi, pi_prime)]
    for k in range(n):
        delta_prime = i * pi_prime + pi
        delta = 0 if pair.t_kind is TKind.IS_S else delta_prime
        pi, pi_prime = delta + pair.n2, delta_prime + pair.n3
        series.append(PiPair(k + 1, pi, pi_prime))
    return series


def pi_eval(pair: RecurrentPair, n: int, i: Optional[int] = None) -> PiPair:
    return pi_series(pair, n, i)[-1]


def pi_closed_form_s(pair: RecurrentPair, n: int, i: Optional[int] = None) -> PiPair:
    """Πₙ = n2 and Π′ₙ = n3·iⁿ + Σ_{k<n} (n2+n3)·iᵏ; only valid when t = s."""
    if pair.t_kind is not TKind.IS_S:
        raise ValueError("closed form only exists for t = s")
    if n < 0:
        raise ValueError("chain index must be non-negative")
    i = pair.n1 if i is None else i
    geometric = sum(i ** k for k in range(n))
    return PiPair(n, pair.n2, pair.n3 * i ** n + (pair.n2 + pair.n3) * geometric)


# ---------------- WITNESS TERMS ----------------
def f_size(pair: RecurrentPair, m: int, n: int, limit: int) -> int:
    first = tower_size(pair.c, m, pair.s, limit)
    second = tower_size(pair.c, n, pair.s, limit)
    return min(1 + first + second, limit + 1)


def f_term(pair: RecurrentPair, m: int, n: int, max_size: Optional[int] = None) -> Term:
    """f(cᵐ[s], cⁿ[s]), refused when it would exceed max_size nodes."""
    limit = MAX_TERM_SIZE if max_size is None else max_size
    size = f_size(pair, m, n, limit)
    if size > limit:
        raise SizeGuardError(size, limit)
    return app(pair.f, tower(pair.c, m, pair.s), tower(pair.c, n, pair.s))


def witness_term(pair: RecurrentPair, n: int, max_size: Optional[int] = None) -> Term:
    p = pi_eval(pair, n)
    return f_term(pair, p.pi, p.pi_prime, max_size)


# ---------------- EXECUTED LEMMAS ----------------
def lemma_r1_run(
    pair: RecurrentPair,
    m: int,
    n: int,
    mode: Mode,
    supply: Optional[FreshSupply] = None,
    max_size: Optional[int] = None,
) -> Term:
    """f(m, n) ⇒ⁿ_{r1} f(n1·n + m, 0), executed."""
    start = f_term(pair, m, n, max_size)
    expected = f_term(pair, pair.n1 * n + m, 0, max_size)
    result = iterate_rule(mode, pair.r1, start, n, supply)
    if result != expected:
        raise ChainMismatchError(f"r1 from {start}: expected {expected}, got {result}")
    return result


def lemma_r2_run(
    pair: RecurrentPair,
    m: int,
    mode: Mode,
    supply: Optional[FreshSupply] = None,
    max_size: Optional[int] = None,
) -> Term:
    """f(m, 0) ⇒_{r2} f(m′ + n2, m + n3) with m′ = 0 for t = s and m′ = m for t = x."""
    start = f_term(pair, m, 0, max_size)
    shifted = 0 if pair.t_kind is TKind.IS_S else m
    expected = f_term(pair, shifted + pair.n2, m + pair.n3, max_size)
    result = step(mode, pair.r2, start, supply)
    if result != expected:
        raise ChainMismatchError(f"r2 from {start}: expected {expected}, got {result}")
    return result


# ---------------- CHAIN PREFIX ----------------
def verify_prefix(
    pair: RecurrentPair,
    steps: int,
    mode: Mode,
    max_size: Optional[int] = None,
    supply: Optional[FreshSupply] = None,
) -> ChainWitness:
    """
    Rewrites a₀ … a_steps segment by segment. Heights are always reported;
    terms stop being built once a segment would exceed the size guard, and
    every later entry is left unattempted.
    """
    limit = MAX_TERM_SIZE if max_size is None else max_size
    supply = supply or FreshSupply()
    series = pi_series(pair, steps)
    witness = ChainWitness(pair, mode, steps)
    current = None
    for n in range(steps):
        here, there = series[n], series[n + 1]
        if witness.truncated:
            witness.entries.append(WitnessEntry(n, here.pi, here.pi_prime))
            continue
        # largest term on the segment: the pivot f(Δ′ₙ, 0) or either endpoint
        pivot_height = pair.n1 * here.pi_prime + here.pi
        bound = f_size(pair, max(pivot_height, here.pi, there.pi), max(here.pi_prime, there.pi_prime), limit)
        if bound > limit:
            witness.truncated = True
            _LOGGER.info("size guard %d reached at chain index %d; heights only from here", limit, n)
            witness.entries.append(WitnessEntry(n, here.pi, here.pi_prime, current))
            continue
        if current is None:
            current = f_term(pair, here.pi, here.pi_prime, limit)
        target = f_term(pair, there.pi, there.pi_prime, limit)
        pivot = iterate_rule(mode, pair.r1, current, here.pi_prime, supply)
        reached = None if pivot is None else step(mode, pair.r2, pivot, supply)
        ok = reached is not None and reached == target
        if not ok:
            _LOGGER.warning("segment %d of pair %s failed in %s mode", n, pair.key, mode.value)
        else:
            _LOGGER.debug("segment %d of pair %s verified (%d r1 steps)", n, pair.key, here.pi_prime)
        witness.entries.append(WitnessEntry(n, here.pi, here.pi_prime, current, pivot, True, ok))
        current = target
    return witness
