# tests/helpers.py
import random

from analysis.recurrence import RecurrentPair, TKind, build_r1, build_r2
from terms.core import HOLE, Application, Term, Variable, app, const

BINCHAIN_TRS = """\
(VAR x y)
f(x,s(y)) -> f(s(s(x)),y)
f(x,0) -> f(s(0),x)
"""

BINCHAIN_LP = """\
(VAR x y)
f(x,s(y)) -> f(s(x),y)
f(x,0) -> f(x,s(x))
"""

PREL = """\
(VAR x)
f(x) -> s(x)
f(g(x,0)) -> f(x)
"""

TERMINATING = """\
(VAR x y)
plus(0,y) -> y
plus(s(x),y) -> s(plus(x,y))
"""

X, Y, Z = Variable("x"), Variable("y"), Variable("z")
ZERO = const("0")
S_CTX = app("s", HOLE)

# signature for generated terms: a/0, g/1, h/2 over x, y, z
RANDOM_VARIABLES = (X, Y, Z)
RANDOM_SYMBOLS = {"a": 0, "g": 1, "h": 2}
GROUND_SYMBOLS = {"a": 0, "b": 0, "s": 1, "k": 2}


def s(t: Term, n: int = 1) -> Term:
    for _ in range(n):
        t = app("s", t)
    return t


def random_term(rng: random.Random, depth: int, variables=RANDOM_VARIABLES, symbols=RANDOM_SYMBOLS) -> Term:
    leaves = [const(sym) for sym, arity in symbols.items() if arity == 0] + list(variables)
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(leaves)
    symbol = rng.choice([sym for sym, arity in symbols.items() if arity > 0])
    return Application(symbol, [random_term(rng, depth - 1, variables, symbols) for _ in range(symbols[symbol])])


def random_ground(rng: random.Random, depth: int) -> Term:
    return random_term(rng, depth, variables=(), symbols=GROUND_SYMBOLS)


def random_context(rng: random.Random, depth: int, single_hole: bool = False) -> Term:
    """Ground context over s/1 and k/2 with at least one hole; never □ itself when depth >= 1."""
    def build(d: int, need_hole: bool) -> Term:
        if not need_hole:
            return random_ground(rng, min(d, 1))
        if d == 0:
            return HOLE
        if rng.random() < 0.5:
            return app("s", build(d - 1, True))
        if single_hole or rng.random() < 0.5:
            left = rng.random() < 0.5
            return app("k", build(d - 1, left), build(d - 1, not left))
        return app("k", build(d - 1, True), build(d - 1, True))

    return build(depth, True)


def make_pair(n1: int, n2: int, n3: int, t_kind: TKind, c: Term = S_CTX, s_term: Term = ZERO) -> RecurrentPair:
    r1 = build_r1("f", c, n1, X, Y)
    r2 = build_r2("f", c, s_term, t_kind, n2, n3, X)
    notes = ("n1=0",) if n1 == 0 else ()
    return RecurrentPair(r1, r2, "f", c, s_term, t_kind, n1, n2, n3, 0, 1, notes)


def synthetic_rules(rng: random.Random, single_hole: bool = False):
    """Template-built (r1, r2) with random ground c and s, exponents up to 3, renamed variables."""
    c = random_context(rng, rng.randint(1, 2), single_hole)
    s_term = random_ground(rng, rng.randint(0, 2))
    n1, n2, n3 = rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)
    t_kind = rng.choice([TKind.IS_X, TKind.IS_S])
    u, w = Variable(rng.choice(["u", "x", "v1"])), Variable(rng.choice(["w", "y", "v2"]))
    r1 = build_r1("f", c, n1, u, w)
    r2 = build_r2("f", c, s_term, t_kind, n2, n3, Variable(rng.choice(["x", "z", "v"])))
    return r1, r2, (c, s_term, t_kind, n1, n2, n3)
