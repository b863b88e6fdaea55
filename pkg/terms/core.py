# terms/core.py
"""
First-order terms, contexts, substitutions and renamings.

Terms are immutable. Every node caches its hash, node count, number of holes
and whether it is ground, so equality and substitution never walk a ground
subterm they do not need to. All traversals use explicit stacks: witness
towers are far deeper than the interpreter recursion limit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from collections.abc import Iterable, Iterator, Mapping
from typing import Callable, Optional

HOLE_SYMBOL = "□"

_SUFFIX = re.compile(r"^(.*)_\d+$")


# ---------------- TERMS ----------------
class Term:
    __slots__ = ("_hash", "size", "holes", "ground")

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if a._hash != b._hash or a.size != b.size:
                return False
            if isinstance(a, Variable):
                if not isinstance(b, Variable) or a.name != b.name:
                    return False
                continue
            if not isinstance(b, Application) or a.symbol != b.symbol or len(a.args) != len(b.args):
                return False
            stack.extend(zip(a.args, b.args))
        return True

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({format_plain(self)!r})"

    def __str__(self):
        return format_plain(self)


class Variable(Term):
    __slots__ = ("name",)

    def __init__(self, name: str):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("var", name)))
        object.__setattr__(self, "size", 1)
        object.__setattr__(self, "holes", 0)
        object.__setattr__(self, "ground", False)

    def __reduce__(self):
        return (Variable, (self.name,))

    def __lt__(self, other: "Variable") -> bool:
        return self.name < other.name


class Application(Term):
    __slots__ = ("symbol", "args")

    def __init__(self, symbol: str, args: Iterable[Term] = ()):
        args = tuple(args)
        object.__setattr__(self, "symbol", symbol)
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "_hash", hash((symbol, tuple(a._hash for a in args))))
        object.__setattr__(self, "size", 1 + sum(a.size for a in args))
        holes = 1 if symbol == HOLE_SYMBOL and not args else sum(a.holes for a in args)
        object.__setattr__(self, "holes", holes)
        object.__setattr__(self, "ground", all(a.ground for a in args))

    def __reduce__(self):
        return (Application, (self.symbol, self.args))

    @property
    def arity(self) -> int:
        return len(self.args)


HOLE = Application(HOLE_SYMBOL)


def const(symbol: str) -> Application:
    return Application(symbol, ())


def app(symbol: str, *args: Term) -> Application:
    return Application(symbol, args)


def is_hole(t: Term) -> bool:
    return isinstance(t, Application) and t.symbol == HOLE_SYMBOL and not t.args


def is_context(t: Term) -> bool:
    return t.holes > 0


def is_ground(t: Term) -> bool:
    """Ground means variable-free; holes are not variables."""
    return t.ground


def subterms(t: Term) -> Iterator[Term]:
    """Pre-order, left to right."""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Application):
            stack.extend(reversed(node.args))


def variables(t: Term) -> tuple:
    """Variables of t in first-occurrence order (left to right)."""
    seen = {}
    stack = [t]
    while stack:
        node = stack.pop()
        if node.ground:
            continue
        if isinstance(node, Variable):
            seen.setdefault(node, None)
        else:
            stack.extend(reversed(node.args))
    return tuple(seen)


def vars_of(*terms: Term) -> frozenset:
    found = set()
    for t in terms:
        found.update(variables(t))
    return frozenset(found)


def rebuild(t: Term, leaf: Callable[[Term], Optional[Term]]) -> Term:
    """
    Bottom-up reconstruction of t.

    `leaf(node)` is consulted for every node before descending: a Term return
    value replaces the node as a whole, None means "descend". Unchanged
    subterms are shared with the input.
    """
    out = []
    stack = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if not expanded:
            replacement = leaf(node)
            if replacement is not None:
                out.append(replacement)
                continue
            if isinstance(node, Variable) or not node.args:
                out.append(node)
                continue
            stack.append((node, True))
            for a in reversed(node.args):
                stack.append((a, False))
            continue
        k = len(node.args)
        args = tuple(out[-k:])
        del out[-k:]
        if all(new is old for new, old in zip(args, node.args)):
            out.append(node)
        else:
            out.append(Application(node.symbol, args))
    return out[0]


# ---------------- SUBSTITUTIONS ----------------
class Substitution(Mapping):
    """
    Finite map from variables to terms.

    Identity bindings are dropped on construction, so the mapping is exactly
    Dom(θ). Iteration follows variable-name order for reproducible output.
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings: Optional[Mapping] = None):
        items = {}
        for var, term in (bindings or {}).items():
            if not isinstance(var, Variable):
                raise TypeError(f"substitution domain must be variables, got {var!r}")
            if var != term:
                items[var] = term
        object.__setattr__(self, "_bindings", dict(sorted(items.items(), key=lambda kv: kv[0].name)))

    def __setattr__(self, name, value):
        raise AttributeError("Substitution is immutable")

    def __reduce__(self):
        return (type(self), (dict(self._bindings),))

    def __getitem__(self, var):
        return self._bindings[var]

    def __iter__(self):
        return iter(self._bindings)

    def __len__(self):
        return len(self._bindings)

    def __hash__(self):
        return hash(frozenset(self._bindings.items()))

    def __eq__(self, other):
        if isinstance(other, Substitution):
            return self._bindings == other._bindings
        if isinstance(other, Mapping):
            return self._bindings == Substitution(other)._bindings
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{v.name}↦{format_plain(t)}" for v, t in self._bindings.items())
        return "{" + inner + "}"

    def __call__(self, t: Term) -> Term:
        return apply(t, self)

    def power(self, n: int) -> "Substitution":
        """θⁿ with θ⁰ = ∅ and θⁿ⁺¹ = θⁿθ."""
        if n < 0:
            raise ValueError("substitution power must be non-negative")
        result = EMPTY
        for _ in range(n):
            result = compose(result, self)
        return result


EMPTY = Substitution()


class Renaming(Substitution):
    """A substitution that permutes variables."""

    __slots__ = ()

    def __init__(self, bindings: Optional[Mapping] = None):
        super().__init__(bindings)
        images = list(self.values())
        if not all(isinstance(v, Variable) for v in images):
            raise ValueError("a renaming maps variables to variables only")
        if len(set(images)) != len(images):
            raise ValueError("a renaming must be injective")

    def inverse(self) -> "Renaming":
        return Renaming({image: var for var, image in self.items()})


def apply(t: Term, theta: Mapping) -> Term:
    if not theta or t.ground:
        return t

    def leaf(node):
        if node.ground:
            return node
        if isinstance(node, Variable):
            return theta.get(node, node)
        return None

    return rebuild(t, leaf)


def compose(sigma: Mapping, theta: Mapping) -> Substitution:
    """σθ: apply(t, σθ) = apply(apply(t, σ), θ)."""
    bindings = {var: apply(term, theta) for var, term in sigma.items()}
    for var, term in theta.items():
        if var not in bindings:
            bindings[var] = term
    return Substitution(bindings)


# ---------------- CONTEXTS ----------------
def plug(c: Term, t: Term) -> Term:
    """c[t]: every hole of c replaced by t."""
    if not c.holes:
        return c

    def leaf(node):
        if not node.holes:
            return node
        if is_hole(node):
            return t
        return None

    return rebuild(c, leaf)


def context_power(c: Term, n: int) -> Term:
    """c⁰ = □ and cⁿ⁺¹ = c[cⁿ]."""
    if n < 0:
        raise ValueError("context power must be non-negative")
    return tower(c, n, HOLE)


def tower(c: Term, n: int, t: Term) -> Term:
    """cⁿ[t], built from the inside out."""
    if n < 0:
        raise ValueError("tower height must be non-negative")
    result = t
    for _ in range(n):
        result = plug(c, result)
    return result


def tower_size(c: Term, n: int, t: Term, limit: int) -> int:
    """
    Node count of cⁿ[t] without building it.
    Returns limit + 1 as soon as the count is known to exceed limit.
    """
    body = c.size - c.holes
    if c.holes == 1:
        size = n * body + t.size
        return size if size <= limit else limit + 1
    size = t.size
    for _ in range(n):
        size = body + c.holes * size
        if size > limit:
            return limit + 1
    return size


# ---------------- RULES ----------------
@dataclass(frozen=True)
class Rule:
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> tuple:
        seen = dict.fromkeys(variables(self.lhs))
        seen.update(dict.fromkeys(variables(self.rhs)))
        return tuple(seen)

    @property
    def is_ground(self) -> bool:
        return self.lhs.ground and self.rhs.ground

    def rename(self, gamma: Mapping) -> "Rule":
        return Rule(apply(self.lhs, gamma), apply(self.rhs, gamma))

    def __str__(self):
        return f"{format_plain(self.lhs)} -> {format_plain(self.rhs)}"


class FreshSupply:
    """
    Source of fresh variable names `base_k`, k increasing for the life of the
    supply. Not thread-safe; give each worker its own `fork`.
    """

    def __init__(self, start: int = 1, stride: int = 1):
        self._next = start
        self._stride = stride

    @property
    def counter(self) -> int:
        return self._next

    def fresh(self, base: str, avoid: frozenset = frozenset()) -> Variable:
        m = _SUFFIX.match(base)
        stem = m.group(1) if m else base
        while True:
            candidate = Variable(f"{stem}_{self._next}")
            self._next += self._stride
            if candidate not in avoid:
                return candidate

    def fork(self, offset: int, stride: int) -> "FreshSupply":
        """Supply over the suffixes start+offset, start+offset+stride, ..."""
        return FreshSupply(start=self._next + offset, stride=stride)


def fresh_variant(rule: Rule, avoid: Iterable[Variable], supply: FreshSupply) -> Rule:
    avoid = frozenset(avoid)
    gamma = {var: supply.fresh(var.name, avoid) for var in rule.variables}
    return rule.rename(Renaming(gamma))


# ---------------- DISPLAY ----------------
def format_plain(t: Term, hole: str = "[]") -> str:
    """Prefix notation: constants bare, applications as f(a,b)."""
    parts = []
    stack = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
        elif isinstance(item, Variable):
            parts.append(item.name)
        elif is_hole(item):
            parts.append(hole)
        elif not item.args:
            parts.append(item.symbol)
        else:
            parts.append(item.symbol + "(")
            stack.append(")")
            for index in range(len(item.args) - 1, -1, -1):
                stack.append(item.args[index])
                if index:
                    stack.append(",")
    return "".join(parts)
