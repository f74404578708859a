"""Propositional terms over the Łukasiewicz connectives.

Terms are small immutable trees.  Only ``Var``, ``Const``, ``Conj`` and
``Impl`` carry semantics; ``Neg``, ``Min``, ``Max``, ``Power`` and ``Iff``
are sugar, kept in the tree so that parsed text prints back the way it was
written.  Their meaning is fixed by the expansions

    !a      = a -> 0
    a /\\ b  = a * (a -> b)
    a \\/ b  = ((a -> b) -> b) /\\ ((b -> a) -> a)
    a^k     = a * a * ... * a        (k factors)
    a <-> b = (a -> b) /\\ (b -> a)

and the evaluator computes them through the primitive operations only.

Values may be ``Fraction`` (the normal case) or plain ``int`` restricted
to {0, 1}, in which case the semantics is classical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

__all__ = [
    "Term", "Var", "Const", "Conj", "Impl", "Neg", "Min", "Max", "Power", "Iff",
    "ParseError", "parse", "format_term", "eval_term", "expand", "variables",
    "luk_conj", "luk_impl",
]

Value = Union[Fraction, int]


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError(f"constant must be 0 or 1, got {self.value!r}")


@dataclass(frozen=True)
class Conj:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Impl:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Min:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Max:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Power:
    arg: "Term"
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"power exponent must be positive, got {self.k}")


@dataclass(frozen=True)
class Iff:
    left: "Term"
    right: "Term"


Term = Union[Var, Const, Conj, Impl, Neg, Min, Max, Power, Iff]

ZERO = Const(0)
ONE = Const(1)


# ---------------------------------------------------------------------------
# semantics

def luk_conj(a: Value, b: Value) -> Value:
    """Łukasiewicz t-norm ``max(0, a + b - 1)``."""
    return max(0, a + b - 1)


def luk_impl(a: Value, b: Value) -> Value:
    """Residuum of the Łukasiewicz t-norm, ``min(1, 1 - a + b)``."""
    return min(1, 1 - a + b)


def _luk_min(a: Value, b: Value) -> Value:
    return luk_conj(a, luk_impl(a, b))


def _luk_max(a: Value, b: Value) -> Value:
    return _luk_min(luk_impl(luk_impl(a, b), b), luk_impl(luk_impl(b, a), a))


def eval_term(t: Term, assignment: Sequence[Value]) -> Value:
    """Evaluate ``t`` with ``x_i`` bound to ``assignment[i]``.

    Raises
    ------
    ValueError
        If a value lies outside [0, 1] or a variable index is unbound.
    """
    for v in assignment:
        if not 0 <= v <= 1:
            raise ValueError(f"assignment value {v} outside [0, 1]")
    return _eval(t, assignment)


def _eval(t: Term, env: Sequence[Value]) -> Value:
    if isinstance(t, Var):
        if t.index >= len(env):
            raise ValueError(f"variable x{t.index} is unbound")
        return env[t.index]
    if isinstance(t, Const):
        return t.value
    if isinstance(t, Conj):
        return luk_conj(_eval(t.left, env), _eval(t.right, env))
    if isinstance(t, Impl):
        return luk_impl(_eval(t.left, env), _eval(t.right, env))
    if isinstance(t, Neg):
        return luk_impl(_eval(t.arg, env), 0)
    if isinstance(t, Min):
        return _luk_min(_eval(t.left, env), _eval(t.right, env))
    if isinstance(t, Max):
        return _luk_max(_eval(t.left, env), _eval(t.right, env))
    if isinstance(t, Power):
        a = _eval(t.arg, env)
        acc = a
        for _ in range(t.k - 1):
            acc = luk_conj(acc, a)
        return acc
    if isinstance(t, Iff):
        a, b = _eval(t.left, env), _eval(t.right, env)
        return _luk_min(luk_impl(a, b), luk_impl(b, a))
    raise TypeError(f"not a term: {t!r}")


def expand(t: Term) -> Term:
    """Rewrite every sugar node into ``Conj``/``Impl``/``Var``/``Const``.

    Shared subterms are reused as the same objects, so the result is a DAG
    of size linear in ``t`` even though its tree form can be exponential.
    """
    if isinstance(t, (Var, Const)):
        return t
    if isinstance(t, Conj):
        return Conj(expand(t.left), expand(t.right))
    if isinstance(t, Impl):
        return Impl(expand(t.left), expand(t.right))
    if isinstance(t, Neg):
        return Impl(expand(t.arg), ZERO)
    if isinstance(t, Min):
        a, b = expand(t.left), expand(t.right)
        return Conj(a, Impl(a, b))
    if isinstance(t, Max):
        a, b = expand(t.left), expand(t.right)
        p, q = Impl(Impl(a, b), b), Impl(Impl(b, a), a)
        return Conj(p, Impl(p, q))
    if isinstance(t, Power):
        a = expand(t.arg)
        acc = a
        for _ in range(t.k - 1):
            acc = Conj(acc, a)
        return acc
    if isinstance(t, Iff):
        a, b = expand(t.left), expand(t.right)
        p, q = Impl(a, b), Impl(b, a)
        return Conj(p, Impl(p, q))
    raise TypeError(f"not a term: {t!r}")


def variables(t: Term) -> set[int]:
    """Indices of the variables occurring in ``t``."""
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, Const):
        return set()
    if isinstance(t, (Neg, Power)):
        return variables(t.arg)
    return variables(t.left) | variables(t.right)


# ---------------------------------------------------------------------------
# parsing

class ParseError(ValueError):
    """Malformed term text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<var>x\d+)|(?P<num>\d+)|(?P<ident>[A-Za-z_]\w*)"
    r"|(?P<op><->|->|/\\|\\/|[!*^()]))"
)

# binary operators: (precedence, right associative)
_BINARY = {
    "<->": (0, False),
    "->": (1, True),
    "\\/": (2, False),
    "/\\": (3, False),
    "*": (4, False),
}
_NODE = {"<->": Iff, "->": Impl, "\\/": Max, "/\\": Min, "*": Conj}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "ident":
            raise ParseError(f"unknown identifier {m.group(kind)!r}", start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    # precedence climbing over the binary operators
    def binary(self, min_prec: int) -> Term:
        lhs = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind != "op" or val not in _BINARY:
                return lhs
            prec, right = _BINARY[val]
            if prec < min_prec:
                return lhs
            self.take()
            rhs = self.binary(prec if right else prec + 1)
            lhs = _NODE[val](lhs, rhs)

    def power(self) -> Term:
        t = self.prefix()
        while self.peek()[1] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or int(val) < 1:
                raise ParseError("expected a positive integer exponent", pos)
            t = Power(t, int(val))
        return t

    def prefix(self) -> Term:
        kind, val, pos = self.take()
        if kind == "op" and val == "!":
            return Neg(self.prefix())
        if kind == "op" and val == "(":
            t = self.binary(0)
            self.expect(")")
            return t
        if kind == "var":
            return Var(int(val[1:]))
        if kind == "num":
            if val not in ("0", "1"):
                raise ParseError(f"constant must be 0 or 1, found {val!r}", pos)
            return Const(int(val))
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse(text: str) -> Term:
    """Parse term text.

    Operators, tightest first: ``!`` (prefix), ``^k`` (postfix power),
    ``*``, ``/\\``, ``\\/``, ``->`` (right associative) and ``<->``.

    >>> parse("!x0")
    Neg(arg=Var(index=0))
    """
    p = _Parser(text)
    t = p.binary(0)
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return t


_SYMBOL = {Iff: "<->", Impl: "->", Max: "\\/", Min: "/\\", Conj: "*"}
_PREC = {Iff: 0, Impl: 1, Max: 2, Min: 3, Conj: 4, Power: 5, Neg: 6, Var: 7, Const: 7}


def format_term(t: Term) -> str:
    """Print ``t`` in the parser's syntax with minimal parentheses."""
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Neg):
        return "!" + _wrap(t.arg, _PREC[Neg])
    if isinstance(t, Power):
        return f"{_wrap(t.arg, _PREC[Neg])}^{t.k}"
    prec = _PREC[type(t)]
    right_assoc = isinstance(t, Impl)
    left = _wrap(t.left, prec + 1 if right_assoc else prec)
    right = _wrap(t.right, prec if right_assoc else prec + 1)
    return f"{left} {_SYMBOL[type(t)]} {right}"


def _wrap(t: Term, min_prec: int) -> str:
    s = format_term(t)
    return s if _PREC[type(t)] >= min_prec else f"({s})"
