"""Classical substitutions over finitely many variables.

A substitution over ``n`` variables induces a self-map of the ``2**n``
truth assignments.  Points are encoded as integers with ``x0`` as the
least significant bit.  Such a substitution is generic (equivalently
ergodic, minimal) exactly when the induced map is a single cycle through
all ``2**n`` points, and it is never mixing or exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional, Sequence

from .terms import Iff, Min, Neg, Term, Var, eval_term, parse, variables

__all__ = ["BoolSubst", "PointMap", "point_map", "bool_classify", "adding_machine",
           "cycle_lengths", "bool_subst_from_text"]


@dataclass(frozen=True)
class BoolSubst:
    n: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if len(self.terms) != self.n:
            raise ValueError(f"expected {self.n} terms, got {len(self.terms)}")
        for t in self.terms:
            bad = {i for i in variables(t) if i >= self.n}
            if bad:
                raise ValueError(f"term mentions x{min(bad)} but n = {self.n}")


@dataclass(frozen=True)
class PointMap:
    n: int
    table: tuple[int, ...]

    def __call__(self, p: int) -> int:
        return self.table[p]


@dataclass(frozen=True)
class BoolClassification:
    invertible: bool
    permutation_order: Optional[int]
    generic: bool
    cycles: tuple[int, ...]
    mixing: bool = False
    exact: bool = False

    @property
    def ergodic(self) -> bool:
        return self.generic

    @property
    def minimal(self) -> bool:
        return self.generic


def bool_subst_from_text(n: int, texts: Sequence[str]) -> BoolSubst:
    return BoolSubst(n, tuple(parse(s) for s in texts))


def _bits(p: int, n: int) -> list[int]:
    return [(p >> i) & 1 for i in range(n)]


def point_map(b: BoolSubst) -> PointMap:
    table = []
    for p in range(2 ** b.n):
        env = _bits(p, b.n)
        table.append(sum(eval_term(t, env) << i for i, t in enumerate(b.terms)))
    return PointMap(b.n, tuple(table))


def cycle_lengths(pm: PointMap) -> Optional[list[int]]:
    """Cycle type of a bijective point map, ``None`` otherwise."""
    if len(set(pm.table)) != len(pm.table):
        return None
    seen = [False] * len(pm.table)
    lengths = []
    for start in range(len(pm.table)):
        if seen[start]:
            continue
        k, p = 0, start
        while not seen[p]:
            seen[p] = True
            p = pm.table[p]
            k += 1
        lengths.append(k)
    return lengths


def bool_classify(b: BoolSubst) -> BoolClassification:
    cycles = cycle_lengths(point_map(b))
    if cycles is None:
        return BoolClassification(False, None, False, ())
    return BoolClassification(True, lcm(*cycles), cycles == [2 ** b.n], tuple(cycles))


def adding_machine(n: int) -> BoolSubst:
    """The odometer ``+1 mod 2**n`` as a substitution.

    ``x0 -> !x0`` and ``x_{i+1} -> (x0 /\\ ... /\\ x_i) <-> !x_{i+1}``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    terms: list[Term] = [Neg(Var(0))]
    carry: Term = Var(0)
    for i in range(1, n):
        terms.append(Iff(carry, Neg(Var(i))))
        carry = Min(carry, Var(i))
    return BoolSubst(n, tuple(terms))
