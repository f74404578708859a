"""One-variable McNaughton functions as exact piecewise-linear maps.

A :class:`PLFunc` is stored in canonical form: strictly increasing
rational breakpoints ``0 = q_0 < ... < q_r = 1`` and one integer
``(slope, intercept)`` pair per interval, with no breakpoint between two
pieces lying on the same line.  Everything here runs on
:class:`fractions.Fraction`; there is no floating point in this module.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .terms import (Conj, Const, Iff, Impl, Max, Min, Neg, Power, Term, Var,
                    variables)

__all__ = [
    "PLFunc", "compile_term", "eval_pl", "compose", "pl_equal",
    "identity", "flip", "constant", "from_points",
    "pl_to_json", "pl_from_json", "pl_to_dict", "pl_from_dict",
]

Piece = tuple[int, int]


class McNaughtonError(ValueError):
    pass


@dataclass(frozen=True)
class PLFunc:
    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        bps, pieces = self.breakpoints, self.pieces
        if len(bps) < 2 or bps[0] != 0 or bps[-1] != 1:
            raise McNaughtonError("breakpoints must start at 0 and end at 1")
        if any(u >= v for u, v in zip(bps, bps[1:])):
            raise McNaughtonError("breakpoints must be strictly increasing")
        if len(pieces) != len(bps) - 1:
            raise McNaughtonError("need exactly one piece per interval")
        for a, c in pieces:
            if not (isinstance(a, int) and isinstance(c, int)):
                raise McNaughtonError(f"non-integer coefficients ({a}, {c})")
        for i, (a, c) in enumerate(pieces):
            for x in (bps[i], bps[i + 1]):
                if not 0 <= a * x + c <= 1:
                    raise McNaughtonError(f"piece {i} leaves [0, 1] at x={x}")
        for i in range(1, len(pieces)):
            (a0, c0), (a1, c1) = pieces[i - 1], pieces[i]
            x = bps[i]
            if a0 * x + c0 != a1 * x + c1:
                raise McNaughtonError(f"discontinuity at x={x}")
            if (a0, c0) == (a1, c1):
                raise McNaughtonError(f"redundant breakpoint at x={x}")

    def __call__(self, x):
        return eval_pl(self, x)

    @property
    def slopes(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.pieces)

    def piece_index(self, x) -> int:
        """Index of the piece covering ``x`` (the left one at a breakpoint)."""
        i = bisect_right(self.breakpoints, x) - 1
        return min(max(i, 0), len(self.pieces) - 1)

    def __str__(self):
        parts = [
            f"[{u}, {v}]: {a}x{c:+d}"
            for (u, v), (a, c) in zip(zip(self.breakpoints, self.breakpoints[1:]), self.pieces)
        ]
        return "PLFunc(" + "; ".join(parts) + ")"


def _canonical(bps: Sequence[Fraction], pieces: Sequence[Piece]) -> PLFunc:
    """Merge collinear neighbours and drop empty intervals."""
    out_b = [Fraction(bps[0])]
    out_p: list[Piece] = []
    for i, p in enumerate(pieces):
        v = Fraction(bps[i + 1])
        if v == out_b[-1]:
            continue
        if out_p and out_p[-1] == p:
            out_b[-1] = v
        else:
            out_p.append(p)
            out_b.append(v)
    return PLFunc(tuple(out_b), tuple((int(a), int(c)) for a, c in out_p))


def identity() -> PLFunc:
    return PLFunc((Fraction(0), Fraction(1)), ((1, 0),))


def flip() -> PLFunc:
    return PLFunc((Fraction(0), Fraction(1)), ((-1, 1),))


def constant(c: int) -> PLFunc:
    return PLFunc((Fraction(0), Fraction(1)), ((0, c),))


def from_points(points: Iterable[tuple]) -> PLFunc:
    """Build the PL function interpolating ``(x, y)`` nodes.

    Node abscissae must run from 0 to 1; every segment must have integer
    slope and intercept.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    bps, pieces = [pts[0][0]], []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        a = (y1 - y0) / (x1 - x0)
        c = y0 - a * x0
        if a.denominator != 1 or c.denominator != 1:
            raise McNaughtonError(f"segment ({x0},{y0})-({x1},{y1}) is not integral")
        pieces.append((int(a), int(c)))
        bps.append(x1)
    return _canonical(bps, pieces)


def eval_pl(f: PLFunc, x):
    """Value of ``f`` at ``x`` (exact for Fraction/int input)."""
    if not 0 <= x <= 1:
        raise ValueError(f"x = {x} outside [0, 1]")
    a, c = f.pieces[f.piece_index(x)]
    return a * x + c


def _common_refinement(f: PLFunc, g: PLFunc) -> list[Fraction]:
    return sorted(set(f.breakpoints) | set(g.breakpoints))


def _combine(f: PLFunc, g: PLFunc, linear: Callable[[Piece, Piece], Piece],
             clamp_low: bool) -> PLFunc:
    """Pointwise ``max(0, L)`` (clamp_low) or ``min(1, L)`` of ``L = linear(f, g)``.

    New breakpoints are the exact roots of ``L = 0`` resp. ``L = 1``
    inside each interval of the common refinement.
    """
    bps = _common_refinement(f, g)
    level = 0 if clamp_low else 1
    out_b = [bps[0]]
    out_p: list[Piece] = []

    def clipped(p: Piece, x: Fraction) -> Piece:
        v = p[0] * x + p[1]
        if clamp_low:
            return p if v > 0 else (0, 0)
        return p if v < 1 else (0, 1)

    for u, v in zip(bps, bps[1:]):
        mid = (u + v) / 2
        a, c = linear(f.pieces[f.piece_index(mid)], g.pieces[g.piece_index(mid)])
        cuts = [u]
        if a != 0:
            root = Fraction(level - c, a)
            if u < root < v:
                cuts.append(root)
        cuts.append(v)
        for lo, hi in zip(cuts, cuts[1:]):
            out_p.append(clipped((a, c), (lo + hi) / 2))
            out_b.append(hi)
    return _canonical(out_b, out_p)


def _conj(f: PLFunc, g: PLFunc) -> PLFunc:
    return _combine(f, g, lambda p, q: (p[0] + q[0], p[1] + q[1] - 1), clamp_low=True)


def _impl(f: PLFunc, g: PLFunc) -> PLFunc:
    return _combine(f, g, lambda p, q: (q[0] - p[0], 1 - p[1] + q[1]), clamp_low=False)


def _min(f, g):
    return _conj(f, _impl(f, g))


def compile_term(t: Term) -> PLFunc:
    """Compile a one-variable term to its McNaughton function.

    Raises
    ------
    ValueError
        If ``t`` mentions a variable other than ``x0``.
    """
    extra = variables(t) - {0}
    if extra:
        raise ValueError(f"term uses variables other than x0: {sorted(extra)}")
    return _compile(t)


def _compile(t: Term) -> PLFunc:
    if isinstance(t, Var):
        return identity()
    if isinstance(t, Const):
        return constant(t.value)
    if isinstance(t, Conj):
        return _conj(_compile(t.left), _compile(t.right))
    if isinstance(t, Impl):
        return _impl(_compile(t.left), _compile(t.right))
    if isinstance(t, Neg):
        return _impl(_compile(t.arg), constant(0))
    if isinstance(t, Min):
        return _min(_compile(t.left), _compile(t.right))
    if isinstance(t, Max):
        f, g = _compile(t.left), _compile(t.right)
        return _min(_impl(_impl(f, g), g), _impl(_impl(g, f), f))
    if isinstance(t, Power):
        f = _compile(t.arg)
        acc = f
        for _ in range(t.k - 1):
            acc = _conj(acc, f)
        return acc
    if isinstance(t, Iff):
        f, g = _compile(t.left), _compile(t.right)
        return _min(_impl(f, g), _impl(g, f))
    raise TypeError(f"not a term: {t!r}")


def compose(f: PLFunc, g: PLFunc) -> PLFunc:
    """The function ``x -> f(g(x))``."""
    out_b = [Fraction(0)]
    out_p: list[Piece] = []
    for (u, v), (ag, cg) in zip(zip(g.breakpoints, g.breakpoints[1:]), g.pieces):
        cuts = [u]
        if ag != 0:
            lo, hi = sorted((ag * u + cg, ag * v + cg))
            pre = sorted(Fraction(b - cg, ag) for b in f.breakpoints if lo < b < hi)
            cuts.extend(pre)
        cuts.append(v)
        for x0, x1 in zip(cuts, cuts[1:]):
            af, cf = f.pieces[f.piece_index(ag * (x0 + x1) / 2 + cg)]
            out_p.append((af * ag, af * cg + cf))
            out_b.append(x1)
    return _canonical(out_b, out_p)


def pl_equal(f: PLFunc, g: PLFunc) -> bool:
    return f.breakpoints == g.breakpoints and f.pieces == g.pieces


# ---------------------------------------------------------------------------
# serialization

def pl_to_dict(f: PLFunc) -> dict:
    return {
        "breakpoints": [str(b) for b in f.breakpoints],
        "pieces": [[a, c] for a, c in f.pieces],
    }


def pl_from_dict(d: dict) -> PLFunc:
    return PLFunc(
        tuple(Fraction(b) for b in d["breakpoints"]),
        tuple((int(a), int(c)) for a, c in d["pieces"]),
    )


def pl_to_json(f: PLFunc) -> str:
    return json.dumps(pl_to_dict(f))


def pl_from_json(text: str) -> PLFunc:
    return pl_from_dict(json.loads(text))
