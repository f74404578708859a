"""Ergodic classification of one-variable Łukasiewicz substitutions.

A non-invertible substitution ``x0 -> s`` is generic and ergodic exactly
when its Markov graph is strongly connected, and mixing and exact exactly
when that graph is primitive.  In the ergodic case the invariant density
is a step function with positive rational values, obtained here as the
normalized left fixed vector of the Markov matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .markov import GraphInfo, MarkovSystem, graph_analysis, markov_system
from .mcnaughton import PLFunc, flip, identity, pl_equal

__all__ = [
    "Classification", "DensityVec", "InconsistencyError", "is_invertible",
    "invariant_density", "apply_transfer", "classify", "classify_system",
    "nullspace", "classification_to_dict",
]


class InconsistencyError(ArithmeticError):
    """The fixed-vector computation contradicts Perron-Frobenius theory."""


@dataclass(frozen=True)
class DensityVec:
    values: tuple[Fraction, ...]
    lengths: tuple[Fraction, ...]

    @property
    def masses(self) -> tuple[Fraction, ...]:
        """Invariant measure of each partition interval."""
        return tuple(v * l for v, l in zip(self.values, self.lengths))


@dataclass(frozen=True)
class Classification:
    invertible: bool
    generic: bool
    ergodic: bool
    mixing: bool
    exact: bool
    density: Optional[DensityVec]
    strongly_connected: bool
    period: int
    primitive: bool
    has_flat_piece: bool


def nullspace(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right null space of a rational matrix (Gauss-Jordan)."""
    m = [[Fraction(x) for x in row] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][fc]
        basis.append(vec)
    return basis


def is_invertible(s: PLFunc) -> bool:
    """Only the identity and the flip ``x -> 1 - x`` are invertible."""
    return pl_equal(s, identity()) or pl_equal(s, flip())


def apply_transfer(m: MarkovSystem, v: Sequence[Fraction]) -> list[Fraction]:
    """Transfer (Perron-Frobenius) operator on step densities: ``v E``."""
    if len(v) != m.size:
        raise ValueError(f"expected {m.size} entries, got {len(v)}")
    return [sum((v[i] * m.matrix[i][j] for i in range(m.size)), Fraction(0))
            for j in range(m.size)]


def invariant_density(m: MarkovSystem) -> DensityVec:
    """Exact invariant step density of a strongly connected Markov system.

    Solves ``v (E - I) = 0`` over the rationals and normalizes so that
    ``sum(v_i * len_i) == 1``.

    Raises
    ------
    InconsistencyError
        If the fixed space is not one-dimensional or not strictly positive.
    """
    r = m.size
    # transpose of (E - I)
    system = [[m.matrix[i][j] - (1 if i == j else 0) for i in range(r)] for j in range(r)]
    basis = nullspace(system)
    if len(basis) != 1:
        raise InconsistencyError(f"fixed space has dimension {len(basis)}, expected 1")
    v = basis[0]
    if v[0] < 0:
        v = [-x for x in v]
    if any(x <= 0 for x in v):
        raise InconsistencyError(f"fixed vector {v} is not strictly positive")
    total = sum((x * l for x, l in zip(v, m.lengths)), Fraction(0))
    return DensityVec(tuple(x / total for x in v), m.lengths)


def classify_system(s: PLFunc, m: MarkovSystem) -> Classification:
    info: GraphInfo = graph_analysis(m)
    inv = is_invertible(s)
    flat = m.has_flat_piece
    ergodic = not inv and not flat and info.strongly_connected
    mixing = not inv and not flat and info.primitive
    density = invariant_density(m) if ergodic else None
    return Classification(
        invertible=inv, generic=ergodic, ergodic=ergodic, mixing=mixing,
        exact=mixing, density=density, strongly_connected=info.strongly_connected,
        period=info.period, primitive=info.primitive, has_flat_piece=flat,
    )


def classify(s: PLFunc) -> Classification:
    """Classify the substitution ``x0 -> s``."""
    return classify_system(s, markov_system(s))


def classification_to_dict(c: Classification) -> dict:
    return {
        "invertible": c.invertible,
        "generic": c.generic,
        "ergodic": c.ergodic,
        "mixing": c.mixing,
        "exact": c.exact,
        "density": None if c.density is None else [str(x) for x in c.density.values],
        "diagnostics": {
            "strongly_connected": c.strongly_connected,
            "period": c.period,
            "primitive": c.primitive,
            "has_flat_piece": c.has_flat_piece,
        },
    }
