"""Markov partitions, graphs and matrices of McNaughton maps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from collections import deque

import numpy as np
from scipy.sparse.csgraph import connected_components

from .mcnaughton import PLFunc, eval_pl

__all__ = [
    "Partition", "MarkovSystem", "GraphInfo", "stabilize_partition",
    "build_markov", "markov_system", "graph_analysis", "markov_to_dict",
]


@dataclass(frozen=True)
class Partition:
    points: tuple[Fraction, ...]

    @property
    def intervals(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.points, self.points[1:]))

    @property
    def lengths(self) -> tuple[Fraction, ...]:
        return tuple(v - u for u, v in self.intervals)

    def __len__(self):
        return len(self.points) - 1


@dataclass(frozen=True)
class MarkovSystem:
    partition: Partition
    slopes: tuple[int, ...]
    graph: tuple[tuple[int, ...], ...]     # graph[i] = targets j of i -> j
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def lengths(self) -> tuple[Fraction, ...]:
        return self.partition.lengths

    @property
    def size(self) -> int:
        return len(self.slopes)

    @property
    def has_flat_piece(self) -> bool:
        return any(a == 0 for a in self.slopes)


@dataclass(frozen=True)
class GraphInfo:
    strongly_connected: bool
    period: int
    primitive: bool


def stabilize_partition(s: PLFunc) -> Partition:
    """Close the breakpoint set of ``s`` under ``s``.

    Starting from the nondifferentiability points (plus 0 and 1), add
    images until nothing new appears.  All points stay within the
    rationals whose denominator is at most the largest denominator among
    the breakpoints, which is what makes the loop terminate.
    """
    points = set(s.breakpoints)
    bound = max(q.denominator for q in points)
    frontier = set(points)
    while frontier:
        images = {eval_pl(s, q) for q in frontier}
        frontier = images - points
        points |= frontier
    assert all(q.denominator <= bound for q in points), "denominator bound violated"
    return Partition(tuple(sorted(points)))


def build_markov(s: PLFunc, p: Partition) -> MarkovSystem:
    """Markov graph and matrix of ``s`` over partition ``p``.

    ``i -> j`` is an edge when the image of interval ``i`` covers interval
    ``j``; the matrix entry on an edge is ``1/|slope_i|``.  A flat piece
    produces an empty row.
    """
    if not set(s.breakpoints) <= set(p.points):
        raise ValueError("partition must contain every breakpoint of s")
    intervals = p.intervals
    slopes, graph, matrix = [], [], []
    for u, v in intervals:
        a, _ = s.pieces[s.piece_index((u + v) / 2)]
        lo, hi = sorted((eval_pl(s, u), eval_pl(s, v)))
        targets = tuple(j for j, (x, y) in enumerate(intervals) if lo <= x and y <= hi)
        w = Fraction(1, abs(a)) if a else Fraction(0)
        slopes.append(a)
        graph.append(targets)
        matrix.append(tuple(w if j in targets else Fraction(0) for j in range(len(intervals))))
    return MarkovSystem(p, tuple(slopes), tuple(graph), tuple(matrix))


def markov_system(s: PLFunc) -> MarkovSystem:
    return build_markov(s, stabilize_partition(s))


def _adjacency(m: MarkovSystem) -> np.ndarray:
    r = m.size
    adj = np.zeros((r, r), dtype=bool)
    for i, targets in enumerate(m.graph):
        adj[i, list(targets)] = True
    return adj


def _period(graph, root=0) -> int:
    level = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in graph[u]:
            if v not in level:
                level[v] = level[u] + 1
                queue.append(v)
    g = 0
    for u in level:
        for v in graph[u]:
            g = gcd(g, level[u] + 1 - level[v])
    return g


def positive_power_exists(adj: np.ndarray) -> bool:
    """True iff some power ``A^k`` with ``k <= r^2`` is entrywise positive."""
    r = adj.shape[0]
    a = adj.astype(np.int64)
    power = a.copy()
    for _ in range(r * r):
        if power.all():
            return True
        power = ((power @ a) > 0).astype(np.int64)
    return bool(power.all())


def graph_analysis(m: MarkovSystem) -> GraphInfo:
    """Strong connectivity, period and primitivity of the Markov graph.

    A vertex needs a closed walk through it to count as strongly
    connected, so a single interval without a self loop is not.
    """
    adj = _adjacency(m)
    n_comp, _ = connected_components(adj, directed=True, connection="strong")
    strongly = n_comp == 1 and all(len(t) > 0 for t in m.graph)
    period = _period(m.graph) if strongly else 0
    primitive = strongly and period == 1
    assert primitive == positive_power_exists(adj), "primitivity criteria disagree"
    return GraphInfo(strongly, period, primitive)


def markov_to_dict(m: MarkovSystem) -> dict:
    return {
        "partition": [str(q) for q in m.partition.points],
        "slopes": list(m.slopes),
        "lengths": [str(x) for x in m.lengths],
        "graph": [list(t) for t in m.graph],
        "matrix": [[str(x) for x in row] for row in m.matrix],
    }
