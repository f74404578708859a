"""Orbits, Birkhoff visit frequencies and dense-orbit tests.

Long orbits of McNaughton maps cannot be simulated in binary floating
point: every float is dyadic, and maps with even slopes such as the tent
map send every dyadic rational to 0 within about 55 steps.  Long-run
statistics are therefore computed on the grid ``{k/N : 0 <= k <= N}``
for a large prime ``N``.  Integer slopes and intercepts keep the grid
invariant, so the orbit is computed exactly in 64-bit integers:
``k -> a*k + c*N``.  Classification never depends on these simulations.
"""

from __future__ import annotations

import csv
import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numba
import numpy as np
from sympy import prevprime

from .markov import Partition
from .mcnaughton import PLFunc, eval_pl

__all__ = [
    "OrbitRecord", "FrequencyTable", "iterate_exact", "iterate_float",
    "grid_orbit", "birkhoff_frequencies", "dense_orbit_test",
    "interval_index", "write_orbit_csv", "write_frequency_csv",
]

Number = Union[Fraction, float]


@dataclass
class OrbitRecord:
    start: Number
    points: list
    eventually_periodic: Optional[tuple[int, int]] = None  # (preperiod, period)


@dataclass
class FrequencyTable:
    partition: Partition
    counts: np.ndarray
    total: int
    reference: Optional[tuple[Fraction, ...]] = None

    @property
    def frequencies(self) -> np.ndarray:
        if self.total == 0:
            return np.zeros(len(self.counts))
        return self.counts / self.total

    def max_deviation(self) -> float:
        if self.reference is None:
            raise ValueError("no reference measure available")
        ref = np.array([float(x) for x in self.reference])
        return float(np.max(np.abs(self.frequencies - ref)))


def interval_index(points: Sequence, x) -> int:
    """Interval of ``x``; a partition point counts for the interval on its left.

    0 belongs to the first interval.
    """
    return max(bisect_left(points, x) - 1, 0)


def iterate_exact(s: PLFunc, x0, n: int) -> OrbitRecord:
    """``n`` exact steps from rational ``x0``, with cycle detection."""
    x = Fraction(x0)
    if not 0 <= x <= 1:
        raise ValueError(f"start {x} outside [0, 1]")
    points = [x]
    seen = {x: 0}
    cycle = None
    for k in range(1, n + 1):
        x = eval_pl(s, x)
        points.append(x)
        if cycle is None:
            if x in seen:
                cycle = (seen[x], k - seen[x])
            else:
                seen[x] = k
    return OrbitRecord(Fraction(x0), points, cycle)


def iterate_float(s: PLFunc, x0: float, n: int) -> OrbitRecord:
    """``n`` floating steps, clamped to [0, 1] after each one.

    Overshoot of more than a few ulps, or a NaN, raises ``FloatingPointError``.
    Use for short orbits only (see the module docstring).
    """
    x = float(x0)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"start {x} outside [0, 1]")
    bps = [float(q) for q in s.breakpoints]
    pieces = s.pieces
    points = [x]
    for _ in range(n):
        i = min(max(bisect_left(bps, x) - 1, 0), len(pieces) - 1)
        a, c = pieces[i]
        y = a * x + c
        if math.isnan(y):
            raise FloatingPointError("orbit produced NaN")
        tol = 4 * math.ulp(1.0) * max(1, abs(a))
        if y < -tol or y > 1 + tol:
            raise FloatingPointError(f"orbit left [0, 1]: {y!r}")
        x = min(max(y, 0.0), 1.0)
        points.append(x)
    return OrbitRecord(float(x0), points)


# ---------------------------------------------------------------------------
# integer-grid engine

@dataclass(frozen=True)
class _Grid:
    modulus: int
    thresholds: np.ndarray  # floor(q * N) for interior breakpoints
    slopes: np.ndarray
    offsets: np.ndarray     # intercept * N

    @classmethod
    def for_map(cls, s: PLFunc) -> "_Grid":
        amax = max(abs(a) for a, _ in s.pieces)
        cmax = max(abs(c) for _, c in s.pieces)
        n = prevprime(2 ** 62 // (amax + cmax + 1))
        return cls(
            n,
            _floor_scaled(s.breakpoints[1:-1], n),
            np.array([a for a, _ in s.pieces], dtype=np.int64),
            np.array([c * n for _, c in s.pieces], dtype=np.int64),
        )

    def to_grid(self, x: float) -> int:
        return int(round(float(x) * self.modulus))


def _floor_scaled(points, n: int) -> np.ndarray:
    return np.array([(Fraction(q) * n).__floor__() for q in points], dtype=np.int64)


@numba.njit(cache=True)
def _run_grid(k0, n, thresholds, slopes, offsets, count_thresholds, counts, out):
    # thresholds are sorted; k sits in piece #(thresholds < k)
    k = k0
    store = out.shape[0] > 0
    for step in range(n):
        counts[np.searchsorted(count_thresholds, k)] += 1
        if store:
            out[step] = k
        i = np.searchsorted(thresholds, k)
        k = slopes[i] * k + offsets[i]
    return k


def grid_orbit(s: PLFunc, x0: float, n: int) -> np.ndarray:
    """The first ``n`` orbit points of ``x0`` (rounded onto the grid) as floats."""
    grid = _Grid.for_map(s)
    out = np.empty(n, dtype=np.int64)
    counts = np.zeros(1, dtype=np.int64)
    _run_grid(grid.to_grid(x0), n, grid.thresholds, grid.slopes, grid.offsets,
              np.empty(0, dtype=np.int64), counts, out)
    return out / grid.modulus


def birkhoff_frequencies(s: PLFunc, x0: float, n: int, p: Partition,
                         reference: Optional[Sequence[Fraction]] = None) -> FrequencyTable:
    """Fraction of the orbit points ``x_0 .. x_{n-1}`` falling in each interval.

    Parameters
    ----------
    s : PLFunc
    x0 : float
        Start point; it is rounded to the nearest grid point.
    n : int
        Number of orbit points counted.
    p : Partition
        Intervals to count.  A point equal to a partition point counts
        for the interval on its left.
    reference : sequence of Fraction, optional
        Expected frequencies, typically the invariant masses ``v_i * len_i``.
    """
    if not 0 <= x0 <= 1:
        raise ValueError(f"start {x0} outside [0, 1]")
    grid = _Grid.for_map(s)
    counts = np.zeros(len(p), dtype=np.int64)
    _run_grid(grid.to_grid(x0), n, grid.thresholds, grid.slopes, grid.offsets,
              _floor_scaled(p.points[1:-1], grid.modulus), counts,
              np.empty(0, dtype=np.int64))
    ref = None if reference is None else tuple(Fraction(x) for x in reference)
    return FrequencyTable(p, counts, n, ref)


def dense_orbit_test(s: PLFunc, x0: float, n: int, epsilon: float) -> bool:
    """Whether the first ``n`` orbit points come within ``epsilon`` of every
    point of the grid ``{0, epsilon/2, epsilon, ..., 1}``.

    This is only a surrogate for genericity, which is about orbits in the
    spectrum; it is meaningful for one-variable maps of [0, 1].
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    orbit = np.sort(grid_orbit(s, x0, max(n, 1)))
    probes = np.append(np.arange(0.0, 1.0, epsilon / 2), 1.0)
    idx = np.searchsorted(orbit, probes)
    left = orbit[np.clip(idx - 1, 0, len(orbit) - 1)]
    right = orbit[np.clip(idx, 0, len(orbit) - 1)]
    dist = np.minimum(np.abs(probes - left), np.abs(probes - right))
    return bool(np.all(dist <= epsilon))


# ---------------------------------------------------------------------------
# CSV export

def write_orbit_csv(orbit: OrbitRecord, fh) -> None:
    w = csv.writer(fh)
    w.writerow(["step", "value"])
    for k, x in enumerate(orbit.points):
        w.writerow([k, str(x) if isinstance(x, Fraction) else repr(float(x))])


def write_frequency_csv(table: FrequencyTable, fh) -> None:
    w = csv.writer(fh)
    w.writerow(["interval", "lo", "hi", "count", "freq", "reference"])
    freqs = table.frequencies
    for i, (lo, hi) in enumerate(table.partition.intervals):
        ref = "" if table.reference is None else str(table.reference[i])
        w.writerow([i, str(lo), str(hi), int(table.counts[i]), repr(float(freqs[i])), ref])
