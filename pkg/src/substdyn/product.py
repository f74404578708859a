"""Fractional tent maps from two-variable product-logic substitutions.

For integers ``a, b >= 1`` the substitution

    x0 -> [((x0 -> x1) -> x1) -> x0 * (x0 -> x1)]^a
    x1 -> [(x0 -> x1) -> x1]^b

acts on the 1-simplex (identified with [0, 1]) through a symmetric
piecewise-fractional map depending only on ``q = a/b``::

    x / ((1 - 2q) x + q)                    on [0, 1/2]
    (1 - x) / ((1 - 2q)(1 - x) + q)         on (1/2, 1]

``q > 1`` attracts almost every point to 0, ``q < 1`` gives an exact map,
and ``q = 1`` is a slow continued fraction algorithm that has dense
orbits almost everywhere yet no ergodic absolutely continuous measure.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

__all__ = [
    "FracMap", "Regime", "SquarePoint", "LogSquarePoint", "frac_eval",
    "frac_derivative", "frac_classify", "frac_orbit", "gauss_step", "cf_expand",
    "cf_value", "slow_cf_check", "log_square_step", "square_step", "hyperbola_monotone", "deriv_bound_check",
    "min_abs_derivative", "lower_half_count", "frac_histogram",
]

Number = Union[Fraction, float]


class Regime(enum.Enum):
    ATTRACTS_TO_ZERO = "AttractsToZero"
    EXACT = "Exact"
    GENERIC_NOT_ERGODIC = "GenericNotErgodic"


@dataclass(frozen=True)
class FracMap:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a and b must be positive integers, got {self.a}, {self.b}")

    @property
    def q(self) -> Fraction:
        return Fraction(self.a, self.b)

    def __call__(self, x):
        return frac_eval(self, x)


@dataclass(frozen=True)
class SquarePoint:
    x0: Fraction
    x1: Fraction

    def __post_init__(self):
        if not (0 < self.x0 <= 1 and 0 < self.x1 <= 1):
            raise ValueError(f"point ({self.x0}, {self.x1}) not in (0, 1]^2")

    @property
    def product(self):
        return self.x0 * self.x1


def frac_eval(m: FracMap, x: Number) -> Number:
    """Evaluate the fractional tent map; exact for ``Fraction`` input."""
    if not 0 <= x <= 1:
        raise ValueError(f"x = {x} outside [0, 1]")
    q = m.q if isinstance(x, (Fraction, int)) else float(m.q)
    y = x if x <= Fraction(1, 2) else 1 - x
    den = (1 - 2 * q) * y + q
    assert den > 0
    return y / den


def frac_derivative(m: FracMap, x: float) -> float:
    """Derivative away from 1/2 (sign included)."""
    q = float(m.q)
    if x <= 0.5:
        return q / ((1 - 2 * q) * x + q) ** 2
    y = 1 - x
    return -q / ((1 - 2 * q) * y + q) ** 2


def frac_classify(m: FracMap) -> Regime:
    if m.q > 1:
        return Regime.ATTRACTS_TO_ZERO
    if m.q < 1:
        return Regime.EXACT
    return Regime.GENERIC_NOT_ERGODIC


def frac_orbit(m: FracMap, x0: Number, n: int) -> list:
    xs = [x0]
    for _ in range(n):
        xs.append(frac_eval(m, xs[-1]))
    return xs


# ---------------------------------------------------------------------------
# continued fractions

def gauss_step(x: Fraction) -> Fraction:
    """Gauss map ``1/x - floor(1/x)``, with 0 fixed."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x = {x} outside [0, 1]")
    if x == 0:
        return x
    inv = 1 / x
    return inv - math.floor(inv)


def cf_expand(x: Fraction) -> list[int]:
    """Digits ``[a_1, ..., a_k]`` of ``x = [0; a_1, ..., a_k]`` in [0, 1].

    The expansion is canonical: the last digit is at least 2, except
    that 1 expands as ``[1]``.  0 has no digits.
    """
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x = {x} outside [0, 1]")
    digits = []
    num, den = x.numerator, x.denominator
    while num:
        d, r = divmod(den, num)
        digits.append(d)
        num, den = r, num
    return digits


def cf_value(digits: list[int]) -> Fraction:
    """Inverse of :func:`cf_expand`."""
    x = Fraction(0)
    for d in reversed(digits):
        x = 1 / (d + x)
    return x


def slow_cf_check(x: Fraction) -> bool:
    """Check the q = 1 continued-fraction action at ``x`` in (0, 1].

    On (1/2, 1] the map must agree with the Gauss map; on (0, 1/2] it must
    decrement the first digit.  The map side uses :func:`frac_eval`, the
    other side works on digits only.
    """
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"x = {x} outside (0, 1]")
    image = frac_eval(FracMap(1, 1), x)
    digits = cf_expand(x)
    if x > Fraction(1, 2):
        return image == gauss_step(x) and cf_expand(image) == digits[1:]
    return cf_expand(image) == [digits[0] - 1] + digits[1:]


def lower_half_count(x: Fraction) -> tuple[int, int]:
    """Run the q = 1 map from rational ``x`` for ``n = a_1 + ... + a_k`` steps.

    Returns ``(hits, n)`` where ``hits`` counts the steps ``0 <= i < n``
    with the orbit point in [0, 1/2].
    """
    m = FracMap(1, 1)
    n = sum(cf_expand(x))
    hits = 0
    y = Fraction(x)
    for _ in range(n):
        hits += y <= Fraction(1, 2)
        y = frac_eval(m, y)
    return hits, n


# ---------------------------------------------------------------------------
# the square map

def square_step(p: SquarePoint, m: FracMap) -> SquarePoint:
    """One step of the induced map on (0, 1]^2 (multiplicative coordinates)."""
    lo, hi = min(p.x0, p.x1), max(p.x0, p.x1)
    return SquarePoint((lo / hi) ** m.a, hi ** m.b)


@dataclass(frozen=True)
class LogSquarePoint:
    """The point ``(r**u, r**v)`` of (0, 1]^2 for a fixed base ``0 < r < 1``.

    Any such base is an order isomorphism onto the nonnegative exponents,
    and in these coordinates the square map is piecewise integer-linear,
    so orbits stay exact without the size blow-up of rational coordinates.
    """
    u: Fraction
    v: Fraction

    def __post_init__(self):
        if self.u < 0 or self.v < 0:
            raise ValueError(f"exponents ({self.u}, {self.v}) must be nonnegative")

    @property
    def log_product(self):
        """Exponent of ``x0 * x1``; the product grows when this shrinks."""
        return self.u + self.v


def log_square_step(p: LogSquarePoint, m: FracMap) -> LogSquarePoint:
    """:func:`square_step` in exponent coordinates: ``(a|u - v|, b min(u, v))``."""
    return LogSquarePoint(m.a * abs(p.u - p.v), m.b * min(p.u, p.v))


def hyperbola_monotone(p: Union[SquarePoint, LogSquarePoint], n: int) -> bool:
    """For a = b = 1, whether ``x0 * x1`` never decreases along ``n`` steps.

    Rational coordinates roughly double in size every step, so long
    orbits should be given as :class:`LogSquarePoint`.
    """
    m = FracMap(1, 1)
    if isinstance(p, LogSquarePoint):
        step, key = log_square_step, (lambda z: -z.log_product)
    else:
        step, key = square_step, (lambda z: z.product)
    c = key(p)
    for _ in range(n):
        p = step(p, m)
        if key(p) < c:
            return False
        c = key(p)
    return True


# ---------------------------------------------------------------------------
# expansion bounds

def _grid(m: FracMap, grid_size: int, kinks) -> np.ndarray:
    xs = (np.arange(grid_size) + 0.5) / grid_size
    keep = np.ones_like(xs, dtype=bool)
    for k in kinks:
        keep &= np.abs(xs - k) > 1e-12
    return xs[keep]


def min_abs_derivative(m: FracMap, grid_size: int) -> float:
    xs = _grid(m, grid_size, [0.5])
    return float(min(abs(frac_derivative(m, x)) for x in xs))


def deriv_bound_check(m: FracMap, grid_size: int) -> float:
    """Grid minimum of ``|(s o s)'|`` for q < 1.

    The grid skips 1/2 and its two preimages.  For q < 1/2 the result is
    asserted to reach ``(2q + 1)^2`` up to 1e-9.
    """
    q = float(m.q)
    if m.q >= 1:
        raise ValueError("derivative bound needs q < 1")
    if grid_size < 10:
        raise ValueError("grid_size must be at least 10")
    d = q / (2 * q + 1)
    xs = _grid(m, grid_size, [0.5, d, 1 - d])
    best = math.inf
    for x in xs:
        y = float(frac_eval(m, float(x)))
        best = min(best, abs(frac_derivative(m, y) * frac_derivative(m, x)))
    if m.q < Fraction(1, 2):
        assert best >= (2 * q + 1) ** 2 - 1e-9, best
    return best


def frac_histogram(m: FracMap, x0: float, n: int, bins: int = 20,
                   burn_in: int = 1000) -> np.ndarray:
    """Normalized visit histogram of a floating orbit (validation only)."""
    q = float(m.q)
    x = float(x0)
    counts = np.zeros(bins, dtype=np.int64)
    for i in range(burn_in + n):
        y = x if x <= 0.5 else 1.0 - x
        x = y / ((1 - 2 * q) * y + q)
        if i >= burn_in:
            counts[min(int(x * bins), bins - 1)] += 1
    return counts / max(n, 1)
