import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from substdyn.mcnaughton import eval_pl
from substdyn.product import (FracMap, Regime, SquarePoint, cf_expand, cf_value,
                              deriv_bound_check, frac_classify, frac_eval, frac_histogram,
                              gauss_step, hyperbola_monotone, log_square_step, LogSquarePoint,
                              lower_half_count,
                              min_abs_derivative, slow_cf_check, square_step)

from .strategies import rationals01

ONE = FracMap(1, 1)


def positive_rationals01(max_den=1000):
    return rationals01(max_den).filter(lambda x: x > 0)


def test_frac_eval_examples():
    assert frac_eval(ONE, F(2, 5)) == F(2, 3)
    assert frac_eval(FracMap(1, 2), 0.3) == pytest.approx(0.6, abs=1e-15)
    for a, b in [(1, 1), (2, 1), (1, 3), (5, 7)]:
        assert frac_eval(FracMap(a, b), F(0)) == 0
        assert frac_eval(FracMap(a, b), F(1, 2)) == 1
        assert frac_eval(FracMap(a, b), F(1)) == 0


def test_depends_only_on_ratio():
    for x in [F(1, 7), F(3, 5), F(9, 10)]:
        assert frac_eval(FracMap(2, 4), x) == frac_eval(FracMap(1, 2), x)


def test_bad_parameters():
    with pytest.raises(ValueError):
        FracMap(0, 1)
    with pytest.raises(ValueError):
        frac_eval(ONE, F(3, 2))


@pytest.mark.parametrize("a, b, regime", [
    (2, 1, Regime.ATTRACTS_TO_ZERO),
    (3, 2, Regime.ATTRACTS_TO_ZERO),
    (1, 3, Regime.EXACT),
    (3, 4, Regime.EXACT),
    (1, 1, Regime.GENERIC_NOT_ERGODIC),
    (4, 4, Regime.GENERIC_NOT_ERGODIC),
])
def test_regimes(a, b, regime):
    assert frac_classify(FracMap(a, b)) is regime


@settings(max_examples=200)
@given(st.integers(1, 9), st.integers(1, 9), rationals01(500))
def test_symmetry(a, b, x):
    m = FracMap(a, b)
    assert frac_eval(m, x) == frac_eval(m, 1 - x)


@given(x=rationals01(500))
def test_half_is_tent(tent, x):
    assert frac_eval(FracMap(1, 2), x) == eval_pl(tent, x)


def test_gauss_examples():
    assert gauss_step(F(2, 5)) == F(1, 2)
    assert gauss_step(F(0)) == 0
    assert cf_expand(F(5, 8)) == [1, 1, 1, 2]
    assert gauss_step(F(5, 8)) == F(3, 5)
    assert cf_expand(F(3, 5)) == [1, 1, 2]


def test_cf_examples():
    assert cf_expand(F(2, 5)) == [2, 2]
    assert cf_expand(F(1)) == [1]
    assert cf_expand(F(1, 2)) == [2]
    assert cf_expand(F(0)) == []


@given(positive_rationals01())
def test_cf_canonical(x):
    digits = cf_expand(x)
    assert cf_value(digits) == x
    assert all(d >= 1 for d in digits)
    assert digits == [1] or digits[-1] >= 2
    assert cf_expand(gauss_step(x)) == digits[1:]


def test_slow_cf_examples():
    assert slow_cf_check(F(2, 5))
    assert frac_eval(ONE, F(2, 3)) == F(1, 2) == gauss_step(F(2, 3))
    assert slow_cf_check(F(2, 3))
    assert slow_cf_check(F(1))


@given(positive_rationals01())
def test_slow_cf_property(x):
    assert slow_cf_check(x)


@given(positive_rationals01(300))
def test_orbit_contains_gauss_orbit(x):
    slow = [x]
    while slow[-1] != 0:
        slow.append(frac_eval(ONE, slow[-1]))
    fast = [x]
    while fast[-1] != 0:
        fast.append(gauss_step(fast[-1]))
    it = iter(slow)
    assert all(any(y == z for z in it) for y in fast)  # subsequence
    assert len(slow) - 1 == sum(cf_expand(x))


@given(positive_rationals01())
def test_lower_half_frequency(x):
    digits = cf_expand(x)
    hits, n = lower_half_count(x)
    assert n == sum(digits)
    assert F(hits, n) == F(n - len(digits), n)


def test_attraction_for_q_above_one():
    m = FracMap(2, 1)
    x = 0.3
    for step in range(200):
        x = frac_eval(m, x)
        if x < 1e-6:
            break
    assert x < 1e-6
    rng = random.Random(7)
    for a, b in [(2, 1), (3, 2), (5, 4)]:
        m = FracMap(a, b)
        for _ in range(50):
            x = rng.random()
            for _ in range(20_000):
                x = frac_eval(m, x)
                if x < 1e-6:
                    break
            assert x < 1e-6


def test_square_step_examples():
    assert square_step(SquarePoint(F(1, 5), F(1, 2)), ONE) == SquarePoint(F(2, 5), F(1, 2))
    c = F(3, 7)
    assert square_step(SquarePoint(c, c), ONE) == SquarePoint(F(1), c)
    assert square_step(SquarePoint(F(1, 2), F(1, 2)), FracMap(2, 1)) == SquarePoint(F(1), F(1, 2))
    with pytest.raises(ValueError):
        SquarePoint(F(0), F(1, 2))


def test_hyperbola_examples():
    p = SquarePoint(F(1, 5), F(1, 2))
    assert hyperbola_monotone(p, 10)
    assert square_step(p, ONE).product == F(1, 5)
    assert hyperbola_monotone(SquarePoint(F(1), F(1)), 10)


def nonneg_rationals(max_den=50):
    return st.integers(0, 20 * max_den).flatmap(
        lambda k: st.integers(1, max_den).map(lambda d: F(k, d)))


@settings(max_examples=100, deadline=None)
@given(nonneg_rationals(), nonneg_rationals())
def test_hyperbola_property(u, v):
    assert hyperbola_monotone(LogSquarePoint(u, v), 100)


@given(st.integers(0, 12), st.integers(0, 12), st.integers(1, 3), st.integers(1, 3))
def test_log_coordinates_conjugate(u, v, a, b):
    # points (2^-u, 2^-v): both representations stay exact for a few steps
    m = FracMap(a, b)
    p, lp = SquarePoint(F(1, 2 ** u), F(1, 2 ** v)), LogSquarePoint(F(u), F(v))
    for _ in range(6):
        p, lp = square_step(p, m), log_square_step(lp, m)
        assert (p.x0, p.x1) == (F(1, 2 ** lp.u), F(1, 2 ** lp.v))


def test_rational_hyperbola_short_orbits():
    rng = random.Random(3)
    for _ in range(50):
        p = SquarePoint(F(rng.randint(1, 40), 40), F(rng.randint(1, 40), 40))
        assert hyperbola_monotone(p, 12)


def test_deriv_bound_examples():
    assert deriv_bound_check(FracMap(1, 4), 10_000) >= 2.25 - 1e-9
    assert deriv_bound_check(FracMap(1, 2), 1000) == pytest.approx(4.0, abs=1e-12)
    assert min_abs_derivative(FracMap(3, 4), 10_000) >= 4 / 3 - 1e-12
    with pytest.raises(ValueError):
        deriv_bound_check(ONE, 100)


@pytest.mark.parametrize("a, b", [(1, 3), (1, 4), (2, 5), (3, 4)])
def test_expansion_for_q_below_one(a, b):
    m = FracMap(a, b)
    q = float(m.q)
    best = deriv_bound_check(m, 5000)
    assert best > 1
    if q < 0.5:
        assert best >= (2 * q + 1) ** 2 - 1e-9


@pytest.mark.parametrize("a, b", [(1, 4), (3, 4)])
def test_histograms_agree_between_starts(a, b):
    m = FracMap(a, b)
    h1 = frac_histogram(m, 0.1234567, 200_000)
    h2 = frac_histogram(m, 0.7654321, 200_000)
    assert np.abs(h1 - h2).sum() < 0.05
