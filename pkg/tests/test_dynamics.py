import io
import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given

from substdyn.classify import classify
from substdyn.corpus import corpus
from substdyn.dynamics import (birkhoff_frequencies, dense_orbit_test, grid_orbit,
                               interval_index, iterate_exact, iterate_float,
                               write_frequency_csv, write_orbit_csv)
from substdyn.markov import markov_system
from substdyn.mcnaughton import constant

from .strategies import rationals01


def test_exact_tent_orbit(tent):
    orb = iterate_exact(tent, F(1, 5), 5)
    assert orb.points == [F(1, 5), F(2, 5), F(4, 5), F(2, 5), F(4, 5), F(2, 5)]
    assert orb.eventually_periodic == (1, 2)


def test_exact_fixed_points(s_map, ident):
    assert iterate_exact(s_map, 0, 4).points == [0] * 5
    orb = iterate_exact(ident, F(3, 7), 3)
    assert orb.points == [F(3, 7)] * 4
    assert orb.eventually_periodic == (0, 1)


@given(rationals01(200))
def test_exact_orbit_denominators_bounded(x):
    for e in corpus():
        if e.kind == "pl":
            orb = iterate_exact(e.map, x, x.denominator + 1)  # pigeonhole
            assert all(x.denominator % p.denominator == 0 for p in orb.points)
            assert orb.eventually_periodic is not None


def test_float_tent(tent):
    pts = iterate_float(tent, 0.2, 3).points
    assert pts == pytest.approx([0.2, 0.4, 0.8, 0.4], abs=1e-15)


def test_float_constant():
    assert iterate_float(constant(0), 0.73, 5).points[1:] == [0.0] * 5


def test_float_matches_exact(tent, s_map):
    for f in (tent, s_map):
        x0 = 0.1234567
        exact = iterate_exact(f, F(x0), 20).points
        approx = iterate_float(f, x0, 20).points
        assert max(abs(float(a) - b) for a, b in zip(exact, approx)) < 1e-9


def test_float_rejects_bad_start(tent):
    with pytest.raises(ValueError):
        iterate_float(tent, 1.5, 3)


def test_interval_index_ties():
    pts = [F(0), F(1, 2), F(1)]
    assert interval_index(pts, 0) == 0
    assert interval_index(pts, F(1, 2)) == 0
    assert interval_index(pts, F(3, 4)) == 1
    assert interval_index(pts, 1) == 1


def test_birkhoff_tent(tent):
    m = markov_system(tent)
    tab = birkhoff_frequencies(tent, 0.1234567, 10 ** 6, m.partition, [F(1, 2), F(1, 2)])
    assert tab.counts.sum() == tab.total == 10 ** 6
    assert tab.frequencies == pytest.approx([0.5, 0.5], abs=0.01)


def test_birkhoff_s(s_map):
    m = markov_system(s_map)
    # v_i * len_i for v = (6/5, 6/5, 9/5, 3/5, 3/5)
    ref = [F(3, 10), F(1, 10), F(3, 10), F(1, 10), F(1, 5)]
    assert classify(s_map).density.masses == tuple(ref)
    tab = birkhoff_frequencies(s_map, 0.3141592, 10 ** 6, m.partition, ref)
    assert tab.max_deviation() < 0.01


def test_birkhoff_empty(tent):
    tab = birkhoff_frequencies(tent, 0.3, 0, markov_system(tent).partition)
    assert tab.total == 0
    assert list(tab.frequencies) == [0.0, 0.0]


def test_birkhoff_boundary_counts_left(ident):
    from substdyn.markov import Partition
    p = Partition((F(0), F(1, 2), F(1)))
    # the grid never hits 1/2 exactly, so use the endpoints
    assert list(birkhoff_frequencies(ident, 0.0, 10, p).counts) == [10, 0]
    assert list(birkhoff_frequencies(ident, 1.0, 10, p).counts) == [0, 10]


def test_birkhoff_convergence_property():
    rng = random.Random(20260415)
    for e in corpus():
        if e.kind != "pl":
            continue
        c = classify(e.map)
        if not c.ergodic:
            continue
        m = markov_system(e.map)
        good = sum(
            birkhoff_frequencies(e.map, rng.random(), 10 ** 6, m.partition,
                                 c.density.masses).max_deviation() < 0.01
            for _ in range(100)
        )
        assert good >= 95, e.name


def test_period_two_alternation(t_map):
    orbit = grid_orbit(t_map, 0.4142135, 10_000)
    low = orbit[1:] < 2 / 3
    assert np.all(low[1:] != low[:-1])


def test_dense_orbit(tent, ident, flipped):
    assert dense_orbit_test(tent, 0.1234567, 10 ** 5, 0.01)
    assert not dense_orbit_test(ident, 0.5, 1000, 0.49)
    assert not dense_orbit_test(flipped, 0.3, 1000, 0.1)


def test_orbit_csv(tent):
    buf = io.StringIO()
    write_orbit_csv(iterate_exact(tent, F(1, 5), 2), buf)
    assert buf.getvalue().splitlines() == ["step,value", "0,1/5", "1,2/5", "2,4/5"]


def test_frequency_csv(tent):
    buf = io.StringIO()
    tab = birkhoff_frequencies(tent, 0.2, 1000, markov_system(tent).partition, [F(1, 2)] * 2)
    write_frequency_csv(tab, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "interval,lo,hi,count,freq,reference"
    assert lines[1].startswith("0,0,1/2,") and lines[1].endswith(",1/2")
