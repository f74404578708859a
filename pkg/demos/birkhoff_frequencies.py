"""Long orbits and visit frequencies.

Floating point is useless here: the tent map sends every float (a dyadic
rational) to 0 in a few dozen steps.  The dynamics module runs orbits on a
fine rational grid instead, exactly in 64-bit integers.

Run: python demos/birkhoff_frequencies.py
"""

import random

from substdyn import classify
from substdyn.corpus import get
from substdyn.dynamics import (birkhoff_frequencies, dense_orbit_test,
                               iterate_exact, iterate_float)
from substdyn.markov import markov_system

tent = get("tent").map
print("float tent orbit of 0.1:", iterate_float(tent, 0.1, 60).points[-3:])
print("exact orbit of 1/5:", [str(x) for x in iterate_exact(tent, "1/5", 6).points])

for name in ("example14_s", "example14_t", "tent"):
    s = get(name).map
    m = markov_system(s)
    masses = classify(s).density.masses
    x0 = random.Random(1).random()
    table = birkhoff_frequencies(s, x0, 10 ** 6, m.partition, masses)
    print(f"\n{name}: start {x0:.6f}, 10^6 steps")
    for (lo, hi), f, ref in zip(m.partition.intervals, table.frequencies, masses):
        print(f"  [{lo}, {hi}]  {f:.4f}  expected {float(ref):.4f}")
    print("  max deviation", round(table.max_deviation(), 5))
    print("  orbit 0.01-dense:", dense_orbit_test(s, x0, 10 ** 5, 0.01))
