"""Markov partitions, matrices and invariant densities of the two worked maps.

Run: python demos/markov_analysis.py
"""

from substdyn import classify
from substdyn.corpus import get
from substdyn.markov import markov_system

for name in ("example14_s", "example14_t", "tent", "flip", "truncated_double"):
    entry = get(name)
    s = entry.map
    m = markov_system(s)
    c = classify(s)
    print(f"== {name}: {s}")
    print("partition:", ", ".join(map(str, m.partition.points)))
    for row in m.matrix:
        print("  " + " ".join(f"{str(x):>4}" for x in row))
    print(f"strongly connected {c.strongly_connected}, period {c.period}, primitive {c.primitive}")
    print(f"invertible {c.invertible}  generic {c.generic}  ergodic {c.ergodic}  "
          f"mixing {c.mixing}  exact {c.exact}")
    if c.density is not None:
        print("density:", ", ".join(map(str, c.density.values)))
        print("masses :", ", ".join(map(str, c.density.masses)))
    print()
