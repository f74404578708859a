"""Fractional tent maps from product logic, parameter q = a/b.

Run: python demos/product_logic.py
"""

from fractions import Fraction

from substdyn.product import (FracMap, LogSquarePoint, SquarePoint, cf_expand,
                              deriv_bound_check, frac_classify, frac_eval, frac_histogram,
                              frac_orbit, hyperbola_monotone, lower_half_count,
                              square_step)

for a, b in [(2, 1), (3, 2), (1, 1), (1, 2), (1, 4)]:
    print(f"q = {Fraction(a, b)}: {frac_classify(FracMap(a, b)).value}")

# q > 1: almost everything falls into 0
orbit = frac_orbit(FracMap(2, 1), 0.3, 40)
print("\nq = 2 orbit of 0.3, every 10th point:", [f"{x:.2e}" for x in orbit[::10]])

# q = 1: the slow continued fraction algorithm
m = FracMap(1, 1)
x = Fraction(7, 19)
print(f"\nq = 1 from {x} = [0;{','.join(map(str, cf_expand(x)))}]")
y = x
for _ in range(sum(cf_expand(x))):
    side = "lower" if y <= Fraction(1, 2) else "upper"
    print(f"  {str(y):>6}  {side}  digits {cf_expand(y)}")
    y = frac_eval(m, y)
hits, n = lower_half_count(x)
print(f"  lower-half frequency {hits}/{n}, digits {len(cf_expand(x))}")

# q < 1: the second iterate expands uniformly
for b in (3, 4):
    q = Fraction(1, b)
    print(f"\nq = {q}: min |(s o s)'| = {deriv_bound_check(FracMap(1, b), 10_000):.6f}, "
          f"(2q+1)^2 = {float((2 * q + 1) ** 2):.6f}")
    print("  visit histogram:", " ".join(f"{h:.3f}" for h in frac_histogram(FracMap(1, b), 0.3, 200_000, bins=8)))

# the two-variable map on the square, a = b = 1: x0*x1 never decreases
p = SquarePoint(Fraction(3, 7) ** 5, Fraction(3, 7) ** 8)
print("\nsquare map, a = b = 1")
for _ in range(5):
    print(f"  product {float(p.product):.6g}")
    p = square_step(p, m)
print("monotone over 100 steps:", hyperbola_monotone(LogSquarePoint(Fraction(31, 3), Fraction(7)), 100))
