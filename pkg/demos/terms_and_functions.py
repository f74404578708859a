"""Terms over one variable and the piecewise-linear functions they denote.

Run: python demos/terms_and_functions.py
"""

from fractions import Fraction

from substdyn import compile_term, eval_term, format_term, parse
from substdyn.mcnaughton import compose, pl_to_json

# The tent map is a one-variable term: min(1 - (1-x)*(1-x), 1 - x*x) in
# Lukasiewicz connectives.
tent = parse("!( !x0 * !x0 ) /\\ !( x0 * x0 )")
print("term     :", format_term(tent))

f = compile_term(tent)
print("function :", f)
print("json     :", pl_to_json(f))

# Compiled functions agree with direct evaluation at every rational.
for x in [Fraction(0), Fraction(1, 5), Fraction(1, 2), Fraction(7, 9)]:
    print(f"  x = {x!s:>4}  term -> {eval_term(tent, [x])!s:>4}   function -> {f(x)}")

# Composition is the second iterate; breakpoints double.
print("tent o tent:", compose(f, f))

# Sugar: x0^3 is x0 * x0 * x0, and a <-> b is (a -> b) /\ (b -> a).
print(compile_term(parse("x0^3")))
print(compile_term(parse("x0 <-> !x0")))
