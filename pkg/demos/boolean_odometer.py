"""Classical substitutions and the binary adding machine.

Run: python demos/boolean_odometer.py
"""

from substdyn.boolean import adding_machine, bool_classify, bool_subst_from_text, point_map
from substdyn.terms import format_term

b = adding_machine(3)
for i, t in enumerate(b.terms):
    print(f"x{i} -> {format_term(t)}")
print("point map:", point_map(b).table)
print(bool_classify(b))

for n in (1, 4, 8, 12):
    c = bool_classify(adding_machine(n))
    print(f"n = {n:2}: generic {c.generic}, order {c.permutation_order}")

# swapping two variables is invertible but far from a single cycle
swap = bool_subst_from_text(2, ["x1", "x0"])
print("swap:", bool_classify(swap))
