# From weighted words to residue classes mod 15.
from qgoellnitz.classical import (
    count_g1,
    count_p1,
    iter_g1,
    order_isomorphism_check,
    substitute_15,
    g1_vector,
    p1_vector,
)
from qgoellnitz.colored import ColoredPart

for sym in ["A_1", "B_1", "C_1", "D_1", "AB_2", "CD_2", "ABCD_4"]:
    print(f"{sym:7} -> {substitute_15(ColoredPart.parse(sym))}")

report = order_isomorphism_check(15)
print("\nfirst images in symbol order:", report.details["images"], report.status)

# the two sides agree term by term
p, g = p1_vector(120), g1_vector(120)
print("\n  n   P   G")
for n in range(0, 121, 15):
    print(f"{n:3} {p[n]:3} {g[n]:3}")
print("all equal up to 120:", p == g)

print("\nG-partitions of 60:", list(iter_g1(60)))
print("count_p1(18) =", count_p1(18), " count_g1(18) =", count_g1(18))
