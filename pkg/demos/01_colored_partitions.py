# Colored partitions in eleven colors, and the four-parameter count equality.
from collections import Counter

from qgoellnitz.colored import (
    ColoredPartition,
    FreqVector,
    constraints_image,
    count_g2,
    count_p2,
    fiber,
    freq_vector,
    is_valid_g2,
    iter_valid_g2,
)

# symbols of equal weight are ordered by color rank
P = ColoredPartition.parse
for text in ["D_2 A_1", "A_2 D_1", "AB_3 AB_2", "ABCD_4", "ABCD_4 A_1", "ABCD_5 A_1"]:
    print(f"{text:12} valid={is_valid_g2(P(text))}")

# all valid partitions of 5, grouped by letter multiplicities
groups = Counter()
for p in iter_valid_g2(5):
    if p.total == 5:
        groups[constraints_image(freq_vector(p))] += 1
print("\nvalid partitions of 5 by (i,j,k,l):")
for target, g in sorted(groups.items()):
    print(f"  {tuple(target)}  G={g}  P={count_p2(5, target)}")

# one cell in detail: the fiber of (1,1,1,1) at n = 10
target = (1, 1, 1, 1)
n = 10
print(f"\nfiber of {target} at n={n}:")
total = 0
for f in fiber(target):
    g = count_g2(n, f)
    total += g
    if g:
        nonzero = {k: v for k, v in f._asdict().items() if v}
        print(f"  {nonzero}: {g}")
print(f"sum={total}  P={count_p2(n, target)}")
print(count_g2(3, FreqVector(a=1, d=1)), "partition of 3 with one A and one D part")
