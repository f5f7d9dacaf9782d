# Polynomial (doubly bounded) versions of the two- and three-parameter identities.
from qgoellnitz.identities import bounded_goellnitz, bounded_schur, lhs_goellnitz

lhs, rhs = bounded_schur(3, 4, 2, 1)
print("bounded two-parameter, L=3 M=4 i=2 j=1")
print("  lhs:", lhs)
print("  rhs:", rhs)

lhs, rhs = bounded_goellnitz(4, 4, 1, 1, 1)
print("\nbounded three-parameter, L=M=4 i=j=k=1, equal:", lhs == rhs)
print("  degree range", lhs.min_degree, "..", lhs.max_degree)

# as L and M grow the low coefficients settle to the unbounded series
for L in (4, 8, 16, 30):
    lhs, _ = bounded_goellnitz(L, L, 1, 1, 1)
    print(f"L=M={L:2}:", [lhs.coefficient(e) for e in range(12)])
print("limit:  ", lhs_goellnitz((1, 1, 1), 11).q_coefficients())

# when some binomial top goes negative the sides are Laurent polynomials
lhs, rhs = bounded_goellnitz(0, 0, 1, 1, 2)
print("\nL=M=0 i=j=1 k=2:", lhs, "| equal:", lhs == rhs)
