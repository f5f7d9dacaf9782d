# The key identity: a fiber sum of q-series equals a product.
from qgoellnitz.colored import g2_counter
from qgoellnitz.identities import (
    lhs_key_identity,
    rhs_quadruple,
    verify_key_identity,
)

N = 20
target = (2, 1, 1, 1)
lhs = lhs_key_identity(target, N).q_coefficients()
rhs = rhs_quadruple(target, N).q_coefficients()
counts = g2_counter(N).fiber_vector(target)
print("sum side    ", lhs)
print("product side", rhs)
print("G counts    ", counts[: N + 1])

print()
print(verify_key_identity(3, 40).line())

# drop the -bc-bd-cd correction in the exponent and the identity breaks
print(verify_key_identity(3, 40, linear_correction=False).line())
