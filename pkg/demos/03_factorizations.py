#!/usr/bin/env python3
# The s_0-free subgroup, elementary factors, and the u·v decomposition.

from ogsbn import OgsExponents, elementary_factorize, from_ogs, is_elementary, is_in_sdot, tau_to_t, uv_factorize

def tau(n, *factors):
    return OgsExponents.from_factors(n, factors)

# positive windows are exactly the elements that never use s_0
x = tau(10, (6, -5), (8, 2), (9, 2), (10, 1))
print(x, "->", from_ogs(x))
print("in S_n?", is_in_sdot(x), "| elementary?", is_elementary(x))
print("t form:", tau_to_t(x))

# one elementary factor per negative exponent
y = tau(12, (5, -3), (7, 2), (8, -4), (9, 4), (11, -3), (12, 4))
f = elementary_factorize(y)
print("\nz =", f.z)
for factor in f.factors:
    print("  ", factor, "elementary:", is_elementary(factor))
print("product back:", f.product() == y)

# any element: u_1 v_1 u_2 ... with v_j = tau_p^p and increasing p
z = tau(9, (3, 2), (4, 3), (5, -2), (7, 4), (8, 2), (9, 4))
uv = uv_factorize(z)
print()
print(z)
print("  =", uv)
print("  blocks at", uv.ps)

# the last block sits at the last negative entry of the window
w = tau(3, (1, -1), (2, -2), (3, 1))
print()
print(w, "window", from_ogs(w), "->", uv_factorize(w))
