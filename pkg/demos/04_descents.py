#!/usr/bin/env python3
# Descent sets and the rules that predict them.

from ogsbn import OgsExponents, compose, descent_laws_check, descents, from_ogs
from ogsbn.metrics import predicted_descents
from ogsbn.ogs import tau_power

def tau(n, *factors):
    return OgsExponents.from_factors(n, factors)

# des(w) = {i : w(i) > w(i+1)} with w(0) = 0
u = tau(5, (3, -2), (4, -1), (5, 3))
print(from_ogs(u), "descents:", descents(from_ogs(u)))
print("negative exponents at", [k for k, i in u.nonzero() if i < 0])

# tau_k^-k descends everywhere below k
print("tau5^-5 descents:", descents(tau_power(5, -5, 5)))

# longest block first, then an element living above it
u = tau(10, (8, -8), (9, 4), (10, 4))
w = compose(tau_power(8, -8, 10), from_ogs(u))
print("\nv·u =", w)
print("predicted", predicted_descents("v_then_u", 8, u), "| actual", descents(w))

# element first, then a block covering it
u = tau(5, (3, -1), (4, -2), (5, 3))
w = compose(from_ogs(u), tau_power(5, -5, 5))
print("u·v =", w)
print("predicted", predicted_descents("u_then_v", u, 5), "| actual", descents(w))
print("rule holds:", descent_laws_check("u_then_v", u, 5))
