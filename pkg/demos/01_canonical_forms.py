#!/usr/bin/env python3
# Canonical forms in B_n: windows, tau exponents, and the exchange table.

from ogsbn import OgsExponents, SignedPermutation, compose, from_ogs, to_ogs
from ogsbn.ogs import all_exponent_vectors, exchange_report, tau_power

# a signed permutation is stored by its window w(1..n)
w = SignedPermutation((-2, -1, -4, -3))
print("window        ", w)

# every element is tau_1^i1 * ... * tau_n^in with -k <= i_k < k
e = to_ogs(w)
print("canonical form", e)
print("exponents     ", e.exps)
print("back again    ", from_ogs(e))

# products read left to right: (a*b)(j) = b(a(j))
a = from_ogs(OgsExponents.from_factors(4, [(1, -1), (2, 1), (3, -1)]))
b = tau_power(4, -3, 4)
print("a*b           ", compose(a, b))

# tau_k has order 2k, so the exponent vectors count 2^n n! elements
for n in range(1, 6):
    windows = {from_ogs(x).window for x in all_exponent_vectors(n)}
    print(f"B_{n}: {len(windows)} distinct elements")

# pushing a smaller tau to the left: tau_4^2 * tau_2^1
r = exchange_report(4, 2, 2, 1)
print("exchange case ", r.case)
print("table says    ", r.formula)
print("composition   ", r.semantic)

# negative left exponents go through the central element tau_q^-q
r = exchange_report(4, -1, 2, 1)
print("exchange case ", r.case, "->", r.formula, "| agrees:", r.agrees)
