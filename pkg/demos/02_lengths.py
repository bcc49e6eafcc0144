#!/usr/bin/env python3
# Coxeter length three ways, checked against a breadth-first search.

from ogsbn import OgsExponents, bfs, from_ogs, greedy_reduce, length, normal_form
from ogsbn.metrics import NormalForm
from ogsbn.ogs import all_exponent_vectors, tau_power

e = OgsExponents.from_factors(5, [(2, 1), (3, 1), (4, 3), (5, 2)])
w = from_ogs(e)
print("element       ", e, "=", w)
print("formula length", length(e))

nf = normal_form(w)
print("normal form y ", nf.y)
print("normal word   ", nf.word, f"({len(nf.word)} letters)")

word = greedy_reduce(w)
print("greedy word   ", word, f"({len(word)} letters)")

# the normal form is read off a y-vector, one coset word per level
nf = NormalForm.from_y((1, 3, 0, 4, 7, 3))
print("from y        ", nf.word, "length", nf.length)

# tau_k^-k negates 1..k; it is the longest element of B_k
for k in range(1, 6):
    print(f"l(tau{k}^-{k}) = {length(OgsExponents.from_factors(k, [(k, -k)]))}")

table = bfs(4)
bad = sum(1 for x in all_exponent_vectors(4) if length(x) != table.length(from_ogs(x)))
print("B_4 disagreements with BFS:", bad)
print("longest element of B_4:", table.longest(), "==", tau_power(4, -4, 4))
