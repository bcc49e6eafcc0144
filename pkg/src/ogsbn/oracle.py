"""
Brute-force ground truth: breadth-first search of the Cayley graph of B_n
and exhaustive drivers that compare every closed formula with it.

>>> t = bfs(2)
>>> len(t), t.max_length
(8, 4)
>>> verify_bijection(3).passed
True
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable

from .core import CoxeterWord, SignedPermutation, compose, generator
from .factor import uv_factorize
from .metrics import (
    HypothesisError, descent_laws_check, descents, greedy_reduce, length, length_sdot, normal_form,
)
from .ogs import OgsExponents, all_exponent_vectors, exchange_report, exchange_tau, from_ogs, tau_power, to_ogs
from .sn import all_sdot, elementary_factorize, exchange_t_report, is_elementary, is_in_sdot, t_to_tau, tau_to_t

__all__ = [
    "BFS_MAX_RANK", "CayleyTable", "bfs", "VerificationReport", "CHECKS", "GUARDS", "verify",
    "verify_bijection", "verify_exchange", "verify_lengths", "verify_descents", "verify_factorizations",
]

BFS_MAX_RANK = 7


@dataclass(frozen=True)
class CayleyTable:
    """
    Distances from the identity under left multiplication by generators.
    ``entries[window] = (length, letter, parent_window)``; the identity has
    no letter or parent.
    """
    n: int
    entries: dict

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, w: SignedPermutation) -> bool:
        return w.window in self.entries

    def length(self, w: SignedPermutation) -> int:
        return self.entries[w.window][0]

    def word(self, w: SignedPermutation) -> CoxeterWord:
        """A shortest word, read off the parent pointers."""
        letters = []
        window = w.window
        while True:
            _, letter, parent = self.entries[window]
            if parent is None:
                break
            letters.append(letter)
            window = parent
        return CoxeterWord(self.n, tuple(letters))

    @property
    def max_length(self) -> int:
        return max(d for d, _, _ in self.entries.values())

    def longest(self) -> SignedPermutation:
        return SignedPermutation(max(self.entries, key=lambda x: self.entries[x][0]))


def _left_mul(i: int, window: tuple[int, ...]) -> tuple[int, ...]:
    # s_i * w acts on positions of the window
    out = list(window)
    if i == 0:
        out[0] = -out[0]
    else:
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def bfs(n: int) -> CayleyTable:
    """
    >>> t = bfs(3)
    >>> len(t), t.max_length
    (48, 9)
    """
    if not 1 <= n <= BFS_MAX_RANK:
        raise ValueError(f"BFS supports ranks 1..{BFS_MAX_RANK}, got {n}")
    start = tuple(range(1, n + 1))
    entries = {start: (0, None, None)}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = entries[w][0] + 1
        for i in range(n):
            x = _left_mul(i, w)
            if x not in entries:
                entries[x] = (d, i, w)
                queue.append(x)
    return CayleyTable(n, entries)


@dataclass
class VerificationReport:
    check: str
    n: int
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, input, expected, actual) -> None:
        self.cases += 1
        if expected != actual:
            self.failures.append({"input": str(input), "expected": _plain(expected), "actual": _plain(actual)})

    def to_dict(self) -> dict:
        return {"check": self.check, "n": self.n, "cases": self.cases, "failures": list(self.failures)}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def __str__(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.check} n={self.n}: {status}, {self.cases} cases"


def _plain(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_plain(y) for y in (sorted(x) if isinstance(x, (set, frozenset)) else x)]
    return str(x)


def verify_bijection(n: int) -> VerificationReport:
    """Every exponent vector gives a distinct element and round-trips."""
    rep = VerificationReport("bijection", n)
    seen: set = set()
    for e in all_exponent_vectors(n):
        w = from_ogs(e)
        rep.record(e, "new element", "repeat" if w.window in seen else "new element")
        seen.add(w.window)
        rep.record(w, e.exps, to_ogs(w).exps)
    total = 1
    for k in range(1, n + 1):
        total *= 2 * k
    rep.record(f"|B_{n}|", total, len(seen))
    return rep


def verify_exchange(n: int) -> VerificationReport:
    """
    Both exchange tables against composed permutations, for every tuple
    with ``q <= n``. A failure is a table entry that disagrees after
    normalization, or a tuple the table does not cover.
    """
    rep = VerificationReport("exchange", n)
    for q in range(2, n + 1):
        for p in range(1, q):
            for r_q in range(-q, q):
                if r_q == 0:
                    continue
                for r_p in range(-p, p):
                    if r_p == 0:
                        continue
                    res = exchange_report(q, r_q, p, r_p, n)
                    label = f"tau{q}^{r_q}*tau{p}^{r_p}"
                    rep.record(label, (res.semantic, res.semantic), (res.formula, exchange_tau(q, r_q, p, r_p, n)))
    for q in range(3, n + 1):
        for p in range(2, q):
            for i_q in range(1, q):
                for i_p in range(1, p):
                    res = exchange_t_report(q, i_q, p, i_p, n)
                    rep.record(f"t{q}^{i_q}*t{p}^{i_p}", res.semantic, res.formula)
    return rep


def verify_lengths(n: int) -> VerificationReport:
    """Alternating formula, normal form, greedy reduction and BFS agree."""
    table = bfs(n)
    rep = VerificationReport("lengths", n)
    for e in all_exponent_vectors(n):
        w = from_ogs(e)
        d = table.length(w)
        nf = normal_form(w)
        word = greedy_reduce(w)
        got = (length(e), nf.length, len(word), nf.word.evaluate() == w, word.evaluate() == w)
        rep.record(e, (d, d, d, True, True), got)
        if is_in_sdot(e):
            rep.record(f"sdot {e}", d, length_sdot(e))
    for k in range(1, n + 1):
        rep.record(f"tau{k}^-{k}", k * k, table.length(tau_power(k, -k, n)))
    return rep


def verify_descents(n: int) -> VerificationReport:
    """Descent definition, left-descent criterion and the three laws."""
    table = bfs(n)
    rep = VerificationReport("descents", n)
    for e in all_exponent_vectors(n):
        w = from_ogs(e)
        d = table.length(w)
        left = frozenset(i for i in range(n) if table.length(compose(generator(i, n), w)) < d)
        rep.record(w, left, descents(w).indices)
    for k in range(1, n + 1):
        rep.record(f"tau{k}^-{k}", frozenset(range(k)), descents(tau_power(k, -k, n)).indices)
    for u in all_sdot(n):
        rep.record(f"sdot {u}", True, descent_laws_check("sdot", u))
        for a in range(1, n + 1):
            for kind, args in (("v_then_u", (a, u)), ("u_then_v", (u, a))):
                try:
                    ok = descent_laws_check(kind, *args)
                except HypothesisError:
                    continue
                rep.record(f"{kind} {u} a={a}", True, ok)
    return rep


def verify_factorizations(n: int) -> VerificationReport:
    """Elementary factorization on the parabolic S_n, u·v on all of B_n."""
    rep = VerificationReport("factorizations", n)
    for e in all_sdot(n):
        f = elementary_factorize(e)
        negatives = sum(1 for _, x in e.nonzero() if x < 0)
        got = (f.z, all(is_elementary(x) for x in f.factors), f.product(), t_to_tau(tau_to_t(e)))
        rep.record(f"elementary {e}", (negatives, True, e, e), got)
    for e in all_exponent_vectors(n):
        f = uv_factorize(e)
        got = (
            to_ogs(f.permutation()),
            all(a < b for a, b in zip(f.ps, f.ps[1:])),
            all(is_in_sdot(u) for u in f.us),
            f.window_ok(),
        )
        rep.record(f"uv {e}", (e, True, True, True), got)
    return rep


CHECKS: dict[str, Callable[[int], VerificationReport]] = {
    "bijection": verify_bijection,
    "exchange": verify_exchange,
    "lengths": verify_lengths,
    "descents": verify_descents,
    "factorizations": verify_factorizations,
}

# largest rank each driver accepts; beyond these the runs stop being quick
GUARDS = {"bijection": 6, "exchange": 7, "lengths": 5, "descents": 5, "factorizations": 6}


def verify(check: str, n: int) -> VerificationReport:
    if check not in CHECKS:
        raise ValueError(f"unknown check {check!r}")
    if not 1 <= n <= GUARDS[check]:
        raise ValueError(f"check {check} supports ranks 1..{GUARDS[check]}, got {n}")
    return CHECKS[check](n)
