"""
Coxeter length, the B_n normal form, and descent sets.

Length has three independent routes: the closed formulas over the OGS
exponents, the normal-form y-vector, and greedy descent reduction.

>>> e = OgsExponents.from_factors(5, [(2, 1), (3, 1), (4, 3), (5, 2)])
>>> length(e)
13
>>> str(descents(from_ogs(OgsExponents.from_factors(5, [(3, -2), (4, -1), (5, 3)]))))
'3 4'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import CoxeterWord, SignedPermutation, compose, eval_word, generator, inverse
from .factor import uv_factorize
from .ogs import OgsExponents, from_ogs, tau_power, to_ogs
from .sn import _require_sdot, is_in_sdot

__all__ = [
    "DescentSet", "NormalForm", "HypothesisError",
    "descents", "length_sdot", "length", "coset_word", "normal_form",
    "greedy_reduce", "descent_laws_check", "predicted_descents",
]


class HypothesisError(ValueError):
    """Inputs fall outside the class a descent theorem speaks about."""


@dataclass(frozen=True)
class DescentSet:
    n: int
    indices: frozenset[int]

    def __post_init__(self):
        indices = frozenset(self.indices)
        if any(not 0 <= i < self.n for i in indices):
            raise ValueError(f"descent index outside 0..{self.n - 1}")
        object.__setattr__(self, "indices", indices)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.indices))

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self)


def descents(w: SignedPermutation) -> DescentSet:
    """
    ``{i : w(i) > w(i+1)}`` with ``w(0) = 0``.

    >>> sorted(descents(SignedPermutation((-1, 2))))
    [0]
    """
    return DescentSet(w.n, frozenset(i for i in range(w.n) if w(i) > w(i + 1)))


def length_sdot(e: OgsExponents) -> int:
    """
    Length of an Ṡ_n element: ``sum(k * i_k)``.

    >>> length_sdot(OgsExponents.from_factors(5, [(3, -2), (4, -1), (5, 3)]))
    5
    """
    _require_sdot(e)
    return sum(k * i for k, i in e.nonzero())


def length(e: OgsExponents | SignedPermutation) -> int:
    """
    Length through the u·v factorization.

    Right multiplication by the longest element of B_p turns the length of
    an element of B_p into ``p**2`` minus it, and each later ``u`` adds its
    own length, so the contributions alternate in sign.

    >>> length(OgsExponents.from_factors(4, [(4, -4)]))
    16
    """
    if isinstance(e, SignedPermutation):
        e = to_ogs(e)
    f = uv_factorize(e)
    total = length_sdot(f.us[0])
    for u, p in zip(f.us[1:], f.ps):
        total = p * p - total + length_sdot(u)
    return total


def coset_word(i: int, y: int) -> tuple[int, ...]:
    """
    Letters ``s_{|i-j|}`` for ``j < y``: walk down from ``s_i`` to ``s_0``
    and back up.

    >>> coset_word(2, 5)
    (2, 1, 0, 1, 2)
    """
    if not 0 <= y <= 2 * i + 1:
        raise ValueError(f"y_{i} = {y} outside 0..{2 * i + 1}")
    return tuple(abs(i - j) for j in range(y))


@lru_cache(maxsize=None)
def _coset_reps(i: int, n: int) -> tuple[SignedPermutation, ...]:
    return tuple(eval_word(coset_word(i, y), n) for y in range(2 * i + 2))


@dataclass(frozen=True)
class NormalForm:
    y: tuple[int, ...]
    word: CoxeterWord

    @classmethod
    def from_y(cls, y) -> NormalForm:
        y = tuple(y)
        letters: tuple[int, ...] = ()
        for i, yi in enumerate(y):
            letters += coset_word(i, yi)
        return cls(y, CoxeterWord(len(y), letters))

    @property
    def length(self) -> int:
        return sum(self.y)

    def __str__(self) -> str:
        return str(self.word)


def normal_form(w: SignedPermutation) -> NormalForm:
    """
    Peel the coset of ``B_i`` in ``B_{i+1}`` from the right, top level first.

    >>> normal_form(SignedPermutation((-1, -2))).y
    (1, 3)
    """
    n = w.n
    rho = w
    y = [0] * n
    for i in range(n - 1, -1, -1):
        target = rho(i + 1)
        reps = _coset_reps(i, n)
        found = [c for c, u in enumerate(reps) if u(i + 1) == target]
        assert len(found) == 1, f"coset representative not unique at level {i}"
        y[i] = found[0]
        rho = compose(rho, inverse(reps[y[i]]))
    assert rho.is_identity()
    return NormalForm.from_y(y)


def greedy_reduce(w: SignedPermutation) -> CoxeterWord:
    """
    Strip the smallest left descent until nothing is left.

    >>> str(greedy_reduce(SignedPermutation((-2, -1))))
    's0 s1 s0'
    """
    n = w.n
    cur = w
    letters: list[int] = []
    while not cur.is_identity():
        if len(letters) > 2 * n * n:
            raise AssertionError("greedy reduction did not terminate")
        i = min(descents(cur).indices)
        letters.append(i)
        cur = compose(generator(i, n), cur)
    return CoxeterWord(n, tuple(letters))


def predicted_descents(kind: str, *args) -> DescentSet:
    """
    Descent set of a product as the corresponding theorem describes it.

    * ``("sdot", e)``: the positions of negative exponents.
    * ``("v_then_u", a, u)``: ``tau_a^-a · u`` where every index of ``u``
      is at least ``a``; below ``a`` the descents of ``u`` flip, ``a`` is
      never a descent, above ``a`` they are those of ``u``.
    * ``("u_then_v", u, p)``: ``u · tau_p^p`` where every index of ``u`` is
      at most ``p``; with ``m`` the largest index of ``u`` (0 for the
      identity), descents of ``u`` flip below ``m`` and every ``j`` in
      ``m..p-1`` is a descent.
    """
    if kind == "sdot":
        (e,) = args
        if not is_in_sdot(e):
            raise HypothesisError(f"{e} is not in the parabolic S_n")
        return DescentSet(e.n, frozenset(k for k, i in e.nonzero() if i < 0))
    if kind == "v_then_u":
        a, u = args
        if not is_in_sdot(u) or (u.support() and u.support()[0] < a) or not 1 <= a <= u.n:
            raise HypothesisError(f"need u in the parabolic S_n with indices >= {a}")
        du = predicted_descents("sdot", u).indices
        low = {j for j in range(a) if j not in du}
        return DescentSet(u.n, frozenset(low | {j for j in du if j > a}))
    if kind == "u_then_v":
        u, p = args
        if not is_in_sdot(u) or (u.support() and u.support()[-1] > p) or not 1 <= p <= u.n:
            raise HypothesisError(f"need u in the parabolic S_n with indices <= {p}")
        du = predicted_descents("sdot", u).indices
        m = u.support()[-1] if u.support() else 0
        return DescentSet(u.n, frozenset({j for j in range(m) if j not in du} | set(range(m, p))))
    raise ValueError(f"unknown descent law {kind!r}")


def descent_laws_check(kind: str, *args) -> bool:
    """
    Compare a theorem's descent prediction with the computed descents.

    >>> u = OgsExponents.from_factors(5, [(3, -1), (4, -2), (5, 3)])
    >>> descent_laws_check("u_then_v", u, 5)
    True
    """
    if kind == "sdot":
        w = from_ogs(args[0])
    elif kind == "v_then_u":
        a, u = args
        w = compose(tau_power(a, -a, u.n), from_ogs(u))
    elif kind == "u_then_v":
        u, p = args
        w = compose(from_ogs(u), tau_power(p, p, u.n))
    else:
        raise ValueError(f"unknown descent law {kind!r}")
    return predicted_descents(kind, *args) == descents(w)
