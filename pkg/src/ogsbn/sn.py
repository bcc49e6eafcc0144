"""
The symmetric-group side.

``Ṡ_n`` is the parabolic subgroup of B_n generated by ``s_1, ..., s_{n-1}``;
its elements are exactly the signed permutations with an all-positive
window.  They are carried as :class:`~ogsbn.ogs.OgsExponents` and tested
with :func:`is_in_sdot`.  The native S_n canonical form uses
``t_k = s_1 s_2 ... s_{k-1}`` (order ``k``) and lives in
:class:`SnOgsExponents`.

>>> e = OgsExponents.from_factors(10, [(6, -5), (8, 2), (9, 2), (10, 1)])
>>> is_in_sdot(e), is_elementary(e)
(True, True)
>>> str(tau_to_t(e))
't6^1*t8^2*t9^2*t10^1'
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import RankError, SignedPermutation, compose, identity
from .ogs import OgsExponents, from_ogs, product, to_ogs

__all__ = [
    "NotInSdotError", "SnOgsExponents", "ElementaryFactorization", "SnExchangeResult",
    "t_apply", "t_power", "from_sn_ogs", "to_sn_ogs",
    "exchange_t_formula", "exchange_t_report", "exchange_t",
    "is_in_sdot", "tau_to_t", "t_to_tau", "is_elementary", "is_sn_elementary",
    "elementary_factorize", "all_sdot", "all_sn_exponent_vectors",
]

log = logging.getLogger(__name__)


class NotInSdotError(ValueError):
    """The element uses ``s_0``, i.e. its window has a negative entry."""


@dataclass(frozen=True)
class SnOgsExponents:
    """``t_2^{i_2} ... t_n^{i_n}`` with ``0 <= i_k < k``; ``exps[k-2]`` is ``i_k``."""
    n: int
    exps: tuple[int, ...] = ()

    def __post_init__(self):
        exps = tuple(int(x) for x in self.exps) or (0,) * (self.n - 1)
        if self.n < 1 or len(exps) != self.n - 1:
            raise ValueError(f"need {self.n - 1} exponents for rank {self.n}, got {len(exps)}")
        for k, e in enumerate(exps, 2):
            if not 0 <= e < k:
                raise ValueError(f"exponent {e} outside [0, {k - 1}] for t{k}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[tuple[int, int]]) -> SnOgsExponents:
        """Nondecreasing ``(k, e)`` factors; merged mod ``k``; ``t_0, t_1`` are trivial."""
        exps = [0] * (n - 1)
        last = 0
        for k, e in factors:
            if k > n:
                raise RankError(f"t{k} outside rank {n}")
            if k < last:
                raise ValueError("factors must be in nondecreasing index order")
            last = k
            if k >= 2:
                exps[k - 2] = (exps[k - 2] + e) % k
        return cls(n, tuple(exps))

    def __getitem__(self, k: int) -> int:
        if k == 1:
            return 0
        if not 2 <= k <= self.n:
            raise IndexError(k)
        return self.exps[k - 2]

    def nonzero(self) -> list[tuple[int, int]]:
        return [(k, e) for k, e in enumerate(self.exps, 2) if e]

    def is_identity(self) -> bool:
        return not any(self.exps)

    def permutation(self) -> SignedPermutation:
        return from_sn_ogs(self)

    def __str__(self) -> str:
        if self.is_identity():
            return "e"
        return "*".join(f"t{k}^{e}" for k, e in self.nonzero())


def t_apply(k: int, e: int, j: int) -> int:
    """Image of ``j >= 1`` under ``t_k^e``; ``t_k`` sends 1 to k and j to j-1 on 2..k."""
    if j > k or k < 2:
        return j
    return (j - 1 - e) % k + 1


def t_power(k: int, e: int, n: int) -> SignedPermutation:
    if k > n:
        raise RankError(f"t{k} outside rank {n}")
    return SignedPermutation(tuple(t_apply(k, e, j) for j in range(1, n + 1)))


def from_sn_ogs(s: SnOgsExponents) -> SignedPermutation:
    window = []
    for j in range(1, s.n + 1):
        x = j
        for k, e in enumerate(s.exps, 2):
            if e and x <= k:
                x = t_apply(k, e, x)
        window.append(x)
    return SignedPermutation(tuple(window))


def to_sn_ogs(w: SignedPermutation) -> SnOgsExponents:
    """S_n canonical form of an all-positive window, by coset peeling."""
    if any(x < 0 for x in w.window):
        raise NotInSdotError(f"{w} is not in the s_0-free subgroup")
    n = w.n
    rho = w
    exps = [0] * (n - 1)
    for k in range(n, 1, -1):
        i = k - rho(k)
        exps[k - 2] = i
        if i:
            rho = compose(rho, t_power(k, -i, n))
        assert rho(k) == k, f"coset peeling failed at k={k}"
    return SnOgsExponents(n, tuple(exps))


def all_sn_exponent_vectors(n: int) -> Iterator[SnOgsExponents]:
    def rec(k, prefix):
        if k > n:
            yield SnOgsExponents(n, tuple(prefix))
            return
        for e in range(k):
            prefix.append(e)
            yield from rec(k + 1, prefix)
            prefix.pop()
    yield from rec(2, [])


def all_sdot(n: int) -> Iterator[OgsExponents]:
    """The ``n!`` elements of ``Ṡ_n`` in tau form."""
    for s in all_sn_exponent_vectors(n):
        yield to_ogs(from_sn_ogs(s))


# --- S_n exchange laws ---------------------------------------------------

def exchange_t_formula(q: int, i_q: int, p: int, i_p: int) -> tuple[str, list[tuple[int, int]]]:
    """
    Case-table rewrite of ``t_q^{i_q} t_p^{i_p}`` as ``(index, exponent)``
    factors.  The two degenerate boundaries give two-factor outputs.
    """
    d = q - i_q
    if d == p:
        return "q-i_q=p", [(i_q + i_p, i_q), (q, i_q + i_p)]
    if d == i_p:
        return "q-i_q=i_p", [(i_q, p - i_p), (q, q - p)]
    if d >= p:
        return "q-i_q>=p", [(i_q + i_p, i_q), (p + i_q, i_p), (q, i_q)]
    if i_p <= d <= p:
        return "i_p<=q-i_q<=p", [(i_q, p + i_q - q), (i_q + i_p, q - p), (q, i_q + i_p)]
    return "q-i_q<=i_p", [(p + i_q - q, i_q + i_p - q), (i_q, p - i_p), (q, i_q + i_p - p)]


@dataclass(frozen=True)
class SnExchangeResult:
    q: int
    i_q: int
    p: int
    i_p: int
    case: str
    factors: tuple[tuple[int, int], ...]
    formula: SnOgsExponents | None
    semantic: SnOgsExponents

    @property
    def agrees(self) -> bool:
        return self.formula == self.semantic


def exchange_t_report(q: int, i_q: int, p: int, i_p: int, n: int | None = None) -> SnExchangeResult:
    n = q if n is None else n
    if not 2 <= p < q <= n:
        raise ValueError(f"need 2 <= p < q <= n, got p={p}, q={q}, n={n}")
    if not (1 <= i_p < p and 1 <= i_q < q):
        raise ValueError(f"need 1 <= i_p < p and 1 <= i_q < q, got i_p={i_p}, i_q={i_q}")
    semantic = to_sn_ogs(compose(t_power(q, i_q, n), t_power(p, i_p, n)))
    case, factors = exchange_t_formula(q, i_q, p, i_p)
    try:
        formula = SnOgsExponents.from_factors(n, factors)
    except ValueError:
        formula = None
    return SnExchangeResult(q, i_q, p, i_p, case, tuple(factors), formula, semantic)


def exchange_t(q: int, i_q: int, p: int, i_p: int, n: int | None = None) -> SnOgsExponents:
    """
    Canonical form of ``t_q^{i_q} t_p^{i_p}`` for ``p < q``.

    >>> str(exchange_t(5, 2, 3, 1))
    't3^2*t5^3'
    """
    result = exchange_t_report(q, i_q, p, i_p, n)
    if not result.agrees:
        log.debug("S_n exchange table mismatch for t%d^%d*t%d^%d (%s): table %s, actual %s",
                  q, i_q, p, i_p, result.case, result.formula, result.semantic)
    return result.semantic


# --- the subgroup Ṡ_n inside B_n -----------------------------------------

def is_in_sdot(e: OgsExponents) -> bool:
    """
    Membership in ``Ṡ_n`` read off the exponents: over the nonzero
    positions ``k_1 < ... < k_m`` the total is 0 and every suffix sum
    starting at ``r >= 2`` lies in ``[0, k_{r-1}]``.
    """
    nz = e.nonzero()
    if not nz:
        return True
    if sum(x for _, x in nz) != 0:
        return False
    tail = 0
    for r in range(len(nz) - 1, 0, -1):
        tail += nz[r][1]
        if not 0 <= tail <= nz[r - 1][0]:
            return False
    return True


def _require_sdot(e: OgsExponents) -> None:
    if not is_in_sdot(e):
        raise NotInSdotError(f"{e} is not in the s_0-free subgroup")


def tau_to_t(e: OgsExponents) -> SnOgsExponents:
    """Negative exponents ``i_k`` become ``k + i_k``; the rest carry over."""
    _require_sdot(e)
    out = SnOgsExponents.from_factors(e.n, [(k, x if x >= 0 else k + x) for k, x in e.nonzero()])
    assert from_sn_ogs(out) == from_ogs(e), f"tau/t conversion disagrees on {e}"
    return out


def t_to_tau(s: SnOgsExponents) -> OgsExponents:
    return to_ogs(from_sn_ogs(s))


def is_sn_elementary(s: SnOgsExponents) -> bool:
    """All listed exponents positive and their sum at most the first index."""
    nz = s.nonzero()
    return not nz or sum(x for _, x in nz) <= nz[0][0]


def is_elementary(e: OgsExponents) -> bool:
    """
    One leading negative exponent, positive exponents after it, total 0.
    The identity counts as elementary.
    """
    nz = e.nonzero()
    if not nz:
        return True
    return nz[0][1] < 0 and all(x > 0 for _, x in nz[1:]) and sum(x for _, x in nz) == 0


@dataclass(frozen=True)
class ElementaryFactorization:
    """
    ``factors`` multiply (left to right) to the source element.
    ``boundaries[a]`` is the index shared by ``factors[a]`` and
    ``factors[a+1]``.
    """
    source: OgsExponents
    factors: tuple[OgsExponents, ...]
    boundaries: tuple[int, ...]

    @property
    def z(self) -> int:
        """Number of elementary factors; 0 for the identity."""
        return 0 if self.source.is_identity() else len(self.factors)

    def product(self) -> OgsExponents:
        return product(*self.factors)

    def __str__(self) -> str:
        return "·".join(f"({f})" for f in self.factors)


def elementary_factorize(e: OgsExponents) -> ElementaryFactorization:
    """
    Split an element of ``Ṡ_n`` into one elementary factor per negative
    exponent.

    Cutting at every negative position, the carry ``c_a`` passed from
    factor ``a`` to factor ``a+1`` is the suffix sum from the next cut;
    factor ``a`` then reads
    ``tau_{k_cut}^{-(middle + c_a)} · middle · tau_{k_next}^{c_a}``.

    >>> e = OgsExponents.from_factors(12, [(5, -3), (7, 2), (8, -4), (9, 4), (11, -3), (12, 4)])
    >>> [str(f) for f in elementary_factorize(e).factors]
    ['tau5^-3*tau7^2*tau8^1', 'tau8^-5*tau9^4*tau11^1', 'tau11^-4*tau12^4']
    """
    _require_sdot(e)
    n = e.n
    nz = e.nonzero()
    if not nz:
        return ElementaryFactorization(e, (e,), ())
    cuts = [j for j, (_, x) in enumerate(nz) if x < 0]
    m = len(nz)
    q = len(cuts)
    # carry[a]: exponent handed to the right end of factor a
    carry = [0] * q
    carry[q - 1] = nz[m - 1][1]
    for a in range(q - 2, -1, -1):
        nxt = cuts[a + 1]
        stop = cuts[a + 2] if a + 2 < q else m - 1
        carry[a] = nz[nxt][1] + sum(x for _, x in nz[nxt + 1:stop]) + carry[a + 1]

    factors = []
    for a in range(q):
        start = cuts[a]
        stop = cuts[a + 1] if a + 1 < q else m - 1
        middle = nz[start + 1:stop]
        lead = -sum(x for _, x in middle) - carry[a]
        parts = [(nz[start][0], lead)] + middle + [(nz[stop][0], carry[a])]
        factors.append(OgsExponents.from_factors(n, [(k, x) for k, x in parts if x]))
    boundaries = tuple(nz[c][0] for c in cuts[1:])
    return ElementaryFactorization(e, tuple(factors), boundaries)
