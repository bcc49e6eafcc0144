"""
Canonical form of B_n over the generators ``tau_k = s_0 s_1 ... s_{k-1}``.

Every element is uniquely ``tau_1^{i_1} tau_2^{i_2} ... tau_n^{i_n}`` with
``-k <= i_k <= k-1``.  ``tau_k`` has order ``2k``.

>>> w = SignedPermutation((-2, -1, -4, -3))
>>> to_ogs(w).exps
(-1, 1, -1, -3)
>>> from_ogs(to_ogs(w)) == w
True
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import RankError, SignedPermutation, compose, identity

__all__ = [
    "TauPower", "OgsExponents", "ExchangeResult",
    "normalize_exponent", "tau_apply", "tau_power", "from_ogs", "to_ogs",
    "product", "exchange_formula", "exchange_report", "exchange_tau",
    "all_exponent_vectors",
]

log = logging.getLogger(__name__)


def normalize_exponent(k: int, e: int) -> int:
    """Reduce ``e`` modulo ``2k`` into ``[-k, k-1]``."""
    return (e + k) % (2 * k) - k


@dataclass(frozen=True)
class TauPower:
    k: int
    e: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"tau index must be >= 1, got {self.k}")
        if not -self.k <= self.e <= self.k - 1:
            raise ValueError(f"exponent {self.e} outside [{-self.k}, {self.k - 1}] for tau{self.k}")

    def __str__(self) -> str:
        return f"tau{self.k}^{self.e}"


@dataclass(frozen=True)
class OgsExponents:
    """Exponent vector ``(i_1, ..., i_n)``; ``exps[k-1]`` is ``i_k``."""
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(x) for x in self.exps)
        if not exps:
            raise ValueError("rank must be positive")
        for k, e in enumerate(exps, 1):
            if not -k <= e <= k - 1:
                raise ValueError(f"exponent {e} outside [{-k}, {k - 1}] for tau{k}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def zero(cls, n: int) -> OgsExponents:
        return cls((0,) * n)

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[tuple[int, int]]) -> OgsExponents:
        """
        Assemble ``(k, e)`` factors given in nondecreasing ``k``; equal
        indices add, every exponent is reduced mod ``2k``.
        """
        exps = [0] * n
        last = 0
        for k, e in factors:
            if not 1 <= k <= n:
                raise RankError(f"tau{k} outside rank {n}")
            if k < last:
                raise ValueError("factors must be in nondecreasing index order")
            last = k
            exps[k - 1] = normalize_exponent(k, exps[k - 1] + e)
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    def __getitem__(self, k: int) -> int:
        """``e[k]`` is the exponent of ``tau_k`` (1-based)."""
        if not 1 <= k <= self.n:
            raise IndexError(k)
        return self.exps[k - 1]

    def support(self) -> list[int]:
        """Indices ``k_1 < ... < k_m`` carrying a nonzero exponent."""
        return [k for k, e in enumerate(self.exps, 1) if e]

    def nonzero(self) -> list[tuple[int, int]]:
        return [(k, e) for k, e in enumerate(self.exps, 1) if e]

    def factors(self) -> list[TauPower]:
        return [TauPower(k, e) for k, e in self.nonzero()]

    def is_identity(self) -> bool:
        return not any(self.exps)

    def permutation(self) -> SignedPermutation:
        return from_ogs(self)

    def widen(self, m: int) -> OgsExponents:
        if m < self.n:
            raise RankError(f"cannot embed rank {self.n} into rank {m}")
        return OgsExponents(self.exps + (0,) * (m - self.n))

    def __str__(self) -> str:
        if self.is_identity():
            return "e"
        return "*".join(f"tau{k}^{e}" for k, e in self.nonzero())


def tau_apply(k: int, e: int, j: int) -> int:
    """
    Image of the signed point ``j`` under ``tau_k^e``, ``-k <= e <= k-1``.

    >>> [tau_apply(4, -3, j) for j in (1, 2, 3, 4)]
    [4, -1, -2, -3]
    """
    if not -k <= e <= k - 1:
        raise ValueError(f"exponent {e} outside [{-k}, {k - 1}] for tau{k}")
    if j < 0:
        return -tau_apply(k, e, -j)
    if j == 0:
        raise ValueError("0 is not a point of [±n]")
    if j > k or e == 0:
        return j
    if e == -k:
        return -j
    if e > 0:
        return -(j - e + k) if j <= e else j - e
    return j - e if j <= e + k else -(j - e - k)


def tau_power(k: int, e: int, n: int) -> SignedPermutation:
    """``tau_k^e`` in B_n; ``e`` is taken mod ``2k``."""
    if not 1 <= k <= n:
        raise RankError(f"tau{k} outside rank {n}")
    e = normalize_exponent(k, e)
    return SignedPermutation._trusted(tuple(tau_apply(k, e, j) for j in range(1, n + 1)))


def from_ogs(e: OgsExponents) -> SignedPermutation:
    """Evaluate ``tau_1^{i_1} ... tau_n^{i_n}`` pointwise."""
    window = []
    for j in range(1, e.n + 1):
        x = j
        # left to right: tau_1 acts first
        for k in range(max(1, abs(x)), e.n + 1):
            i = e.exps[k - 1]
            if i and abs(x) <= k:
                x = tau_apply(k, i, x)
        window.append(x)
    return SignedPermutation._trusted(tuple(window))


def to_ogs(w: SignedPermutation) -> OgsExponents:
    """
    Peel right cosets of ``B_{k-1}`` for ``k = n, ..., 1``: the image of
    ``k`` fixes ``i_k``.
    """
    n = w.n
    rho = list(w.window)
    exps = [0] * n
    for k in range(n, 0, -1):
        c = rho[k - 1]
        i = k - c if c > 0 else c
        exps[k - 1] = i
        if i:
            # right multiplication by tau_k^{-i} relabels the values
            e = normalize_exponent(k, -i)
            rho = [tau_apply(k, e, x) for x in rho[:k]]
        assert rho[k - 1] == k, f"coset peeling failed at k={k}"
    return OgsExponents(tuple(exps))


def product(*elements: OgsExponents) -> OgsExponents:
    """Canonical form of a product of canonical forms."""
    if not elements:
        raise ValueError("empty product")
    n = elements[0].n
    acc = identity(n)
    for x in elements:
        if x.n != n:
            raise RankError(f"rank {x.n} != rank {n}")
        acc = compose(acc, from_ogs(x))
    return to_ogs(acc)


def all_exponent_vectors(n: int) -> Iterator[OgsExponents]:
    """All ``2^n n!`` canonical exponent vectors of B_n."""
    def rec(k, prefix):
        if k > n:
            yield OgsExponents(tuple(prefix))
            return
        for e in range(-k, k):
            prefix.append(e)
            yield from rec(k + 1, prefix)
            prefix.pop()
    yield from rec(1, [])


# --- exchange laws -------------------------------------------------------

def exchange_formula(q: int, r_q: int, p: int, r_p: int) -> tuple[str, list[tuple[int, int]]] | None:
    """
    The case-table rewrite of ``tau_q^{r_q} tau_p^{r_p}`` (``p < q``) as a
    list of ``(index, exponent)`` factors, before normalization.

    The table proper covers ``0 < r_q < q``.  A negative ``r_q`` is reduced
    to it through ``tau_q^{r_q} = tau_q^{r_q+q} tau_q^{-q}``: ``tau_q^{-q}``
    negates ``1..q``, is central in ``B_q`` and so moves to the far right.
    Overlapping boundary subcases resolve to the first listed.
    """
    if r_q == 0 or not -q <= r_q <= q - 1:
        return None
    if r_q < 0:
        if r_q == -q:
            return "central/r_q=-q", [(p, r_p), (q, -q)]
        case, factors = exchange_formula(q, r_q + q, p, r_p)
        return "central/" + case, factors + [(q, -q)]
    d = q - r_q
    if 0 < r_p < p:
        if d >= p:
            return "pos/q-r_q>=p", [(r_q, -r_q), (r_q + r_p, r_q), (p + r_q, r_p), (q, r_q)]
        if r_p <= d <= p:
            return "pos/r_p<=q-r_q<=p", [(r_q, p - q), (r_q + r_p, q - p), (q, r_q + r_p)]
        return "pos/q-r_q<=r_p", [(p + r_q - q, r_q + r_p - q), (r_q, p - r_p - r_q),
                                  (q, r_q + r_p - p - q)]
    if r_p == -p:
        if d >= p:
            return "neg-full/q-r_q>=p", [(r_q, -r_q), (p + r_q, -p - r_q), (q, r_q)]
        return "neg-full/q-r_q<p", [(p + r_q - q, -p - r_q + q), (r_q, -r_q), (q, r_q - q)]
    if -p < r_p < 0:
        if d >= p:
            return "neg/q-r_q>=p", [(r_q + r_p + p, r_q), (p + r_q, r_p - r_q), (q, r_q)]
        if r_p + p <= d <= p:
            return "neg/r_p+p<=q-r_q<=p", [(p + r_q - q, -p - r_q + q), (r_q, p + r_q - q),
                                           (r_q + r_p + p, q - p), (q, p + r_p - q + r_q)]
        return "neg/q-r_q<=r_p+p", [(p + r_q - q, r_p), (r_q, -r_p), (q, r_q + r_p)]
    raise ValueError(f"r_p={r_p} outside [{-p}, {p - 1}] or zero")


@dataclass(frozen=True)
class ExchangeResult:
    """Both routes for one exchange; ``semantic`` is authoritative."""
    q: int
    r_q: int
    p: int
    r_p: int
    case: str | None
    factors: tuple[tuple[int, int], ...] | None
    formula: OgsExponents | None
    formula_product: OgsExponents | None
    semantic: OgsExponents

    @property
    def agrees(self) -> bool:
        """The literal (normalized, merged) reading equals the true form."""
        return self.formula == self.semantic

    @property
    def product_agrees(self) -> bool:
        """The listed factors multiply out to the right element."""
        return self.formula_product == self.semantic


def _check_exchange_args(q, r_q, p, r_p, n):
    if not 1 <= p < q <= n:
        raise ValueError(f"need 1 <= p < q <= n, got p={p}, q={q}, n={n}")
    if not -q <= r_q <= q - 1:
        raise ValueError(f"r_q={r_q} outside [{-q}, {q - 1}]")
    if r_p == 0 or not -p <= r_p <= p - 1:
        raise ValueError(f"r_p={r_p} outside [{-p}, {p - 1}] or zero")


def exchange_report(q: int, r_q: int, p: int, r_p: int, n: int | None = None) -> ExchangeResult:
    n = q if n is None else n
    _check_exchange_args(q, r_q, p, r_p, n)
    semantic = to_ogs(compose(tau_power(q, r_q, n), tau_power(p, r_p, n)))
    found = exchange_formula(q, r_q, p, r_p)
    case = factors = formula = formula_product = None
    if found is not None:
        case, raw = found
        factors = tuple(raw)
        # tau_0 is the empty product
        usable = [(k, e) for k, e in raw if k != 0]
        if all(1 <= k <= n for k, _ in usable):
            acc = identity(n)
            for k, e in usable:
                acc = compose(acc, tau_power(k, e, n))
            formula_product = to_ogs(acc)
            try:
                formula = OgsExponents.from_factors(n, usable)
            except ValueError:
                formula = None
    return ExchangeResult(q, r_q, p, r_p, case, factors, formula, formula_product, semantic)


def exchange_tau(q: int, r_q: int, p: int, r_p: int, n: int | None = None) -> OgsExponents:
    """
    Canonical form of ``tau_q^{r_q} tau_p^{r_p}`` for ``p < q``.

    The case table is consulted first; the composed permutation decides,
    and any disagreement is logged.

    >>> str(exchange_tau(4, 2, 2, 1))
    'tau2^-2*tau3^2*tau4^3'
    """
    n = q if n is None else n
    if r_q == 0:
        _check_exchange_args(q, r_q, p, r_p, n)
        return OgsExponents.from_factors(n, [(p, r_p)])
    result = exchange_report(q, r_q, p, r_p, n)
    if result.case is not None and not result.agrees:
        log.debug("exchange table mismatch for tau%d^%d*tau%d^%d (%s): table %s, actual %s",
                  q, r_q, p, r_p, result.case, result.formula, result.semantic)
    return result.semantic
