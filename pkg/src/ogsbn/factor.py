"""
Alternating factorization ``u_1 · v_1 · u_2 · v_2 ··· u_r`` of an element
of B_n, where every ``u_j`` lies in ``Ṡ_n`` and ``v_j = tau_{p_j}^{p_j}``
(the longest element of the parabolic ``B_{p_j}``) with
``p_1 < p_2 < ... < p_{r-1}``.

>>> e = OgsExponents.from_factors(5, [(2, 1), (3, 1), (4, 3), (5, 2)])
>>> str(uv_factorize(e))
'e·tau1^1·tau1^-1*tau2^1·tau2^2·tau2^-2*tau3^1*tau4^1·tau4^4·tau4^-2*tau5^2'
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedPermutation, compose, identity, inverse
from .ogs import OgsExponents, from_ogs, tau_power, to_ogs

__all__ = ["UvFactorization", "uv_factorize"]


@dataclass(frozen=True)
class UvFactorization:
    """``us`` has one more entry than ``ps``; ``v_j`` is ``tau_{ps[j]}^{ps[j]}``."""
    n: int
    us: tuple[OgsExponents, ...]
    ps: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.us)

    def parts(self) -> list[OgsExponents | int]:
        out: list[OgsExponents | int] = []
        for u, p in zip(self.us, self.ps):
            out += [u, p]
        out.append(self.us[-1])
        return out

    def v(self, j: int) -> SignedPermutation:
        return tau_power(self.ps[j], self.ps[j], self.n)

    def permutation(self) -> SignedPermutation:
        acc = identity(self.n)
        for j, u in enumerate(self.us):
            acc = compose(acc, from_ogs(u))
            if j < len(self.ps):
                acc = compose(acc, self.v(j))
        return acc

    def window_ok(self) -> bool:
        """Nonzero tau-indices of ``u_j`` lie within ``[p_{j-1}, p_j]``."""
        for j, u in enumerate(self.us):
            support = u.support()
            if not support:
                continue
            if j > 0 and support[0] < self.ps[j - 1]:
                return False
            if j < len(self.ps) and support[-1] > self.ps[j]:
                return False
        return True

    def __str__(self) -> str:
        return "·".join(str(x) if isinstance(x, OgsExponents) else f"tau{x}^{x}" for x in self.parts())


def uv_factorize(e: OgsExponents) -> UvFactorization:
    """
    Peel ``v`` blocks from the right.

    The last block is forced: ``p`` is the largest position whose image is
    negative. The matching ``u`` is the Ṡ_n element that is increasing on
    ``1..p``, sends that range onto ``{|w(1)|, ..., |w(p)|}`` and agrees
    with ``w`` beyond ``p``. What remains lies in B_p, so the next block
    is strictly smaller. A remainder with no negative image is ``u_1``.

    >>> e = OgsExponents.from_factors(3, [(1, -1), (2, -2), (3, 1)])
    >>> str(uv_factorize(e))
    'tau1^-1*tau2^1·tau2^2·tau2^-1*tau3^1'
    """
    n = e.n
    source = w = from_ogs(e)
    perms: list[SignedPermutation] = []
    ps: list[int] = []
    while True:
        negative = [j for j, x in enumerate(w.window, 1) if x < 0]
        if not negative:
            perms.append(w)
            break
        p = negative[-1]
        head = sorted(abs(x) for x in w.window[:p])
        u = SignedPermutation(tuple(head) + w.window[p:])
        perms.append(u)
        ps.append(p)
        w = compose(compose(w, inverse(u)), tau_power(p, p, n))
    perms.reverse()
    ps.reverse()
    acc = perms[0]
    for u, p in zip(perms[1:], ps):
        acc = compose(compose(acc, tau_power(p, p, n)), u)
    assert acc == source, f"uv factorization does not multiply back to {e}"
    return UvFactorization(n, tuple(to_ogs(u) for u in perms), tuple(ps))
