"""
Text forms of group elements.

* window: ``[-2,-1,-4,-3]``
* Coxeter word: ``s0 s1 s2``
* tau product: ``tau1^-1*tau2*tau3^-1*tau4^-3`` (exponent defaults to 1)
* t product: ``t6*t8^2``
* identity: ``e``

The rank is the largest index mentioned (the window length, or one more
than the largest ``s`` letter) unless given explicitly.

>>> expr = parse("tau1^-1*tau2*tau3^-1*tau4^-3")
>>> expr.kind, expr.rank, expr.ogs.exps
('tau', 4, (-1, 1, -1, -3))
>>> str(parse("s0 s1", rank=3).permutation)
'[-2,1,3]'
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import SignedPermutation, compose, embed, eval_word, identity
from .ogs import OgsExponents, tau_power, to_ogs
from .sn import t_power

__all__ = ["ParseError", "ElementExpr", "parse"]


class ParseError(ValueError):
    """Malformed expression; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class ElementExpr:
    text: str
    kind: str
    rank: int
    permutation: SignedPermutation

    @property
    def ogs(self) -> OgsExponents:
        return to_ogs(self.permutation)


_INT = re.compile(r"\s*(-?\d+)\s*")
_LETTER = re.compile(r"s(\d+)")
_FACTOR = re.compile(r"\s*(tau|t)(\d+)(?:\^(-?\d+))?\s*")


def _parse_window(text: str) -> tuple[list[int], int]:
    values = []
    pos = 1
    if re.fullmatch(r"\[\s*\]", text):
        raise ParseError("empty window", 1)
    while True:
        m = _INT.match(text, pos)
        if not m:
            raise ParseError("expected an integer", pos)
        values.append(int(m.group(1)))
        pos = m.end()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == "]":
            if text[pos + 1:].strip():
                raise ParseError("unexpected text after window", pos + 1)
            return values, len(values)
        raise ParseError("expected ',' or ']'", pos)


def _parse_word(text: str) -> list[int]:
    letters = []
    for m in re.finditer(r"\S+", text):
        lm = _LETTER.fullmatch(m.group())
        if not lm:
            raise ParseError(f"expected a generator s<k>, got {m.group()!r}", m.start())
        letters.append(int(lm.group(1)))
    return letters


def _parse_product(text: str) -> tuple[str, list[tuple[int, int, int]]]:
    factors = []
    kinds = set()
    pos = 0
    while True:
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError("expected a factor tau<k>^<e> or t<k>^<e>", pos)
        kind, k = m.group(1), int(m.group(2))
        e = int(m.group(3)) if m.group(3) is not None else 1
        if k < 1:
            raise ParseError(f"index {kind}{k} must be at least 1", m.start(2))
        kinds.add(kind)
        if len(kinds) > 1:
            raise ParseError("cannot mix tau and t factors", m.start(1))
        factors.append((k, e, m.start(2)))
        pos = m.end()
        if pos == len(text):
            return kind, factors
        if text[pos] != "*":
            raise ParseError("expected '*'", pos)
        pos += 1


def parse(text: str, rank: int | None = None) -> ElementExpr:
    """
    >>> parse("[-2,-1,-4,-3]").ogs.exps
    (-1, 1, -1, -3)
    >>> parse("")
    Traceback (most recent call last):
    ...
    ogsbn.notation.ParseError: empty expression (at position 0)
    """
    if rank is not None and rank < 1:
        raise ParseError(f"rank must be positive, got {rank}", 0)
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if not body:
        raise ParseError("empty expression", 0)
    try:
        return _parse(text, body, rank)
    except ParseError as err:
        # positions were counted within the stripped text
        raise ParseError(err.message, err.position + offset) from None


def _check_rank(needed: int, rank: int | None, where: int) -> int:
    if rank is None:
        return needed
    if needed > rank:
        raise ParseError(f"index {needed} exceeds rank {rank}", where)
    return rank


def _parse(text: str, body: str, rank: int | None) -> ElementExpr:
    if body == "e":
        n = rank or 1
        return ElementExpr(text, "identity", n, identity(n))
    if body.startswith("["):
        values, n = _parse_window(body)
        try:
            w = SignedPermutation(tuple(values))
        except ValueError as err:
            raise ParseError(str(err), 0) from None
        n = _check_rank(n, rank, 0)
        return ElementExpr(text, "window", n, embed(w, n))
    if _LETTER.match(body):
        letters = _parse_word(body)
        n = _check_rank(max(letters) + 1, rank, 0)
        return ElementExpr(text, "word", n, eval_word(letters, n))
    kind, factors = _parse_product(body)
    top = max(factors, key=lambda f: f[0])
    n = _check_rank(top[0], rank, top[2])
    power = tau_power if kind == "tau" else t_power
    w = identity(n)
    for k, e, _ in factors:
        w = compose(w, power(k, e, n))
    return ElementExpr(text, kind, n, w)
