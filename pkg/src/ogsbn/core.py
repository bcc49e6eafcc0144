"""
Signed permutations of ``{±1, ..., ±n}`` and words over the Coxeter
generators ``s_0, ..., s_{n-1}`` of B_n.

Products are read left to right: ``(a * b)(j) == b(a(j))``.

>>> a = SignedPermutation((2, 1, 3))
>>> b = SignedPermutation((-1, 2, 3))
>>> (a * b).window
(2, -1, 3)
>>> eval_word([0, 1, 2], 3).window
(-3, 1, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "RankError", "SignedPermutation", "CoxeterWord",
    "identity", "generator", "compose", "inverse", "eval_word", "embed",
]


class RankError(ValueError):
    """Operands live in groups of different rank."""


@dataclass(frozen=True)
class SignedPermutation:
    """An element of B_n, stored by its window ``(w(1), ..., w(n))``."""
    window: tuple[int, ...]

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        n = len(window)
        if n == 0:
            raise ValueError("rank must be positive")
        if sorted(abs(x) for x in window) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation window: {list(window)}")
        object.__setattr__(self, "window", window)

    @classmethod
    def _trusted(cls, window: tuple[int, ...]) -> SignedPermutation:
        # skip validation for windows built from valid ones
        obj = object.__new__(cls)
        object.__setattr__(obj, "window", window)
        return obj

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, j: int) -> int:
        """Image of the signed point ``j``; ``w(0) == 0`` by convention."""
        if j == 0:
            return 0
        if j > 0:
            return self.window[j - 1]
        return -self.window[-j - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __invert__(self) -> SignedPermutation:
        return inverse(self)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self.window) + "]"

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self.window, 1))

    def unsigned(self) -> tuple[int, ...]:
        """The underlying permutation ``[|w(1)|, ..., |w(n)|]`` of S_n."""
        return tuple(abs(x) for x in self.window)


@dataclass(frozen=True)
class CoxeterWord:
    """A sequence of generator indices, each in ``0 .. n-1``."""
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if not 0 <= x < self.n:
                raise ValueError(f"letter s{x} outside s0..s{self.n - 1}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: CoxeterWord) -> CoxeterWord:
        if self.n != other.n:
            raise RankError(f"rank {self.n} != rank {other.n}")
        return CoxeterWord(self.n, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(f"s{x}" for x in self.letters)

    def evaluate(self) -> SignedPermutation:
        return eval_word(self.letters, self.n)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)))


def generator(i: int, n: int) -> SignedPermutation:
    """``s_0`` negates 1; ``s_i`` swaps ``i`` and ``i+1`` for ``i >= 1``."""
    if not 0 <= i < n:
        raise ValueError(f"no generator s{i} in B_{n}")
    window = list(range(1, n + 1))
    if i == 0:
        window[0] = -1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation(tuple(window))


def compose(a: SignedPermutation, b: SignedPermutation) -> SignedPermutation:
    """Left-to-right product: apply ``a`` first, then ``b``."""
    if a.n != b.n:
        raise RankError(f"rank {a.n} != rank {b.n}")
    bw = b.window
    return SignedPermutation._trusted(tuple(bw[x - 1] if x > 0 else -bw[-x - 1] for x in a.window))


def inverse(a: SignedPermutation) -> SignedPermutation:
    out = [0] * a.n
    for j, x in enumerate(a.window, 1):
        if x > 0:
            out[x - 1] = j
        else:
            out[-x - 1] = -j
    return SignedPermutation._trusted(tuple(out))


def eval_word(word: Iterable[int] | CoxeterWord, n: int | None = None) -> SignedPermutation:
    """
    Left-to-right product of the generators named by ``word``.

    >>> eval_word([], 2).window
    (1, 2)
    >>> eval_word([1, 0, 1, 0], 2) == eval_word([0, 1, 0, 1], 2)
    True
    """
    if isinstance(word, CoxeterWord):
        n, word = word.n, word.letters
    if n is None:
        raise TypeError("rank required for a bare letter sequence")
    # s_i acts on the right, so each letter permutes window entries by value
    window = list(range(1, n + 1))
    for i in word:
        if not 0 <= i < n:
            raise ValueError(f"letter s{i} outside s0..s{n - 1}")
        if i == 0:
            for pos, x in enumerate(window):
                if abs(x) == 1:
                    window[pos] = -x
        else:
            for pos, x in enumerate(window):
                if abs(x) == i:
                    window[pos] = i + 1 if x > 0 else -(i + 1)
                elif abs(x) == i + 1:
                    window[pos] = i if x > 0 else -i
    return SignedPermutation(tuple(window))


def embed(w: SignedPermutation, m: int) -> SignedPermutation:
    """Widen ``w`` to rank ``m >= w.n`` by fixing the new points."""
    if m < w.n:
        raise RankError(f"cannot embed rank {w.n} into rank {m}")
    return SignedPermutation(w.window + tuple(range(w.n + 1, m + 1)))


def from_window(window: Sequence[int]) -> SignedPermutation:
    return SignedPermutation(tuple(window))
